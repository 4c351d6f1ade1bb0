#include "twp/ring/tight_poly.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <string>

#include "twp/errors.hpp"

namespace twp {

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  return boost::hash_range(e.begin(), e.end());
}

TightPoly::TightPoly(int n_boundaries, int m_count) : n_(n_boundaries), d_(m_count) {
  if (n_ < 0 || d_ < 0) throw UserError("TightPoly shape must be non-negative");
}

TightPoly TightPoly::constant(int n_boundaries, int m_count, const Rational& c) {
  TightPoly p(n_boundaries, m_count);
  p.add_term(Exponents(static_cast<std::size_t>(n_boundaries + m_count), 0), c);
  return p;
}

TightPoly TightPoly::ell(int n_boundaries, int m_count, int i) {
  if (i < 1 || i > n_boundaries) throw UserError("boundary index out of range");
  TightPoly p(n_boundaries, m_count);
  Exponents e(static_cast<std::size_t>(n_boundaries + m_count), 0);
  e[i - 1] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

TightPoly TightPoly::m(int n_boundaries, int m_count, int k) {
  if (k < 1 || k > m_count) throw UserError("moment index out of range");
  TightPoly p(n_boundaries, m_count);
  Exponents e(static_cast<std::size_t>(n_boundaries + m_count), 0);
  e[n_boundaries + k - 1] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

Rational TightPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TightPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != static_cast<std::size_t>(n_ + d_)) {
    throw UserError("monomial length does not match polynomial shape");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TightPoly::add_term(Exponents&& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != static_cast<std::size_t>(n_ + d_)) {
    throw UserError("monomial length does not match polynomial shape");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int TightPoly::graded_degree(const Exponents& e) const {
  int deg = 0;
  for (int i = 0; i < n_; ++i) deg += e[i];
  for (int k = 1; k <= d_; ++k) deg += k * e[n_ + k - 1];
  return deg;
}

std::vector<TightPoly::Term> TightPoly::sorted_terms() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [this](const Term& a, const Term& b) {
    const int da = graded_degree(a.first);
    const int db = graded_degree(b.first);
    if (da != db) return da < db;
    // m-block first, then l-block, larger exponents first
    for (int k = 0; k < d_; ++k) {
      const auto ea = a.first[n_ + k];
      const auto eb = b.first[n_ + k];
      if (ea != eb) return ea > eb;
    }
    for (int i = 0; i < n_; ++i) {
      if (a.first[i] != b.first[i]) return a.first[i] > b.first[i];
    }
    return false;
  });
  return out;
}

void TightPoly::check_shape(const TightPoly& o) const {
  if (n_ != o.n_ || d_ != o.d_) {
    throw UserError("TightPoly shape mismatch: (" + std::to_string(n_) + "," +
                    std::to_string(d_) + ") vs (" + std::to_string(o.n_) + "," +
                    std::to_string(o.d_) + ")");
  }
}

TightPoly TightPoly::operator-() const {
  TightPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TightPoly& TightPoly::operator+=(const TightPoly& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TightPoly& TightPoly::operator-=(const TightPoly& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TightPoly& TightPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TightPoly operator*(const TightPoly& a, const TightPoly& b) {
  a.check_shape(b);
  TightPoly r(a.n_, a.d_);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  Exponents e(static_cast<std::size_t>(a.n_ + a.d_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        const int s = ea[i] + eb[i];
        if (s > 255) throw BudgetError("monomial exponent exceeds 255");
        e[i] = static_cast<std::uint8_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const TightPoly& a, const TightPoly& b) {
  return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
}

TightPoly TightPoly::embedded(int n_boundaries, int m_count, int ell_offset) const {
  if (ell_offset < 0 || n_ + ell_offset > n_boundaries || m_count < d_) {
    throw UserError("embedding target is smaller than the source polynomial");
  }
  TightPoly r(n_boundaries, m_count);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Exponents out(static_cast<std::size_t>(n_boundaries + m_count), 0);
    for (int i = 0; i < n_; ++i) out[i + ell_offset] = e[i];
    for (int k = 0; k < d_; ++k) out[n_boundaries + k] = e[n_ + k];
    r.terms_.emplace(std::move(out), c);
  }
  return r;
}

TightPoly TightPoly::permuted_boundaries(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw UserError("permutation size does not match boundary count");
  }
  TightPoly r(n_, d_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Exponents out = e;
    for (int i = 0; i < n_; ++i) out[perm[i]] = e[i];
    r.terms_.emplace(std::move(out), c);
  }
  return r;
}

nlohmann::json TightPoly::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [e, c] : sorted_terms()) {
    nlohmann::json ell = nlohmann::json::array();
    nlohmann::json m = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) ell.push_back(static_cast<int>(e[i]));
    for (int k = 0; k < d_; ++k) m.push_back(static_cast<int>(e[n_ + k]));
    rows.push_back({std::move(ell), std::move(m), to_canonical_string(c)});
  }
  return rows;
}

TightPoly TightPoly::from_json(int n_boundaries, int m_count, const nlohmann::json& j) {
  if (!j.is_array()) throw UserError("TightPoly JSON must be an array");
  TightPoly p(n_boundaries, m_count);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 3 || row[0].size() != static_cast<std::size_t>(n_boundaries) ||
        row[1].size() != static_cast<std::size_t>(m_count)) {
      throw UserError("TightPoly row does not match shape");
    }
    Exponents e;
    e.reserve(static_cast<std::size_t>(n_boundaries + m_count));
    for (const auto& x : row[0]) e.push_back(static_cast<std::uint8_t>(x.get<int>()));
    for (const auto& x : row[1]) e.push_back(static_cast<std::uint8_t>(x.get<int>()));
    p.add_term(std::move(e), parse_rational(row[2].get<std::string>()));
  }
  return p;
}

TightPoly poly_add(const TightPoly& a, const TightPoly& b) { return a + b; }

TightPoly poly_mul(const TightPoly& a, const TightPoly& b) { return a * b; }

TightPoly poly_dm(const TightPoly& p, int index) {
  if (index < 1 || index > p.m_count()) {
    throw UserError("d/dm_" + std::to_string(index) + " out of range for m_count " +
                    std::to_string(p.m_count()));
  }
  const std::size_t slot = static_cast<std::size_t>(p.n_boundaries() + index - 1);
  TightPoly r(p.n_boundaries(), p.m_count());
  for (const auto& [e, c] : p.terms()) {
    if (e[slot] == 0) continue;
    Exponents out = e;
    out[slot] = static_cast<std::uint8_t>(e[slot] - 1);
    r.add_term(std::move(out), c * e[slot]);
  }
  return r;
}

TightPoly poly_integrate_boundary(const TightPoly& p, int boundary) {
  if (boundary < 1 || boundary > p.n_boundaries()) {
    throw UserError("boundary " + std::to_string(boundary) + " out of range");
  }
  const std::size_t slot = static_cast<std::size_t>(boundary - 1);
  TightPoly r(p.n_boundaries(), p.m_count());
  for (const auto& [e, c] : p.terms()) {
    Exponents out = e;
    if (e[slot] == 255) throw BudgetError("monomial exponent exceeds 255");
    out[slot] = static_cast<std::uint8_t>(e[slot] + 1);
    r.add_term(std::move(out), c / (2 * (e[slot] + 1)));
  }
  return r;
}

namespace {

// powers[v][k] = value_v^k for k up to the largest exponent of variable v.
template <typename T, typename One>
std::vector<std::vector<T>> power_tables(const TightPoly& p, std::span<const T> ell,
                                         std::span<const T> m, One one) {
  const int n = p.n_boundaries();
  const int d = p.m_count();
  std::vector<int> max_exp(static_cast<std::size_t>(n + d), 0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) max_exp[i] = std::max<int>(max_exp[i], e[i]);
  }
  std::vector<std::vector<T>> tables(static_cast<std::size_t>(n + d));
  for (int v = 0; v < n + d; ++v) {
    const T& x = v < n ? ell[v] : m[v - n];
    auto& t = tables[v];
    t.push_back(one);
    for (int k = 1; k <= max_exp[v]; ++k) t.push_back(t.back() * x);
  }
  return tables;
}

}  // namespace

PolyEvaluation poly_eval(const TightPoly& p, std::span<const Real> ell_values,
                         std::span<const Real> m_values, long precision,
                         double cancellation_threshold) {
  if (ell_values.size() != static_cast<std::size_t>(p.n_boundaries()) ||
      m_values.size() != static_cast<std::size_t>(p.m_count())) {
    throw UserError("poly_eval: value counts do not match polynomial shape");
  }
  if (precision < 53) throw UserError("poly_eval: precision must be >= 53 bits");
  std::vector<Real> ell(ell_values.begin(), ell_values.end());
  std::vector<Real> m(m_values.begin(), m_values.end());
  for (auto& x : ell) x = x.with_precision(precision);
  for (auto& x : m) x = x.with_precision(precision);
  const auto tables = power_tables<Real>(p, ell, m, Real(1L, precision));

  Real sum(0L, precision);
  Real compensation(0L, precision);
  Real magnitude(0L, precision);
  for (const auto& [e, c] : p.terms()) {
    Real term(c, precision);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) term *= tables[v][e[v]];
    }
    magnitude += abs(term);
    const Real next = sum + term;
    if (abs(sum) >= abs(term)) {
      compensation += (sum - next) + term;
    } else {
      compensation += (term - next) + sum;
    }
    sum = next;
  }
  PolyEvaluation out{sum + compensation, magnitude, false};
  if (!magnitude.is_zero() && abs(out.value) < magnitude * cancellation_threshold) {
    out.cancellation = true;
  }
  return out;
}

PiPoly poly_eval_exact(const TightPoly& p, std::span<const PiPoly> ell_values,
                       std::span<const PiPoly> m_values) {
  if (ell_values.size() != static_cast<std::size_t>(p.n_boundaries()) ||
      m_values.size() != static_cast<std::size_t>(p.m_count())) {
    throw UserError("poly_eval_exact: value counts do not match polynomial shape");
  }
  const auto tables = power_tables<PiPoly>(p, ell_values, m_values, PiPoly(1L));
  PiPoly sum;
  for (const auto& [e, c] : p.terms()) {
    PiPoly term(c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) term = term * tables[v][e[v]];
    }
    sum += term;
  }
  return sum;
}

}  // namespace twp
