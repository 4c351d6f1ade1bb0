#include "twp/tightpoly/poly.hpp"

#include <cstdlib>
#include <functional>
#include <random>

#include "twp/errors.hpp"
#include "twp/intersection/tau.hpp"
#include "twp/tightpoly/store.hpp"

namespace twp {

bool admissible(int g, int n) {
  if (g < 0 || n < 0) return false;
  if (g == 0) return n >= 3;
  if (g == 1) return n >= 1;
  return true;
}

namespace {

void require_admissible(int g, int n) {
  if (!admissible(g, n)) {
    throw UserError("(g,n) = (" + std::to_string(g) + "," + std::to_string(n) +
                    ") is not admissible");
  }
}

std::uint8_t bump(std::uint8_t x, int by) {
  const int v = x + by;
  if (v > 255) throw BudgetError("monomial exponent exceeds 255");
  return static_cast<std::uint8_t>(v);
}

}  // namespace

TightPoly build_p_g0(int g) {
  if (g < 2) throw UserError("P_{g,0} needs g >= 2");
  const int d = 3 * g - 3;
  TightPoly out(0, d);
  // parts j = k-1 >= 1 with multiplicity mult[j], sum j*mult[j] = d
  std::vector<int> mult(static_cast<std::size_t>(d) + 1, 0);
  std::function<void(int, int)> walk = [&](int largest, int remaining) {
    if (remaining == 0) {
      std::vector<int> idx;
      Exponents e(static_cast<std::size_t>(d), 0);
      Integer denom = 1;
      int parts = 0;
      for (int j = 1; j <= d; ++j) {
        for (int c = 0; c < mult[j]; ++c) idx.push_back(j + 1);
        e[j - 1] = static_cast<std::uint8_t>(mult[j]);
        denom *= factorial(mult[j]);
        parts += mult[j];
      }
      Rational c = intersection_number(TauKey(g, idx)) / Rational(denom);
      if (parts % 2 != 0) c = -c;
      out.add_term(std::move(e), c);
      return;
    }
    for (int j = std::min(largest, remaining); j >= 1; --j) {
      ++mult[j];
      walk(j, remaining - j);
      --mult[j];
    }
  };
  walk(d, d);
  return out;
}

TightPoly recursion_step(const TightPoly& previous, int g, int n) {
  require_admissible(g, n);
  if (n < 1 || 2 * g - 3 + n <= 0) throw UserError("recursion step needs 2g-3+n > 0");
  const int d = 3 * g - 3 + n;
  if (previous.n_boundaries() != n - 1 || previous.m_count() != d - 1) {
    throw UserError("recursion step got a polynomial of the wrong shape");
  }
  const TightPoly e = previous.embedded(n, d, 1);
  TightPoly out(n, d);
  const std::size_t l1 = 0;
  const auto mslot = [n](int k) { return static_cast<std::size_t>(n + k - 1); };

  std::vector<Rational> ell_weight(static_cast<std::size_t>(d) + 1);
  for (int p = 1; p <= d - 1; ++p) {
    Integer w = factorial(p + 1);
    w <<= static_cast<mp_bitcnt_t>(p + 1);
    ell_weight[p] = Rational(Integer(1), w);
  }
  const int prefactor = 2 * g - 3 + n;

  for (const auto& [ex, c] : e.terms()) {
    // sum_p (m_{p+1} - l_1^{p+1}/(2^{p+1}(p+1)!) - m_1 m_p + l_1 m_p / 2) dP/dm_p
    for (int p = 1; p <= d - 1; ++p) {
      const int a = ex[mslot(p)];
      if (a == 0) continue;
      const Rational ca = c * a;
      Exponents base = ex;
      base[mslot(p)] = static_cast<std::uint8_t>(a - 1);

      Exponents t = base;
      t[mslot(p + 1)] = bump(t[mslot(p + 1)], 1);
      out.add_term(std::move(t), ca);

      t = base;
      t[l1] = bump(t[l1], p + 1);
      out.add_term(std::move(t), -ca * ell_weight[p]);

      t = base;
      t[mslot(1)] = bump(t[mslot(1)], 1);
      t[mslot(p)] = bump(t[mslot(p)], 1);
      out.add_term(std::move(t), -ca);

      t = std::move(base);
      t[l1] = bump(t[l1], 1);
      t[mslot(p)] = bump(t[mslot(p)], 1);
      out.add_term(std::move(t), ca / 2);
    }
    // (2g-3+n)(-m_1 + l_1/2) P
    if (prefactor != 0) {
      Exponents t = ex;
      t[mslot(1)] = bump(t[mslot(1)], 1);
      out.add_term(std::move(t), -c * prefactor);
      t = ex;
      t[l1] = bump(t[l1], 1);
      out.add_term(std::move(t), c * prefactor / 2);
    }
    // boundary integrals, i = 2..n
    for (int i = 2; i <= n; ++i) {
      const std::size_t slot = static_cast<std::size_t>(i - 1);
      Exponents t = ex;
      const int q = t[slot];
      t[slot] = bump(t[slot], 1);
      out.add_term(std::move(t), c / (2 * q + 2));
    }
  }
  return out;
}

TightPoly poly_dm_multi(const TightPoly& p, const std::vector<int>& pvec) {
  TightPoly out = p;
  for (int k : pvec) {
    if (k < 1) throw UserError("derivative indices must be >= 1");
    if (k > out.m_count()) return TightPoly(p.n_boundaries(), p.m_count());
    out = poly_dm(out, k);
  }
  return out;
}

ValidationReport validate_cell_report(const PolyCell& cell, int sigma_samples,
                                      std::uint64_t seed) {
  ValidationReport report;
  const TightPoly& p = cell.poly;
  const int n = p.n_boundaries();
  if (n >= 2) {
    std::vector<int> swap(static_cast<std::size_t>(n));
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    if (!(p.permuted_boundaries(swap) == p)) {
      report.symmetric = false;
      report.detail += "not invariant under swapping boundaries 1 and 2; ";
    }
    if (n > 2 && !(p.permuted_boundaries(cycle) == p)) {
      report.symmetric = false;
      report.detail += "not invariant under the boundary cycle; ";
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(2, 97);
  const int d = cell.degree();
  for (int s = 0; s < sigma_samples && report.graded; ++s) {
    const Rational sigma(pick(rng), pick(rng) + 100);
    Rational sigma_d = 1;
    for (int i = 0; i < d; ++i) sigma_d *= sigma;
    for (const auto& [e, c] : p.terms()) {
      Rational scaled = c;
      const int deg = p.graded_degree(e);
      for (int i = 0; i < deg; ++i) scaled *= sigma;
      if (scaled != c * sigma_d) {
        report.graded = false;
        report.detail += "sigma-scaling fails: a monomial has graded degree " +
                         std::to_string(deg) + " instead of " + std::to_string(d) + "; ";
        break;
      }
    }
  }
  if (p.m_count() != d || p.n_boundaries() != cell.boundaries) {
    report.graded = false;
    report.detail += "shape does not match (g,n); ";
  }
  return report;
}

bool validate_cell(const PolyCell& cell, int sigma_samples) {
  return validate_cell_report(cell, sigma_samples).ok();
}

PolyCache::PolyCache(std::optional<std::filesystem::path> dir, std::size_t budget)
    : budget_(budget) {
  set_directory(std::move(dir));
}

void PolyCache::set_directory(std::optional<std::filesystem::path> dir) {
  dir_ = std::move(dir);
  if (dir_) default_intersection_engine().load(*dir_ / "tau.twp");
}

void PolyCache::flush_intersections() const {
  if (dir_) default_intersection_engine().save(*dir_ / "tau.twp");
}

std::shared_ptr<const PolyCell> PolyCache::find(int g, int n) const {
  std::lock_guard lock(mutex_);
  const auto it = cells_.find({g, n});
  return it == cells_.end() ? nullptr : it->second;
}

std::shared_ptr<const PolyCell> PolyCache::publish(PolyCell cell) {
  auto ptr = std::make_shared<const PolyCell>(std::move(cell));
  std::lock_guard lock(mutex_);
  return cells_.emplace(std::make_pair(ptr->genus, ptr->boundaries), ptr).first->second;
}

std::shared_ptr<const PolyCell> PolyCache::get(int g, int n) {
  require_admissible(g, n);
  if (auto hit = find(g, n)) return hit;
  if (dir_) {
    if (auto stored = load_cell(*dir_, g, n)) return publish(std::move(*stored));
  }
  const int d = 3 * g - 3 + n;
  PolyCell cell{g, n, TightPoly(n, d)};
  if (g == 0 && n == 3) {
    cell.poly = TightPoly::constant(3, 0, 1);
  } else if (g == 1 && n == 1) {
    cell.poly = Rational(1, 24) * (TightPoly::ell(1, 1, 1) * Rational(1, 2) - TightPoly::m(1, 1, 1));
  } else if (n == 0) {
    cell.poly = build_p_g0(g);
    flush_intersections();
  } else {
    const auto previous = get(g, n - 1);
    cell.poly = recursion_step(previous->poly, g, n);
  }
  if (cell.poly.size() > budget_) {
    throw BudgetError("P_{" + std::to_string(g) + "," + std::to_string(n) + "} has " +
                      std::to_string(cell.poly.size()) + " monomials, over the budget of " +
                      std::to_string(budget_));
  }
  if (dir_) store_cell(*dir_, cell);
  return publish(std::move(cell));
}

PolyCache& default_poly_cache() {
  static PolyCache cache = [] {
    const char* env = std::getenv("TWP_CACHE_DIR");
    if (env != nullptr && *env != '\0') return PolyCache(std::filesystem::path(env));
    return PolyCache();
  }();
  return cache;
}

PolyCell p_g0(int g) {
  if (g < 2) throw UserError("P_{g,0} needs g >= 2");
  return *default_poly_cache().get(g, 0);
}

PolyCell p_gn(int g, int n) { return *default_poly_cache().get(g, n); }

}  // namespace twp
