#include "twp/ring/pi_poly.hpp"

#include "twp/errors.hpp"

namespace twp {

PiPoly::PiPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

PiPoly PiPoly::monomial(int exponent, const Rational& c) {
  if (exponent < 0) throw UserError("negative pi^2 exponent");
  PiPoly p;
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

Rational PiPoly::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool PiPoly::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int PiPoly::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

void PiPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PiPoly PiPoly::operator-() const {
  PiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PiPoly& PiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  PiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

Real PiPoly::evaluate(long precision) const {
  const long wp = precision + 16;
  const Real pi2 = pow(Real::pi(wp), 2L);
  Real sum(0L, wp);
  for (const auto& [e, c] : terms_) sum += Real(c, wp) * pow(pi2, static_cast<long>(e));
  return sum.with_precision(precision);
}

std::string PiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = abs(c);
    if (e == 0) {
      out += to_display_string(mag);
      continue;
    }
    if (mag != 1) out += to_display_string(mag) + "*";
    out += e == 1 ? "pi^2" : "pi^" + std::to_string(2 * e);
  }
  return out;
}

nlohmann::json PiPoly::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : terms_) j.push_back({e, to_canonical_string(c)});
  return j;
}

PiPoly PiPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw UserError("PiPoly JSON must be an array");
  PiPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) {
      throw UserError("PiPoly term must be [exponent, \"num/den\"]");
    }
    p.add_term(term[0].get<int>(), parse_rational(term[1].get<std::string>()));
  }
  return p;
}

}  // namespace twp
