#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twp/ring/pi_poly.hpp"
#include "twp/ring/rational.hpp"
#include "twp/ring/real.hpp"

namespace twp {

// Exponent vector of one monomial: the l-block (l_i = L_i^2, i = 1..n)
// followed by the m-block (m_1..m_D).
using Exponents = std::vector<std::uint8_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

// Sparse polynomial in l_1..l_n, m_1..m_D with rational coefficients. The
// graded degree of a monomial is sum_i q_i + sum_k k * e_k.
class TightPoly {
 public:
  using Terms = std::unordered_map<Exponents, Rational, ExponentsHash>;
  using Term = std::pair<Exponents, Rational>;

  TightPoly(int n_boundaries, int m_count);

  static TightPoly constant(int n_boundaries, int m_count, const Rational& c);
  static TightPoly ell(int n_boundaries, int m_count, int i);  // l_i, 1-based
  static TightPoly m(int n_boundaries, int m_count, int k);    // m_k, 1-based

  int n_boundaries() const { return n_; }
  int m_count() const { return d_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Rational coefficient(const Exponents& e) const;
  // Adds c to the coefficient of e, dropping the entry if it cancels.
  void add_term(const Exponents& e, const Rational& c);
  void add_term(Exponents&& e, const Rational& c);

  int graded_degree(const Exponents& e) const;
  // Terms sorted by graded degree, then by the m-block and l-block
  // exponents in decreasing lexicographic order.
  std::vector<Term> sorted_terms() const;

  TightPoly operator-() const;
  TightPoly& operator+=(const TightPoly& o);
  TightPoly& operator-=(const TightPoly& o);
  TightPoly& operator*=(const Rational& c);
  friend TightPoly operator+(TightPoly a, const TightPoly& b) { return a += b; }
  friend TightPoly operator-(TightPoly a, const TightPoly& b) { return a -= b; }
  friend TightPoly operator*(const TightPoly& a, const TightPoly& b);
  friend TightPoly operator*(TightPoly a, const Rational& c) { return a *= c; }
  friend TightPoly operator*(const Rational& c, TightPoly a) { return a *= c; }
  friend bool operator==(const TightPoly& a, const TightPoly& b);

  // Re-embeds into a larger shape: boundary i moves to i + ell_offset and the
  // m-block is zero-padded up to m_count.
  TightPoly embedded(int n_boundaries, int m_count, int ell_offset) const;
  // Boundary i (0-based) moves to position perm[i].
  TightPoly permuted_boundaries(std::span<const int> perm) const;

  // [[l-exponents], [m-exponents], "num/den"] rows in monomial order.
  nlohmann::json to_json() const;
  static TightPoly from_json(int n_boundaries, int m_count, const nlohmann::json& j);

 private:
  void check_shape(const TightPoly& o) const;

  int n_;
  int d_;
  Terms terms_;
};

// Thin named entry points used throughout the recursion code.
TightPoly poly_add(const TightPoly& a, const TightPoly& b);
TightPoly poly_mul(const TightPoly& a, const TightPoly& b);
// d/dm_index, 1 <= index <= m_count.
TightPoly poly_dm(const TightPoly& p, int index);
// x -> integral_0^{L} x p(x, ...) dx in the given boundary slot: with
// l = L^2 each l^q becomes l^(q+1) / (2q + 2).
TightPoly poly_integrate_boundary(const TightPoly& p, int boundary);

struct PolyEvaluation {
  Real value;
  Real magnitude;  // sum of |term|
  bool cancellation = false;
};

// Direct term-by-term evaluation with Neumaier summation. The cancellation
// flag is raised when |value| < threshold * magnitude.
PolyEvaluation poly_eval(const TightPoly& p, std::span<const Real> ell_values,
                         std::span<const Real> m_values, long precision,
                         double cancellation_threshold = 1e-6);

// Exact evaluation over Q[pi^2].
PiPoly poly_eval_exact(const TightPoly& p, std::span<const PiPoly> ell_values,
                       std::span<const PiPoly> m_values);

}  // namespace twp
