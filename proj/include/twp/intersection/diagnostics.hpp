#pragma once

#include <vector>

#include "twp/ring/rational.hpp"
#include "twp/ring/real.hpp"

namespace twp {

// Exact <tau_{p_1}..tau_{p_k} tau_2^{3g-3+k-|p|}>_g over its large-genus
// equivalent; entries of pvec are >= 2.
Real mp_asymptotic_ratio(int g, const std::vector<int>& pvec,
                         long precision = kDefaultPrecision);

// The large-genus equivalent itself.
Real mp_asymptotic_value(int g, const std::vector<int>& pvec,
                         long precision = kDefaultPrecision);

struct ComparisonBound {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs <= rhs; }
};

// Both sides of the comparison between a correlator with extra insertions
// tau_{q_i+1} and the one without; entries of pvec and qvec are >= 1.
ComparisonBound comparison_bound(int g, const std::vector<int>& pvec,
                                 const std::vector<int>& qvec);
bool check_comparison_bound(int g, const std::vector<int>& pvec,
                            const std::vector<int>& qvec);

}  // namespace twp
