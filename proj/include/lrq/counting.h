#pragma once

// Exact and log-domain counting used by the random-robustness argument:
// Gaussian binomials, the bad-matrix sets M(n, r, t), the codeword
// probability bound and the GV-type feasibility region.

#include "lrq/rational.h"

#include <cstddef>
#include <vector>

namespace lrq {

/// Number of y-dimensional subspaces of F_2^x. Throws if y > x.
BigInt gaussian_binomial(unsigned x, unsigned y);

struct GaussianBracket {
  BigInt value, lower, upper; // 2^{y(x-y)}, 8 * 2^{y(x-y)}
  bool holds = false;
};
GaussianBracket gaussian_bracket(unsigned x, unsigned y);

/// Binary entropy in bits, h(0) = h(1) = 0.
double binary_entropy(double p);

/// hist[r][w]: number of n x n matrices of rank r whose largest row or column
/// weight is exactly w. Exhaustive, so n <= 5.
using BadMatrixHistogram = std::vector<std::vector<BigInt>>;
BadMatrixHistogram bad_matrix_histogram(unsigned n);
/// |M(n, r, t)| from the histogram: rank r, all rows and columns of weight < t.
BigInt bad_matrix_count(const BadMatrixHistogram &h, unsigned r, unsigned t);

/// log2 of the upper bound 2^{2 r n h(t/n) + 2 n h(r/n)}.
double log2_bad_matrix_bound(unsigned n, unsigned r, unsigned t);
/// log2 of 512 (r+1) 2^{-(3/4)(n-ka)(n-kb) r / n}.
double log2_codeword_probability_bound(unsigned n, unsigned r, unsigned ka,
                                       unsigned kb);

struct UnionBoundRow {
  unsigned r = 0;
  double log2_pairs = 0;  // log2 binom(Delta, s)^2, exact count
  double log2_bad = 0;    // log2 of the |M| bound at n = Delta - s
  double log2_prob = 0;
  double log2_term = 0;   // sum of the three
  bool exhaustive = false;
  BigInt bad_exact = 0;   // when n <= 5
  bool bad_bound_holds = true;
};
struct UnionBoundReport {
  std::vector<UnionBoundRow> rows; // r = 1 .. Delta - s
  double log2_total = 0;           // log2 of the summed terms
  bool all_exhaustive_hold = true;
};
/// Requires t <= (Delta - s)/2 and s < Delta; std::invalid_argument otherwise.
UnionBoundReport union_bound_report(unsigned delta, unsigned s, unsigned t,
                                    unsigned ka, unsigned kb);

struct Gv2dValue {
  double lhs = 0, rhs = 0;
  bool feasible = false; // lhs + 1e-9 < rhs
};
/// Throws std::domain_error outside delta1 in (0,1/2),
/// delta2 in (0, delta1 (1 - delta1/2) / 8).
Gv2dValue gv2d_evaluate(double rho_a, double rho_b, double delta1,
                        double delta2);
bool gv2d_feasible(double rho_a, double rho_b, double delta1, double delta2);
double gv2d_delta2_max(double delta1);

struct Gv2dPoint {
  double delta1 = 0, delta2 = 0;
  Gv2dValue value;
};
/// delta1 = (i+1)/(2(n1+1)) for i < n1 and, for each, delta2 = (j+1)/(n2+1)
/// times the open upper limit.
std::vector<Gv2dPoint> gv2d_region(double rho_a, double rho_b, unsigned n1,
                                   unsigned n2);

} // namespace lrq
