#include "lrq/counting.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace lrq {

BigInt gaussian_binomial(unsigned x, unsigned y) {
  if (y > x)
    throw std::invalid_argument("gaussian_binomial: y > x");
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < y; ++i) {
    num *= (BigInt(1) << (x - i)) - 1;
    den *= (BigInt(1) << (i + 1)) - 1;
  }
  return num / den;
}

GaussianBracket gaussian_bracket(unsigned x, unsigned y) {
  GaussianBracket g;
  g.value = gaussian_binomial(x, y);
  g.lower = BigInt(1) << (y * (x - y));
  g.upper = g.lower * 8;
  g.holds = g.lower <= g.value && g.value <= g.upper;
  return g;
}

double binary_entropy(double p) {
  if (p <= 0 || p >= 1)
    return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

namespace {

unsigned small_rank(std::array<std::uint32_t, 8> rows, unsigned n) {
  unsigned r = 0;
  for (unsigned col = 0; col < n && r < n; ++col) {
    const std::uint32_t bit = 1u << col;
    unsigned p = r;
    while (p < n && !(rows[p] & bit))
      ++p;
    if (p == n)
      continue;
    std::swap(rows[p], rows[r]);
    for (unsigned i = 0; i < n; ++i)
      if (i != r && (rows[i] & bit))
        rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

double log2_big(const BigInt &v) {
  if (v <= 0)
    return -INFINITY;
  const unsigned bits = static_cast<unsigned>(msb(v));
  if (bits < 60)
    return std::log2(static_cast<double>(v));
  BigInt top = v >> (bits - 52);
  return std::log2(static_cast<double>(top)) + (bits - 52);
}

} // namespace

BadMatrixHistogram bad_matrix_histogram(unsigned n) {
  if (n > 5)
    throw std::invalid_argument("bad_matrix_histogram: n > 5 is not "
                                "exhaustively enumerable here");
  std::vector<std::vector<std::uint64_t>> cnt(n + 1,
                                              std::vector<std::uint64_t>(n + 1));
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const std::uint32_t rmask = (1u << n) - 1;
  std::array<std::uint32_t, 8> rows{};
  for (std::uint64_t m = 0; m < total; ++m) {
    unsigned w = 0;
    for (unsigned i = 0; i < n; ++i) {
      rows[i] = static_cast<std::uint32_t>(m >> (i * n)) & rmask;
      w = std::max<unsigned>(w, std::popcount(rows[i]));
    }
    for (unsigned j = 0; j < n; ++j) {
      unsigned cw = 0;
      for (unsigned i = 0; i < n; ++i)
        cw += (rows[i] >> j) & 1;
      w = std::max(w, cw);
    }
    ++cnt[small_rank(rows, n)][w];
  }
  BadMatrixHistogram h(n + 1, std::vector<BigInt>(n + 1));
  for (unsigned r = 0; r <= n; ++r)
    for (unsigned w = 0; w <= n; ++w)
      h[r][w] = cnt[r][w];
  return h;
}

BigInt bad_matrix_count(const BadMatrixHistogram &h, unsigned r, unsigned t) {
  if (r >= h.size())
    return 0;
  BigInt s = 0;
  for (unsigned w = 0; w < t && w < h[r].size(); ++w)
    s += h[r][w];
  return s;
}

double log2_bad_matrix_bound(unsigned n, unsigned r, unsigned t) {
  const double dn = n;
  return 2.0 * r * dn * binary_entropy(t / dn) +
         2.0 * dn * binary_entropy(r / dn);
}

double log2_codeword_probability_bound(unsigned n, unsigned r, unsigned ka,
                                       unsigned kb) {
  const double dn = n;
  return std::log2(512.0 * (r + 1)) -
         0.75 * (dn - ka) * (dn - kb) / dn * r;
}

UnionBoundReport union_bound_report(unsigned delta, unsigned s, unsigned t,
                                    unsigned ka, unsigned kb) {
  if (s >= delta)
    throw std::invalid_argument("union_bound_report: need s < Delta");
  const unsigned n = delta - s;
  if (2 * t > n)
    throw std::invalid_argument("union_bound_report: need t <= (Delta-s)/2");
  if (ka > n || kb > n)
    throw std::invalid_argument("union_bound_report: dimension exceeds Delta-s");
  UnionBoundReport rep;
  BadMatrixHistogram hist;
  const bool exhaustive = n <= 5;
  if (exhaustive)
    hist = bad_matrix_histogram(n);
  BigInt choose = 1;
  for (unsigned i = 0; i < s; ++i)
    choose = choose * (delta - i) / (i + 1);
  const double log2_pairs = 2 * log2_big(choose);
  double acc = -INFINITY;
  for (unsigned r = 1; r <= n; ++r) {
    UnionBoundRow row;
    row.r = r;
    row.log2_pairs = log2_pairs;
    row.log2_bad = log2_bad_matrix_bound(n, r, t);
    row.log2_prob = log2_codeword_probability_bound(n, r, ka, kb);
    row.log2_term = row.log2_pairs + row.log2_bad + row.log2_prob;
    if (exhaustive) {
      row.exhaustive = true;
      row.bad_exact = bad_matrix_count(hist, r, t);
      row.bad_bound_holds = log2_big(row.bad_exact) <= row.log2_bad + 1e-9;
      rep.all_exhaustive_hold = rep.all_exhaustive_hold && row.bad_bound_holds;
    }
    // log2(2^acc + 2^term)
    const double hi = std::max(acc, row.log2_term);
    const double lo = std::min(acc, row.log2_term);
    acc = std::isinf(lo) ? hi : hi + std::log2(1 + std::exp2(lo - hi));
    rep.rows.push_back(row);
  }
  rep.log2_total = acc;
  return rep;
}

double gv2d_delta2_max(double delta1) {
  return delta1 * (1 - delta1 / 2) / 8;
}

Gv2dValue gv2d_evaluate(double rho_a, double rho_b, double delta1,
                        double delta2) {
  if (!(delta1 > 0 && delta1 < 0.5))
    throw std::domain_error("gv2d: delta1 must lie in (0, 1/2)");
  if (!(delta2 > 0 && delta2 < gv2d_delta2_max(delta1)))
    throw std::domain_error("gv2d: delta2 must lie in (0, delta1(1-delta1/2)/8)");
  const double q = 1 - delta1 / 2;
  Gv2dValue v;
  v.lhs = 2 * binary_entropy(delta1 / 2) +
          2 * q * binary_entropy(4 * delta2 / (delta1 * q));
  v.rhs = 0.75 * (q - rho_a) * (q - rho_b) / q;
  v.feasible = v.lhs + 1e-9 < v.rhs;
  return v;
}

bool gv2d_feasible(double rho_a, double rho_b, double delta1, double delta2) {
  return gv2d_evaluate(rho_a, rho_b, delta1, delta2).feasible;
}

std::vector<Gv2dPoint> gv2d_region(double rho_a, double rho_b, unsigned n1,
                                   unsigned n2) {
  std::vector<Gv2dPoint> out;
  out.reserve(std::size_t{n1} * n2);
  for (unsigned i = 0; i < n1; ++i) {
    const double d1 = (i + 1) / (2.0 * (n1 + 1));
    const double top = gv2d_delta2_max(d1);
    for (unsigned j = 0; j < n2; ++j) {
      Gv2dPoint p;
      p.delta1 = d1;
      p.delta2 = top * (j + 1) / (n2 + 1);
      p.value = gv2d_evaluate(rho_a, rho_b, d1, p.delta2);
      out.push_back(p);
    }
  }
  return out;
}

} // namespace lrq
