#pragma once

// Test-side reference implementations. Deliberately naive and independent of
// the library algorithms: byte matrices, plain Gaussian elimination, brute
// enumeration. Only data types (BitVector/BitMatrix/LinearCode) are shared.

#include "lrq/gf2.h"
#include "lrq/instance.h"
#include "lrq/linear_code.h"
#include "lrq/rational.h"
#include "lrq/rng.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<std::uint8_t>>;

inline Dense dense(const lrq::BitMatrix &m) {
  Dense d(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      d[r][c] = m.get(r, c);
  return d;
}

inline std::size_t rank(Dense a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && !a[p][c])
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r && a[i][c])
        for (std::size_t j = c; j < cols; ++j)
          a[i][j] ^= a[r][j];
    ++r;
  }
  return r;
}

inline Dense product(const Dense &a, const Dense &b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense out(n, std::vector<std::uint8_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l])
        for (std::size_t j = 0; j < m; ++j)
          out[i][j] ^= b[l][j];
  return out;
}

inline bool all_zero(const Dense &a) {
  for (const auto &r : a)
    for (auto v : r)
      if (v)
        return false;
  return true;
}

inline Dense kron(const Dense &a, const Dense &b) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  const std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  Dense out(ar * br, std::vector<std::uint8_t>(ac * bc, 0));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      if (a[i][j])
        for (std::size_t k = 0; k < br; ++k)
          for (std::size_t l = 0; l < bc; ++l)
            out[i * br + k][j * bc + l] = b[k][l];
  return out;
}

inline Dense eye(std::size_t n) {
  Dense d(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    d[i][i] = 1;
  return d;
}

inline Dense hcat(const Dense &a, const Dense &b) {
  Dense out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  return out;
}

inline Dense vcat(const Dense &a, const Dense &b) {
  Dense out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// All codewords of ker H as packed integers (bit i = coordinate i).
inline std::vector<std::uint64_t> codewords(const lrq::BitMatrix &h) {
  std::vector<std::uint64_t> out;
  const std::size_t n = h.cols();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool ok = true;
    for (std::size_t r = 0; r < h.rows() && ok; ++r) {
      int s = 0;
      for (std::size_t c = 0; c < n; ++c)
        s ^= h.get(r, c) && ((x >> c) & 1);
      ok = s == 0;
    }
    if (ok)
      out.push_back(x);
  }
  return out;
}

inline std::size_t min_distance(const lrq::BitMatrix &h) {
  std::size_t d = SIZE_MAX;
  for (auto w : codewords(h))
    if (w)
      d = std::min<std::size_t>(d, std::popcount(w));
  return d;
}

/// Word -> minimum decomposition cost over every pair (c_a, c_b): columns of
/// c_a in C_A, rows of c_b in C_B, cost = nonzero columns + nonzero rows.
/// Words are packed row-major, bit i*nb + j.
inline std::unordered_map<std::uint64_t, std::size_t>
sigma_costs(const lrq::BitMatrix &ha, const lrq::BitMatrix &hb) {
  const std::size_t na = ha.cols(), nb = hb.cols();
  const auto ca = codewords(ha), cb = codewords(hb);
  // every matrix with columns in C_A, with its column count
  std::vector<std::pair<std::uint64_t, std::size_t>> as{{0, 0}};
  for (std::size_t j = 0; j < nb; ++j) {
    std::vector<std::pair<std::uint64_t, std::size_t>> next;
    for (auto [m, cost] : as)
      for (auto w : ca) {
        std::uint64_t col = 0;
        for (std::size_t i = 0; i < na; ++i)
          if ((w >> i) & 1)
            col |= std::uint64_t{1} << (i * nb + j);
        next.emplace_back(m | col, cost + (w != 0));
      }
    as.swap(next);
  }
  std::vector<std::pair<std::uint64_t, std::size_t>> bs{{0, 0}};
  for (std::size_t i = 0; i < na; ++i) {
    std::vector<std::pair<std::uint64_t, std::size_t>> next;
    for (auto [m, cost] : bs)
      for (auto w : cb)
        next.emplace_back(m | (w << (i * nb)), cost + (w != 0));
    bs.swap(next);
  }
  std::unordered_map<std::uint64_t, std::size_t> best;
  for (auto [a, x] : as)
    for (auto [b, y] : bs) {
      auto [it, fresh] = best.try_emplace(a ^ b, x + y);
      if (!fresh && x + y < it->second)
        it->second = x + y;
    }
  return best;
}

struct RobustOracle {
  bool vacuous = true;
  lrq::Rational d2 = 0;
};
inline RobustOracle robustness(const lrq::BitMatrix &ha, const lrq::BitMatrix &hb) {
  RobustOracle r;
  for (auto [w, cost] : sigma_costs(ha, hb)) {
    if (!w)
      continue;
    lrq::Rational q(std::popcount(w), cost);
    if (r.vacuous || q < r.d2)
      r.d2 = q;
    r.vacuous = false;
  }
  return r;
}

/// Number of y-dimensional subspaces of F_2^x by enumerating spans.
inline std::size_t count_subspaces(unsigned x, unsigned y) {
  std::set<std::vector<bool>> seen;
  const unsigned n = 1u << x;
  std::vector<unsigned> pick;
  std::size_t count = 0;
  auto rec = [&](auto &&self, unsigned start) -> void {
    if (pick.size() == y) {
      std::vector<bool> span(n, false);
      span[0] = true;
      for (auto v : pick) {
        std::vector<bool> next = span;
        for (unsigned u = 0; u < n; ++u)
          if (span[u])
            next[u ^ v] = true;
        span.swap(next);
      }
      if (static_cast<std::size_t>(std::count(span.begin(), span.end(), true)) ==
              (std::size_t{1} << y) &&
          seen.insert(span).second)
        ++count;
      return;
    }
    for (unsigned v = start; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return y == 0 ? 1 : count;
}

inline lrq::BigInt gaussian_recurrence(unsigned x, unsigned y) {
  // binom(x, y) = binom(x-1, y-1) + 2^y binom(x-1, y)
  std::vector<std::vector<lrq::BigInt>> t(x + 1, std::vector<lrq::BigInt>(x + 1, 0));
  for (unsigned i = 0; i <= x; ++i) {
    t[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j)
      t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? (lrq::BigInt(1) << j) * t[i - 1][j] : 0);
  }
  return t[x][y];
}

inline unsigned rank_small(std::vector<std::uint32_t> rows) {
  unsigned r = 0;
  for (unsigned bit = 0; bit < 32; ++bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(),
                           [&](std::uint32_t v) { return (v >> bit) & 1; });
    if (it == rows.end())
      continue;
    std::swap(*it, rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> bit) & 1))
        rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

/// |M(n, r, t)| by brute force over all n x n matrices.
inline std::vector<std::vector<std::uint64_t>> bad_counts(unsigned n) {
  // out[r][t] for t = 0..n
  std::vector<std::vector<std::uint64_t>> out(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::vector<std::uint32_t> rows(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    unsigned maxw = 0;
    for (unsigned i = 0; i < n; ++i) {
      rows[i] = static_cast<std::uint32_t>((m >> (i * n)) & ((1u << n) - 1));
      maxw = std::max<unsigned>(maxw, std::popcount(rows[i]));
    }
    for (unsigned j = 0; j < n; ++j) {
      unsigned w = 0;
      for (unsigned i = 0; i < n; ++i)
        w += (rows[i] >> j) & 1;
      maxw = std::max(maxw, w);
    }
    const unsigned r = rank_small(rows);
    for (unsigned t = maxw + 1; t <= n + 1; ++t)
      ++out[r][t];
  }
  return out;
}

inline lrq::json cyclic_config(unsigned n, std::vector<int> a, std::vector<int> b,
                               lrq::json code_a, lrq::json code_b) {
  return {{"group", {{"kind", "cyclic"}, {"n", n}}},
          {"A", {{"offsets", a}}},
          {"B", {{"offsets", b}}},
          {"codes", {{"A", code_a}, {"B", code_b}}}};
}

/// The instance the decoder criteria run on: PSL(2,5), Delta = 4, both local
/// codes the [4,3] even-weight code.
inline lrq::json decodable_config() {
  return {{"group", {{"kind", "psl2"}, {"q", 5}}},
          {"A", {{"random", {{"count", 4}, {"seed", 1}}}}},
          {"B", {{"random", {{"count", 4}, {"seed", 101}}}}},
          {"codes", {{"A", {{"H", {"1111"}}}}, {"B", {{"H", {"1111"}}}}}}};
}

} // namespace oracle
