#include "lrq/linear_code.h"
#include "lrq/rng.h"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lrq {

LinearCode LinearCode::from_parity_check(BitMatrix h) {
  LinearCode c;
  c.h_ = std::move(h);
  auto basis = kernel_basis(c.h_);
  c.k_ = basis.size();
  c.gen_ = BitMatrix::from_rows(basis, c.h_.cols());
  return c;
}

LinearCode LinearCode::from_generator(const BitMatrix &g) {
  // ker(G) as rows is a parity check of the row space of G.
  auto checks = kernel_basis(g);
  return from_parity_check(BitMatrix::from_rows(checks, g.cols()));
}

bool LinearCode::contains(const BitVector &v) const {
  return h_.apply(v).is_zero();
}

std::vector<BitVector> LinearCode::codewords(std::uint64_t cap) const {
  if (k_ >= 63 || (std::uint64_t{1} << k_) > cap)
    throw std::length_error("codewords: 2^" + std::to_string(k_) +
                            " exceeds cap");
  std::vector<BitVector> out;
  BitVector cur(n());
  out.push_back(cur);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k_); ++i) {
    cur ^= gen_.row(std::countr_zero(i));
    out.push_back(cur);
  }
  return out;
}

LinearCode dual(const LinearCode &c) {
  return LinearCode::from_parity_check(c.generator());
}

std::size_t distance_exact(const LinearCode &c, std::uint64_t cap) {
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < c.k(); ++i)
    rows.push_back(c.generator().row(i));
  auto w = min_weight_nonzero(rows, cap);
  return w ? w->weight : distance_infinite;
}

LinearCode puncture(const LinearCode &c, const std::vector<std::size_t> &idx) {
  std::vector<bool> drop(c.n(), false);
  for (auto i : idx) {
    if (i >= c.n())
      throw std::invalid_argument("puncture: index out of range");
    drop[i] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < c.n(); ++i)
    if (!drop[i])
      keep.push_back(i);
  return LinearCode::from_generator(c.generator().select_columns(keep));
}

LinearCode sample_uniform(std::size_t n, std::size_t k, std::mt19937_64 &rng) {
  if (k > n)
    throw std::invalid_argument("sample_uniform: k > n");
  for (;;) {
    BitMatrix g(k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (rng() & 1)
          g.set(r, c);
    if (rank(g) == k)
      return LinearCode::from_generator(g);
  }
}

bool same_code(const LinearCode &a, const LinearCode &b) {
  if (a.n() != b.n() || a.k() != b.k())
    return false;
  for (std::size_t i = 0; i < a.k(); ++i)
    if (!b.contains(a.generator().row(i)))
      return false;
  return true;
}

// ---------------------------------------------------------------------------

void write_alist(std::ostream &os, const BitMatrix &h) {
  const std::size_t m = h.rows(), n = h.cols();
  std::vector<std::vector<std::size_t>> cols(n), rows(m);
  for (std::size_t r = 0; r < m; ++r)
    for (auto c : h.row(r).support()) {
      rows[r].push_back(c);
      cols[c].push_back(r);
    }
  std::size_t maxc = 0, maxr = 0;
  for (auto &c : cols)
    maxc = std::max(maxc, c.size());
  for (auto &r : rows)
    maxr = std::max(maxr, r.size());
  os << n << ' ' << m << '\n' << maxc << ' ' << maxr << '\n';
  for (std::size_t c = 0; c < n; ++c)
    os << cols[c].size() << (c + 1 == n ? "\n" : " ");
  if (n == 0)
    os << '\n';
  for (std::size_t r = 0; r < m; ++r)
    os << rows[r].size() << (r + 1 == m ? "\n" : " ");
  if (m == 0)
    os << '\n';
  // Entries padded with zeros up to the max weight, as in MacKay's files.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < maxc; ++i)
      os << (i ? " " : "") << (i < cols[c].size() ? cols[c][i] + 1 : 0);
    os << '\n';
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < maxr; ++i)
      os << (i ? " " : "") << (i < rows[r].size() ? rows[r][i] + 1 : 0);
    os << '\n';
  }
}

BitMatrix read_alist(std::istream &is) {
  std::size_t n, m, maxc, maxr;
  if (!(is >> n >> m >> maxc >> maxr))
    throw std::runtime_error("alist: bad header");
  std::vector<std::size_t> cw(n), rw(m);
  for (auto &x : cw)
    is >> x;
  for (auto &x : rw)
    is >> x;
  BitMatrix h(m, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < maxc; ++i) {
      std::size_t r;
      if (!(is >> r))
        throw std::runtime_error("alist: truncated column lists");
      if (r > m)
        throw std::runtime_error("alist: row index out of range");
      if (r)
        h.set(r - 1, c);
    }
  // Row lists are redundant; verify them.
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < maxr; ++i) {
      std::size_t c;
      if (!(is >> c))
        throw std::runtime_error("alist: truncated row lists");
      if (c && (c > n || !h.get(r, c - 1)))
        throw std::runtime_error("alist: row and column lists disagree");
    }
  return h;
}

void write_mtx(std::ostream &os, const BitMatrix &h) {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << h.rows() << ' ' << h.cols() << ' ' << h.nnz() << '\n';
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (auto c : h.row(r).support())
      os << r + 1 << ' ' << c + 1 << " 1\n";
}

BitMatrix read_mtx(std::istream &is) {
  std::string line;
  do {
    if (!std::getline(is, line))
      throw std::runtime_error("mtx: missing size line");
  } while (line.empty() || line[0] == '%');
  std::istringstream sz(line);
  std::size_t rows, cols, nnz;
  if (!(sz >> rows >> cols >> nnz))
    throw std::runtime_error("mtx: bad size line");
  BitMatrix h(rows, cols);
  for (std::size_t i = 0; i < nnz; ++i) {
    std::size_t r, c;
    long v;
    if (!(is >> r >> c >> v))
      throw std::runtime_error("mtx: truncated entries");
    if (r == 0 || c == 0 || r > rows || c > cols)
      throw std::runtime_error("mtx: index out of range");
    if (v & 1)
      h.flip(r - 1, c - 1);
  }
  return h;
}

} // namespace lrq
