#include "lrq/gf2.h"

#include <bit>
#include <stdexcept>

namespace lrq {

BitVector BitVector::from_string(const std::string &bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVector: expected only '0'/'1'");
  }
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
  BitVector v(len);
  v.set(i);
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto x : words_)
    w += std::popcount(x);
  return w;
}

bool BitVector::is_zero() const {
  for (auto x : words_)
    if (x)
      return false;
  return true;
}

bool BitVector::dot(const BitVector &o) const {
  if (o.len_ != len_)
    throw std::invalid_argument("BitVector::dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t x = words_[w];
    while (x) {
      s.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return s;
}

BitVector &BitVector::operator^=(const BitVector &o) {
  if (o.len_ != len_)
    throw std::invalid_argument("BitVector xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] ^= o.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i))
      s[i] = '1';
  return s;
}

// ---------------------------------------------------------------------------

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
  if (rows.empty())
    return {};
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (rows[r][c] == '1')
        m.set(r, c);
      else if (rows[r][c] != '0')
        throw std::invalid_argument("BitMatrix::from_rows: bad character");
    }
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector> &rows,
                               std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("BitMatrix::from_rows: length mismatch");
    std::copy(rows[r].data(), rows[r].data() + m.stride_, m.row_data(r));
  }
  return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector> &cols,
                                  std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy(row_data(r), row_data(r) + stride_, v.data());
  return v;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c))
      v.set(r);
  return v;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  const std::uint64_t *s = row_data(src);
  std::uint64_t *d = row_data(dst);
  for (std::size_t w = 0; w < stride_; ++w)
    d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  std::swap_ranges(row_data(a), row_data(a) + stride_, row_data(b));
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < stride_; ++i)
    w += std::popcount(row_data(r)[i]);
  return w;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r)
    w += get(r, c);
  return w;
}

std::size_t BitMatrix::max_row_weight() const {
  std::size_t m = 0;
  for (std::size_t r = 0; r < rows_; ++r)
    m = std::max(m, row_weight(r));
  return m;
}

std::size_t BitMatrix::max_col_weight() const {
  std::vector<std::size_t> w(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < stride_; ++i) {
      std::uint64_t x = row_data(r)[i];
      while (x) {
        ++w[i * 64 + std::countr_zero(x)];
        x &= x - 1;
      }
    }
  std::size_t m = 0;
  for (auto x : w)
    m = std::max(m, x);
  return m;
}

std::size_t BitMatrix::nnz() const {
  std::size_t n = 0;
  for (auto x : data_)
    n += std::popcount(x);
  return n;
}

bool BitMatrix::is_zero() const {
  for (auto x : data_)
    if (x)
      return false;
  return true;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < stride_; ++i) {
      std::uint64_t x = row_data(r)[i];
      while (x) {
        t.set(i * 64 + std::countr_zero(x), r);
        x &= x - 1;
      }
    }
  return t;
}

BitVector BitMatrix::apply(const BitVector &x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("BitMatrix::apply: shape mismatch");
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const std::uint64_t *row = row_data(r);
    for (std::size_t i = 0; i < stride_; ++i)
      acc ^= row[i] & x.data()[i];
    if (std::popcount(acc) & 1)
      y.set(r);
  }
  return y;
}

BitMatrix BitMatrix::operator*(const BitMatrix &o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("BitMatrix product: shape mismatch");
  BitMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t *dst = p.row_data(r);
    for (std::size_t i = 0; i < stride_; ++i) {
      std::uint64_t x = row_data(r)[i];
      while (x) {
        const std::uint64_t *src = o.row_data(i * 64 + std::countr_zero(x));
        for (std::size_t w = 0; w < p.stride_; ++w)
          dst[w] ^= src[w];
        x &= x - 1;
      }
    }
  }
  return p;
}

BitMatrix &BitMatrix::operator^=(const BitMatrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("BitMatrix xor: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] ^= o.data_[i];
  return *this;
}

BitMatrix
BitMatrix::select_columns(const std::vector<std::size_t> &idx) const {
  BitMatrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (get(r, idx[j]))
        m.set(r, j);
  return m;
}

BitMatrix BitMatrix::select_rows(const std::vector<std::size_t> &idx) const {
  BitMatrix m(idx.size(), cols_);
  for (std::size_t j = 0; j < idx.size(); ++j)
    std::copy(row_data(idx[j]), row_data(idx[j]) + stride_, m.row_data(j));
  return m;
}

BitMatrix BitMatrix::hstack(const BitMatrix &a, const BitMatrix &b) {
  if (a.rows_ != b.rows_)
    throw std::invalid_argument("hstack: row count mismatch");
  BitMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::copy(a.row_data(r), a.row_data(r) + a.stride_, m.row_data(r));
    for (std::size_t c = 0; c < b.cols_; ++c)
      if (b.get(r, c))
        m.set(r, a.cols_ + c);
  }
  return m;
}

BitMatrix BitMatrix::vstack(const BitMatrix &a, const BitMatrix &b) {
  if (a.cols_ != b.cols_)
    throw std::invalid_argument("vstack: column count mismatch");
  BitMatrix m(a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return m;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += row(r).to_string();
    s += '\n';
  }
  return s;
}

// ---------------------------------------------------------------------------

Echelon row_reduce(BitMatrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c))
      ++p;
    if (p == m.rows())
      continue;
    m.swap_rows(p, r);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c))
        m.xor_row_into(r, i);
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const BitMatrix &m) {
  // Forward elimination only; cheaper than full reduction.
  BitMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && !a.get(p, c))
      ++p;
    if (p == a.rows())
      continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i)
      if (a.get(i, c))
        a.xor_row_into(r, i);
    ++r;
  }
  return r;
}

std::vector<BitVector> kernel_basis(const BitMatrix &m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (e.reduced.get(i, f))
        v.set(e.pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const BitMatrix &m,
                                           const BitVector &b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve_affine: rhs length != rows");
  BitMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c))
        aug.set(r, c);
    if (b.get(r))
      aug.set(r, m.cols());
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols())
    return std::nullopt;
  AffineSolution s{BitVector(m.cols()), kernel_basis(m)};
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    if (e.reduced.get(i, m.cols()))
      s.particular.set(e.pivots[i]);
  return s;
}

BitMatrix left_inverse(const BitMatrix &m) {
  // Pivot columns of M^T (rows of M) chosen greedily from the left give an
  // invertible square block; its inverse, scattered back, is a left inverse.
  const std::size_t n = m.cols();
  BitMatrix t = m.transpose();
  Echelon e = row_reduce(t);
  if (e.pivots.size() != n)
    throw std::domain_error("left_inverse: matrix is not injective");
  BitMatrix sq = m.select_rows(e.pivots); // n x n, invertible
  BitMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (sq.get(r, c))
        aug.set(r, c);
    aug.set(r, n + r);
  }
  Echelon inv = row_reduce(std::move(aug));
  BitMatrix j(n, m.rows());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (inv.reduced.get(r, n + c))
        j.set(r, e.pivots[c]);
  return j;
}

BitMatrix kron(const BitMatrix &a, const BitMatrix &b) {
  BitMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      if (!a.get(ia, ja))
        continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          if (b.get(ib, jb))
            k.set(ia * b.rows() + ib, ja * b.cols() + jb);
    }
  return k;
}

std::optional<WeightWitness>
min_weight_nonzero(const std::vector<BitVector> &basis, std::uint64_t cap) {
  if (basis.empty())
    return std::nullopt;
  if (basis.size() >= 63 || (std::uint64_t{1} << basis.size()) > cap)
    throw std::length_error("min_weight_nonzero: 2^" +
                            std::to_string(basis.size()) +
                            " combinations exceed cap " + std::to_string(cap));
  // Gray-code walk: one XOR per step.
  BitVector cur(basis[0].size());
  std::optional<WeightWitness> best;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= basis[std::countr_zero(i)];
    std::size_t w = cur.weight();
    if (w == 0)
      continue; // dependent input; skip the zero vector
    if (!best || w < best->weight)
      best = WeightWitness{w, cur};
  }
  return best;
}

SpanTester::SpanTester(const std::vector<BitVector> &gens, std::size_t len)
    : len_(len) {
  for (const auto &g : gens)
    add(g);
}

void SpanTester::reduce(BitVector &v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(pivot_[i]))
      v ^= basis_[i];
}

bool SpanTester::add(BitVector v) {
  if (v.size() != len_)
    throw std::invalid_argument("SpanTester: length mismatch");
  reduce(v);
  if (v.is_zero())
    return false;
  std::size_t p = v.support().front();
  basis_.push_back(std::move(v));
  pivot_.push_back(p);
  return true;
}

bool SpanTester::contains(BitVector v) const {
  if (v.size() != len_)
    throw std::invalid_argument("SpanTester: length mismatch");
  reduce(v);
  return v.is_zero();
}

} // namespace lrq
