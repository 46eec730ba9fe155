#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrq {

/// Dense GF(2) vector, packed into 64-bit words. Bits past `size()` are kept zero.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  static BitVector from_string(const std::string &bits);
  static BitVector unit(std::size_t len, std::size_t i);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  bool is_zero() const;
  bool dot(const BitVector &o) const;
  std::vector<std::size_t> support() const;

  BitVector &operator^=(const BitVector &o);
  friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
  bool operator==(const BitVector &o) const = default;

  std::uint64_t *data() { return words_.data(); }
  const std::uint64_t *data() const { return words_.data(); }
  std::size_t num_words() const { return words_.size(); }

  std::string to_string() const;

private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense row-major GF(2) matrix.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
        data_(rows * ((cols + 63) / 64), 0) {}

  static BitMatrix identity(std::size_t n);
  /// Rows given as strings of '0'/'1'.
  static BitMatrix from_rows(const std::vector<std::string> &rows);
  static BitMatrix from_rows(const std::vector<BitVector> &rows,
                             std::size_t cols);
  static BitMatrix from_columns(const std::vector<BitVector> &cols,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    std::uint64_t &w = data_[r * stride_ + (c >> 6)];
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    if (v)
      w |= m;
    else
      w &= ~m;
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
  }

  std::uint64_t *row_data(std::size_t r) { return data_.data() + r * stride_; }
  const std::uint64_t *row_data(std::size_t r) const {
    return data_.data() + r * stride_;
  }
  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;
  std::size_t max_row_weight() const;
  std::size_t max_col_weight() const;
  std::size_t nnz() const;
  bool is_zero() const;

  BitMatrix transpose() const;
  BitVector apply(const BitVector &x) const;
  BitMatrix operator*(const BitMatrix &o) const;
  BitMatrix &operator^=(const BitMatrix &o);
  bool operator==(const BitMatrix &o) const = default;

  BitMatrix select_columns(const std::vector<std::size_t> &idx) const;
  BitMatrix select_rows(const std::vector<std::size_t> &idx) const;
  static BitMatrix hstack(const BitMatrix &a, const BitMatrix &b);
  static BitMatrix vstack(const BitMatrix &a, const BitMatrix &b);

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Reduced row echelon form plus pivot column of each nonzero row.
struct Echelon {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(BitMatrix m);
std::size_t rank(const BitMatrix &m);
std::vector<BitVector> kernel_basis(const BitMatrix &m);

struct AffineSolution {
  BitVector particular;
  std::vector<BitVector> kernel;
};
std::optional<AffineSolution> solve_affine(const BitMatrix &m,
                                           const BitVector &b);

/// J with J*M = I. Throws std::domain_error when M is not injective.
BitMatrix left_inverse(const BitMatrix &m);
BitMatrix kron(const BitMatrix &a, const BitMatrix &b);

struct WeightWitness {
  std::size_t weight;
  BitVector witness;
};
/// Minimum weight over nonzero combinations of `basis`. Refuses (throws
/// std::length_error) when 2^dim exceeds `cap`.
std::optional<WeightWitness>
min_weight_nonzero(const std::vector<BitVector> &basis,
                   std::uint64_t cap = std::uint64_t{1} << 24);

/// Incremental span membership: keeps an echelon basis and reduces queries.
class SpanTester {
public:
  explicit SpanTester(std::size_t len) : len_(len) {}
  SpanTester(const std::vector<BitVector> &gens, std::size_t len);
  /// Adds v; returns true when it enlarged the span.
  bool add(BitVector v);
  bool contains(BitVector v) const;
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitVector> &basis() const { return basis_; }

private:
  void reduce(BitVector &v) const;
  std::size_t len_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivot_;
};

} // namespace lrq
