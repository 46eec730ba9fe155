#pragma once

#include "lrq/gf2.h"

#include <iosfwd>
#include <limits>
#include <random>

namespace lrq {

/// Sentinel distance of the zero code.
inline constexpr std::size_t distance_infinite =
    std::numeric_limits<std::size_t>::max();

/// Binary linear code C = ker H.
class LinearCode {
public:
  LinearCode() = default;
  static LinearCode from_parity_check(BitMatrix h);
  /// Code spanned by the rows of `g`.
  static LinearCode from_generator(const BitMatrix &g);

  const BitMatrix &H() const { return h_; }
  std::size_t n() const { return h_.cols(); }
  std::size_t m() const { return h_.rows(); }
  std::size_t k() const { return k_; }

  /// k x n, full row rank, rows span C.
  const BitMatrix &generator() const { return gen_; }
  bool contains(const BitVector &v) const;
  /// All 2^k codewords in Gray-code order of the generator rows.
  std::vector<BitVector> codewords(std::uint64_t cap = 1u << 20) const;

private:
  BitMatrix h_;
  BitMatrix gen_;
  std::size_t k_ = 0;
};

/// Dual code: its parity-check matrix is a generator of C.
LinearCode dual(const LinearCode &c);
/// Exact minimum distance; distance_infinite for the zero code.
std::size_t distance_exact(const LinearCode &c,
                           std::uint64_t cap = std::uint64_t{1} << 24);
LinearCode puncture(const LinearCode &c, const std::vector<std::size_t> &idx);
/// Uniform k-dimensional subspace by rejection sampling of generator matrices.
LinearCode sample_uniform(std::size_t n, std::size_t k, std::mt19937_64 &rng);

bool same_code(const LinearCode &a, const LinearCode &b);

// alist (MacKay) and MatrixMarket coordinate I/O for parity-check matrices.
void write_alist(std::ostream &os, const BitMatrix &h);
BitMatrix read_alist(std::istream &is);
void write_mtx(std::ostream &os, const BitMatrix &h);
BitMatrix read_mtx(std::istream &is);

} // namespace lrq
