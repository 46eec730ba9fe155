#pragma once

#include "lrq/complex.h"
#include "lrq/gf2.h"
#include "lrq/linear_code.h"

#include <functional>
#include <memory>
#include <optional>

namespace lrq {

/// Tanner map F_2^bits -> (F_2^m)^checks: output block of check v is
/// sum over slots a of H(:,a) * x[bit in slot a]. Rows are check-major.
BitMatrix tanner_map(const TannerGraph &t, const BitMatrix &h);

/// Tensor a map T: F^bits -> (F^m)^checks with a k-dimensional fibre.
/// fibre_major: rows (check, i, r), else rows (check, r, i); columns (bit, i).
BitMatrix fibre_lift(const BitMatrix &t, std::size_t m, std::size_t k,
                     bool fibre_major);

/// A chain (grade 0, 1 or 2) as one flat bit vector.
struct ChainVec {
  int grade = 0;
  BitVector bits;
};

/// X(G2, C_A, C_B): F^F --d2--> (F^{m_a})^{E-} + (F^{m_b})^{E|} --d1-->
/// (F^{m_a x m_b})^V.
class ChainComplexX {
public:
  ChainComplexX(std::shared_ptr<const LeftRightComplex> cx, LinearCode ca,
                LinearCode cb);

  const LeftRightComplex &complex() const { return *cx_; }
  std::shared_ptr<const LeftRightComplex> complex_ptr() const { return cx_; }
  const LinearCode &CA() const { return ca_; }
  const LinearCode &CB() const { return cb_; }
  std::size_t ma() const { return ca_.m(); }
  std::size_t mb() const { return cb_.m(); }

  const BitMatrix &d2() const { return d2_; }
  const BitMatrix &d1() const { return d1_; }
  std::size_t size(int grade) const;

  /// Bit offset and width of the block of cell i at the given grade.
  std::size_t offset(int grade, std::uint32_t cell) const;
  std::size_t block(int grade, std::uint32_t cell) const;
  std::size_t num_cells(int grade) const;
  /// Block of cell as an integer (blocks are at most 64 bits).
  std::uint64_t get_block(int grade, const BitVector &v,
                          std::uint32_t cell) const;
  void xor_block(int grade, BitVector &v, std::uint32_t cell,
                 std::uint64_t bits) const;

  /// Number of nonzero cells.
  std::size_t cell_norm(int grade, const BitVector &v) const;

  BitVector boundary2(const BitVector &c2) const { return d2_.apply(c2); }
  BitVector boundary1(const BitVector &c1) const { return d1_.apply(c1); }
  BitVector coboundary1(const BitVector &c1) const; // delta^1 = d2^T
  BitVector coboundary0(const BitVector &c0) const; // delta^0 = d1^T

private:
  std::shared_ptr<const LeftRightComplex> cx_;
  LinearCode ca_, cb_;
  BitMatrix d2_, d1_, d2t_, d1t_;
};

/// Builds the complex and verifies d1*d2 = 0 (std::logic_error otherwise).
ChainComplexX build_chain_complex(std::shared_ptr<const LeftRightComplex> cx,
                                  const LinearCode &ca, const LinearCode &cb);
ChainComplexX dual_complex(std::shared_ptr<const LeftRightComplex> cx,
                           const LinearCode &ca, const LinearCode &cb);

struct LdpcProfile {
  std::size_t d2_max_row = 0, d2_max_col = 0, d1_max_row = 0, d1_max_col = 0;
  bool within_4delta = false;
  bool fine_bounds = false; // the four per-bit incidence bounds
};
LdpcProfile ldpc_profile(const ChainComplexX &x);

struct RateReport {
  std::size_t n = 0, k = 0, rank_d1 = 0, rank_d2 = 0;
  double rate = 0, lower_bound = 0;
  long long naive_k = 0; // |X(1)| - |X(2)| - |X(0)|
  bool bound_holds = false;
};
RateReport dimension_and_rate(const ChainComplexX &x);
double rate_lower_bound(double rho_a, double rho_b);

struct CssCode {
  BitMatrix hx, hz;
  std::size_t n = 0, k = 0;
};
CssCode css_code(const ChainComplexX &x);

struct DistanceValue {
  std::size_t hamming = 0, cell = 0;
  BitVector witness_hamming, witness_cell;
};
struct QuantumDistance {
  std::size_t k = 0;
  std::optional<DistanceValue> dx, dz; // absent when k = 0
};

/// Min weight over Z - B for (Z, B) given as kernel/image generators.
/// `cell_of` (optional) maps a vector to its cell norm.
std::optional<DistanceValue>
min_weight_outside(const std::vector<BitVector> &z_basis,
                   const std::vector<BitVector> &b_gens, std::size_t len,
                   const std::function<std::size_t(const BitVector &)> &cell_of,
                   std::uint64_t cap);

/// Exact dx (Z^1 - B^1) and dz (Z_1 - B_1). Refuses (std::length_error with
/// the offending sizes) when 2^{dim Z} exceeds cap.
QuantumDistance quantum_distance_exact(const ChainComplexX &x,
                                       std::uint64_t cap = std::uint64_t{1}
                                                           << 22);

} // namespace lrq
