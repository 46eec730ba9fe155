#pragma once

// Tensor codes C_A (x) C_B, the sum code Sigma(C_A, C_B), robustness and the
// local complex Y(H_A, H_B). Matrices c in F^{na x nb} are packed row-major
// into a 64-bit word (bit i*nb + j), so na*nb <= 64 throughout.

#include "lrq/gf2.h"
#include "lrq/linear_code.h"
#include "lrq/rational.h"

#include <cstdint>
#include <optional>
#include <vector>

namespace lrq {

struct TensorWord {
  std::size_t na = 0, nb = 0;
  std::uint64_t bits = 0;

  TensorWord() = default;
  TensorWord(std::size_t na_, std::size_t nb_, std::uint64_t b = 0);

  bool get(std::size_t i, std::size_t j) const { return (bits >> (i * nb + j)) & 1; }
  void set(std::size_t i, std::size_t j, bool v = true);
  std::uint64_t row(std::size_t i) const; // nb bits
  std::uint64_t col(std::size_t j) const; // na bits, bit i = c(i,j)
  std::size_t weight() const;             // entrywise
  std::size_t nonzero_rows() const;       // ||c||_[na]
  std::size_t nonzero_cols() const;       // ||c||_[nb]
  BitVector vec() const;                  // length na*nb, same order
  static TensorWord from_vec(const BitVector &v, std::size_t na, std::size_t nb);
  bool operator==(const TensorWord &) const = default;
};

/// Packed helpers shared by the oracles.
std::uint64_t apply_packed(const BitMatrix &h, std::uint64_t x);
std::vector<std::uint64_t> packed_codewords(const LinearCode &c);

bool sigma_member(const TensorWord &c, const LinearCode &ca,
                  const LinearCode &cb);

struct Decomposition {
  TensorWord ca, cb; // columns of ca in C_A, rows of cb in C_B
  std::size_t cost = 0;
};

/// Optimal decomposition of one word of Sigma. Precomputes the affine
/// structure once; reuse it for many words of the same pair.
class DecompositionSolver {
public:
  DecompositionSolver(const LinearCode &ca, const LinearCode &cb,
                      std::uint64_t cap = std::uint64_t{1} << 24);
  /// Throws std::invalid_argument if c is not in Sigma.
  Decomposition solve(const TensorWord &c) const;
  /// Minimal cost only, given a particular c_b for c (fast path).
  std::size_t min_cost(std::uint64_t c, std::uint64_t cb_particular) const;
  /// Particular c_b for c (requires c in Sigma).
  std::optional<std::uint64_t> particular(std::uint64_t c) const;
  std::size_t coset_dim() const { return kernel_cb_.size(); }

private:
  std::size_t na_, nb_, ma_, kb_;
  BitMatrix system_;                  // X (na x kb) -> H_A X G_B
  std::vector<std::uint64_t> gb_rows_;
  std::vector<std::uint64_t> kernel_cb_; // c_b images of ker(system)
  std::uint64_t cb_of_x(const BitVector &x) const;
  std::uint64_t rhs_of(std::uint64_t c, BitVector &rhs) const;
  const LinearCode *ca_;
};

Decomposition min_decomposition(const TensorWord &c, const LinearCode &ca,
                                const LinearCode &cb,
                                std::uint64_t cap = std::uint64_t{1} << 24);

struct RobustnessReport {
  bool vacuous = false;
  Rational d2 = 0;
  TensorWord witness;
  Decomposition witness_decomposition;
  std::uint64_t words_examined = 0;
};

/// Exact d2 = min over nonzero c in Sigma of |c| / min-cost(c).
RobustnessReport robustness_exact(const LinearCode &ca, const LinearCode &cb,
                                  std::uint64_t cap = std::uint64_t{1} << 30);

struct AgreementReport {
  bool vacuous = false;
  Rational d2 = 0;
};
/// d2' from the agreement-testing definition: pairs (c_a, c_b) against all
/// c in C_A (x) C_B.
AgreementReport agreement_test_parameter(const LinearCode &ca,
                                         const LinearCode &cb,
                                         std::uint64_t cap = std::uint64_t{1}
                                                             << 30);

struct StructuredResult {
  Decomposition dec;
  bool bound_checked = false; // |Ia|,|Ib| < d1/2
  bool bound_holds = true;    // |c| >= (d1/2) * cost
};
/// Recovers c = c_a + c_b with c_a on columns Ib and c_b on rows Ia via left
/// inverses of H restricted to Ia / Ib.
StructuredResult structured_decomposition(const TensorWord &c,
                                          const std::vector<std::size_t> &ia,
                                          const std::vector<std::size_t> &ib,
                                          const LinearCode &ca,
                                          const LinearCode &cb);

struct HeavyCheck {
  bool pass = true;
  std::vector<std::size_t> ia, ib; // punctured coordinates of the witness
  TensorWord witness;              // in Sigma(C_A', C_B')
  std::uint64_t words_examined = 0;
};
HeavyCheck punctured_heavy_check(const LinearCode &ca, const LinearCode &cb,
                                 std::size_t s, std::size_t t,
                                 std::uint64_t cap = std::uint64_t{1} << 28);

/// Y(H_A, H_B): F^{na x nb} -> F^{na x mb} + F^{ma x nb} -> F^{ma x mb}.
struct LocalTensorComplex {
  BitMatrix ha, hb, d2, d1;
  std::size_t na, nb, ma, mb;
};
LocalTensorComplex local_complex(const BitMatrix &ha, const BitMatrix &hb);

struct ExactnessReport {
  bool chain_ok = false;
  std::size_t rank_d1 = 0, rank_d2 = 0, dim_ker_d1 = 0, h1 = 0;
  bool exact() const { return chain_ok && h1 == 0; }
};
ExactnessReport exactness_check(const LocalTensorComplex &y);

struct LiftResult {
  TensorWord c2;
  std::size_t norm_c1 = 0, norm_c2 = 0; // rows + columns
  Rational bound = 0;                    // (1 + Delta/d2) * norm_c1
  bool bound_holds = true;
};
/// Preimage c2 of c1 under d2 built from zero-padded local guesses and a
/// minimal decomposition of their sum. `robust` is the report of the pair
/// (ker H_A, ker H_B). Throws std::invalid_argument if c1 is not in im d2.
LiftResult lift_small(const LocalTensorComplex &y, const BitVector &c1,
                      const RobustnessReport &robust);

} // namespace lrq
