#pragma once

// Small-set-flip co-decoders on X(G2, C_A, C_B), the local flip reduction of
// chains and the reconstruction decoder that recovers a chain from its
// boundary using the co-decoder of the dual-code complex.

#include "lrq/qcode.h"

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lrq {

struct DecoderOptions {
  /// Exhaustive local search is allowed up to 2^{Delta(m_a+m_b)} <= cap.
  std::uint64_t cap = std::uint64_t{1} << 20;
  /// Above the cap: search flips of support <= max_support instead of
  /// refusing. The decoder then carries no guarantee and reports it.
  bool allow_restricted = false;
  std::size_t max_support = 2;
};

/// A local flip at one vertex. Bit i of the local pattern (vertical slots
/// a = 0.., m_b bits each, then horizontal slots b = 0.., m_a bits each) is
/// stored at position L-1-i of `pattern`, so integer order = lexicographic.
struct Flip {
  std::uint64_t pattern = 0;
  std::size_t drop = 0;
};

/// Precomputed effect of every local flip on the Delta^2 faces around a
/// vertex (face (a,b) at bit a*Delta + b). Identical for all vertices.
class FlipTable {
public:
  FlipTable(const ChainComplexX &x, const DecoderOptions &opt = {});

  const ChainComplexX &complex() const { return *x_; }
  std::size_t local_bits() const { return l_; }
  bool restricted() const { return restricted_; }

  std::uint64_t local_syndrome(std::uint32_t v, const BitVector &c2) const;
  /// Best strictly-decreasing flip for this local syndrome, if any.
  std::optional<Flip> best_flip(std::uint64_t local_syndrome) const;
  std::optional<Flip> find_flip(std::uint32_t v, const BitVector &c2) const {
    return best_flip(local_syndrome(v, c2));
  }
  /// Applies the flip: updates the correction and the face syndrome.
  void apply(std::uint32_t v, std::uint64_t pattern, BitVector &correction,
             BitVector &c2) const;
  /// Face mask of a pattern.
  std::uint64_t face_mask(std::uint64_t pattern) const;

private:
  const ChainComplexX *x_;
  std::size_t delta_, l_;
  bool restricted_ = false;
  std::vector<std::uint64_t> bit_mask_;   // per local bit i
  std::vector<std::uint64_t> all_masks_;  // full mode, indexed by pattern
  std::vector<std::pair<std::uint64_t, std::uint64_t>> candidates_; // restricted
  // memoised best_flip per local syndrome (Delta^2 <= 22)
  std::unique_ptr<std::atomic<std::uint64_t>[]> cache_;
  std::optional<Flip> search_flip(std::uint64_t local_syndrome) const;
};

struct CoDecodeResult {
  bool success = false;
  BitVector correction;     // grade 1
  BitVector final_syndrome; // grade 2
  std::size_t iterations = 0, flips_evaluated = 0;
  bool restricted = false;  // search was restricted: no guarantee
};

/// Rescans vertices from index 0 after each accepted flip.
CoDecodeResult co_decode_simple(const FlipTable &t, const BitVector &c2);
/// FIFO of candidate vertices seeded from the syndrome support.
CoDecodeResult co_decode_queue(const FlipTable &t, const BitVector &c2);
/// True iff no vertex admits a strictly decreasing flip.
bool co_locally_minimal(const FlipTable &t, const BitVector &c2);

enum class Direction { chain, cochain }; // B_1 = im d2, B^1 = im d1^T

/// Membership tests in B_1 or B^1 with a prebuilt echelon basis.
class BoundaryTester {
public:
  BoundaryTester(const ChainComplexX &x, Direction d);
  bool contains(const BitVector &v) const { return span_.contains(v); }

private:
  SpanTester span_;
};

bool verify_correction(const ChainComplexX &x, const BitVector &claimed,
                       const BitVector &true_error, Direction d);

struct LocalFlipResult {
  BitVector reduced; // grade 1, locally minimal
  BitVector c2;      // faces used; reduced = input + d2 c2
  std::size_t iterations = 0;
};
LocalFlipResult local_flip_reduce(const ChainComplexX &x, const BitVector &c1);

struct ReconstructResult {
  bool success = false;
  std::string stage;     // failing stage, empty on success
  BitVector correction;  // grade 1, only meaningful on success
  CoDecodeResult dual;   // run on the dual-code complex
  std::size_t step1_cells = 0, step3_cells = 0;
};

/// Decoder for the chain direction: from c0 = d1 c1 find c1' in c1 + B_1.
class ReconstructDecoder {
public:
  ReconstructDecoder(const ChainComplexX &x, const ChainComplexX &x_dual,
                     const DecoderOptions &opt = {}, bool use_queue = true);

  /// Minimal-cell local chain at a vertex with d1 = target (vertex block),
  /// least pattern on ties; as 2*Delta blocks (vertical slots, then
  /// horizontal). Throws std::invalid_argument for an inconsistent target.
  std::vector<std::uint64_t> local_minimal_solve(std::uint64_t target) const;
  ReconstructResult decode(const BitVector &c0) const;
  const FlipTable &dual_table() const { return dual_table_; }

private:
  const ChainComplexX *x_, *xd_;
  FlipTable dual_table_;
  bool use_queue_;
  std::size_t delta_;
  // Step 1: per vertex-block target, best local pattern (or none).
  std::vector<std::int64_t> step1_;
  // Step 3: least preimage of H_A / H_B per syndrome (or none).
  std::vector<std::int64_t> pre_a_, pre_b_;
  std::vector<std::uint64_t> unpack(std::uint64_t pattern) const;
};

} // namespace lrq
