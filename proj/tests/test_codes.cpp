#include "oracles.h"
#include "lrq/counting.h"
#include "lrq/tensor.h"

#include <doctest.h>

#include <stdexcept>

#include <sstream>

using namespace lrq;

namespace {

LinearCode code(std::vector<std::string> rows) {
  return LinearCode::from_parity_check(BitMatrix::from_rows(rows));
}
const LinearCode rep3 = code({"110", "011"});
const LinearCode hamming7 = code({"1010101", "0110011", "0001111"});

} // namespace

TEST_CASE("distance and dimension against brute force") {
  std::mt19937_64 rng(21);
  CHECK(distance_exact(hamming7) == 3);
  CHECK(hamming7.k() == 4);
  CHECK(distance_exact(dual(hamming7)) == 4);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 3 + uniform_below(rng, 10), k = 1 + uniform_below(rng, n - 1);
    const LinearCode c = sample_uniform(n, k, rng);
    CHECK(c.k() == k);
    CHECK(rank(c.H()) == c.m());
    CHECK(c.m() + k == n);
    CHECK(oracle::codewords(c.H()).size() == (std::size_t{1} << k));
    CHECK(distance_exact(c) == oracle::min_distance(c.H()));
    CHECK(same_code(dual(dual(c)), c));
    for (const auto &w : c.codewords())
      CHECK(c.contains(w));
  }
  CHECK(distance_exact(code({"100", "010", "001"})) == distance_infinite);
}

TEST_CASE("puncturing drops coordinates") {
  const LinearCode p = puncture(hamming7, {0});
  CHECK(p.n() == 6);
  CHECK(p.k() == 4);
  CHECK(distance_exact(p) == 2);
  CHECK_THROWS_AS(puncture(hamming7, {7}), std::invalid_argument);
}

TEST_CASE("alist and MatrixMarket round trip") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 20; ++it) {
    const LinearCode c = sample_uniform(12, 5, rng);
    std::stringstream a, m;
    write_alist(a, c.H());
    write_mtx(m, c.H());
    CHECK(oracle::dense(read_alist(a)) == oracle::dense(c.H()));
    CHECK(oracle::dense(read_mtx(m)) == oracle::dense(c.H()));
  }
  std::istringstream bad("3 2\n");
  CHECK_THROWS(read_alist(bad));
}

TEST_CASE("exact robustness matches the decomposition oracle") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 8; ++it) {
    const LinearCode a = sample_uniform(4, 2, rng), b = sample_uniform(4, 2, rng);
    const RobustnessReport r = robustness_exact(a, b);
    const oracle::RobustOracle o = oracle::robustness(a.H(), b.H());
    REQUIRE(r.vacuous == o.vacuous);
    if (!r.vacuous) {
      CHECK(r.d2 == o.d2);
      const auto costs = oracle::sigma_costs(a.H(), b.H());
      CHECK(costs.at(r.witness.bits) == r.witness_decomposition.cost);
    }
  }
}

TEST_CASE("sigma membership agrees with the enumerated sum code") {
  const LinearCode a = code({"1100", "0011"}), b = code({"1111"});
  const auto costs = oracle::sigma_costs(a.H(), b.H());
  for (std::uint64_t w = 0; w < (1u << 16); w += 7)
    CHECK(sigma_member(TensorWord(4, 4, w), a, b) == costs.count(w));
}

TEST_CASE("heavy-row check fails for repetition codes at s = 0, t = d1") {
  // One all-ones column plus one all-ones row lies in Sigma, yet no row or
  // column reaches weight 3.
  const HeavyCheck h = punctured_heavy_check(rep3, rep3, 0, 3);
  CHECK_FALSE(h.pass);
  CHECK(sigma_member(h.witness, rep3, rep3));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::popcount(h.witness.row(i)) < 3);
    CHECK(std::popcount(h.witness.col(i)) < 3);
  }
  CHECK(punctured_heavy_check(rep3, rep3, 0, 1).pass);
}

TEST_CASE("structured decomposition recovers planted words") {
  const LinearCode rep5 = code({"11000", "01100", "00110", "00011"});
  std::mt19937_64 rng(24);
  for (int it = 0; it < 200; ++it) {
    std::vector<std::size_t> ia, ib;
    for (std::size_t i = 0; i < 5; ++i) {
      if (ia.size() < 2 && bernoulli(rng, 0.4))
        ia.push_back(i);
      if (ib.size() < 2 && bernoulli(rng, 0.4))
        ib.push_back(i);
    }
    TensorWord c(5, 5);
    for (auto j : ib)
      if (rng() & 1)
        for (std::size_t i = 0; i < 5; ++i)
          c.bits ^= std::uint64_t{1} << (i * 5 + j);
    for (auto i : ia)
      if (rng() & 1)
        c.bits ^= std::uint64_t{31} << (i * 5);
    const StructuredResult s = structured_decomposition(c, ia, ib, rep5, rep5);
    CHECK((s.dec.ca.bits ^ s.dec.cb.bits) == c.bits);
    CHECK(s.bound_holds);
  }
}

TEST_CASE("local complex exactness needs full-rank checks") {
  const LocalTensorComplex y = local_complex(hamming7.H(), rep3.H());
  const ExactnessReport e = exactness_check(y);
  CHECK(e.chain_ok);
  CHECK(e.exact());
  const LocalTensorComplex z =
      local_complex(BitMatrix::from_rows({"110", "011", "101"}), rep3.H());
  const ExactnessReport f = exactness_check(z);
  CHECK(f.chain_ok);
  CHECK(f.h1 > 0);
}

TEST_CASE("lift_small returns a preimage within its bound") {
  const BitMatrix ha = BitMatrix::from_rows({"1111"}), hb = BitMatrix::from_rows({"1100", "0011"});
  const LocalTensorComplex y = local_complex(ha, hb);
  const RobustnessReport r =
      robustness_exact(LinearCode::from_parity_check(ha), LinearCode::from_parity_check(hb));
  std::mt19937_64 rng(25);
  for (int it = 0; it < 300; ++it) {
    BitVector c2(16);
    for (std::size_t i = 0; i < 16; ++i)
      c2.set(i, bernoulli(rng, 0.2));
    const BitVector c1 = y.d2.apply(c2);
    const LiftResult l = lift_small(y, c1, r);
    CHECK(y.d2.apply(l.c2.vec()) == c1);
    CHECK(l.bound_holds);
  }
  BitVector outside(y.d2.rows());
  outside.set(0);
  CHECK_THROWS_AS(lift_small(y, outside, r), std::invalid_argument);
}

TEST_CASE("Gaussian binomials and their bracket") {
  for (unsigned x = 0; x <= 9; ++x)
    for (unsigned y = 0; y <= x; ++y) {
      CHECK(gaussian_binomial(x, y) == oracle::gaussian_recurrence(x, y));
      CHECK(gaussian_bracket(x, y).holds);
    }
  CHECK(gaussian_binomial(4, 2) == oracle::count_subspaces(4, 2));
  CHECK_THROWS(gaussian_binomial(2, 3));
}

TEST_CASE("bad-matrix histogram matches brute force") {
  const auto hist = bad_matrix_histogram(3);
  const auto brute = oracle::bad_counts(3);
  for (unsigned r = 0; r <= 3; ++r)
    for (unsigned t = 1; t <= 4; ++t)
      CHECK(bad_matrix_count(hist, r, t) == brute[r][t]);
}

TEST_CASE("union bound report validates its arguments") {
  CHECK_THROWS_AS(union_bound_report(8, 8, 0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(union_bound_report(8, 2, 4, 2, 2), std::invalid_argument);
  const UnionBoundReport u = union_bound_report(8, 3, 2, 2, 2);
  CHECK(u.rows.size() == 5);
  CHECK(u.all_exhaustive_hold);
}

TEST_CASE("entropy and GV domain") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0) == 0);
  CHECK(binary_entropy(0.11) == doctest::Approx(0.4999).epsilon(1e-3));
  CHECK_THROWS_AS(gv2d_evaluate(0.5, 0.5, 0.6, 0.01), std::domain_error);
  CHECK_THROWS_AS(gv2d_evaluate(0.5, 0.5, 0.2, gv2d_delta2_max(0.2)), std::domain_error);
  // high-rate pairs leave nothing feasible
  CHECK_FALSE(gv2d_feasible(0.9, 0.9, 0.4, 0.001));
}
