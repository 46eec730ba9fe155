#include "oracles.h"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace lrq;

namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64 &rng, double p = 0.5) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (bernoulli(rng, p))
        m.set(i, j);
  return m;
}

} // namespace

TEST_CASE("rank agrees with byte-matrix elimination") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = 1 + uniform_below(rng, 12), c = 1 + uniform_below(rng, 90);
    const BitMatrix m = random_matrix(r, c, rng, it % 3 == 0 ? 0.1 : 0.5);
    CHECK(rank(m) == oracle::rank(oracle::dense(m)));
    CHECK(rank(m.transpose()) == rank(m));
  }
}

TEST_CASE("kernel basis spans the kernel") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 100; ++it) {
    const std::size_t r = 1 + uniform_below(rng, 10), c = 1 + uniform_below(rng, 70);
    const BitMatrix m = random_matrix(r, c, rng);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() + rank(m) == c);
    for (const auto &v : ker)
      CHECK(m.apply(v).is_zero());
    if (!ker.empty())
      CHECK(rank(BitMatrix::from_rows(ker, c)) == ker.size());
  }
}

TEST_CASE("solve_affine finds solutions exactly when they exist") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = 1 + uniform_below(rng, 8), c = 1 + uniform_below(rng, 8);
    const BitMatrix m = random_matrix(r, c, rng, 0.4);
    BitVector b(r);
    for (std::size_t i = 0; i < r; ++i)
      b.set(i, bernoulli(rng, 0.5));
    bool exists = false;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << c) && !exists; ++x) {
      BitVector v(c);
      for (std::size_t j = 0; j < c; ++j)
        v.set(j, (x >> j) & 1);
      exists = m.apply(v) == b;
    }
    const auto sol = solve_affine(m, b);
    REQUIRE(sol.has_value() == exists);
    if (sol) {
      CHECK(m.apply(sol->particular) == b);
      CHECK(sol->kernel.size() == c - rank(m));
    }
  }
}

TEST_CASE("left inverse and kron") {
  const BitMatrix m = BitMatrix::from_rows({"10", "11", "01"});
  const BitMatrix j = left_inverse(m);
  CHECK(oracle::product(oracle::dense(j), oracle::dense(m)) == oracle::eye(2));
  CHECK_THROWS_AS(left_inverse(BitMatrix::from_rows({"11", "11"})), std::domain_error);

  const BitMatrix a = BitMatrix::from_rows({"101", "011"}), b = BitMatrix::from_rows({"11", "10"});
  CHECK(oracle::dense(kron(a, b)) == oracle::kron(oracle::dense(a), oracle::dense(b)));
}

TEST_CASE("span tester and minimum weight") {
  const std::vector<BitVector> gens{BitVector::from_string("1100"), BitVector::from_string("0110")};
  SpanTester s(gens, 4);
  CHECK(s.dim() == 2);
  CHECK(s.contains(BitVector::from_string("1010")));
  CHECK_FALSE(s.contains(BitVector::from_string("1000")));
  const auto w = min_weight_nonzero(gens);
  REQUIRE(w);
  CHECK(w->weight == 2);
}

TEST_CASE("bit vector string round trip and word boundaries") {
  std::string bits(130, '0');
  bits[0] = bits[63] = bits[64] = bits[129] = '1';
  const BitVector v = BitVector::from_string(bits);
  CHECK(v.weight() == 4);
  CHECK(v.to_string() == bits);
  CHECK(v.support() == std::vector<std::size_t>{0, 63, 64, 129});
  CHECK_THROWS(BitVector::from_string("10x"));
}
