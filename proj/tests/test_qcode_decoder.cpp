#include "oracles.h"
#include "lrq/radii.h"

#include <doctest.h>

#include <stdexcept>

using namespace lrq;

namespace {

const Instance &small() {
  static const Instance inst = build_instance(parse_config(
      oracle::cyclic_config(5, {1, 4}, {2, 3}, {{"repetition", 2}}, {{"repetition", 2}})));
  return inst;
}

const Instance &rep3_cyclic() {
  static const Instance inst = build_instance(parse_config(
      oracle::cyclic_config(10, {1, -1, 5}, {1, -1, 5}, {{"repetition", 3}}, {{"repetition", 3}})));
  return inst;
}

const Instance &decodable() {
  static const Instance inst = build_instance(parse_config(oracle::decodable_config()));
  return inst;
}

BitVector random_vector(std::size_t n, double p, std::mt19937_64 &rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    v.set(i, bernoulli(rng, p));
  return v;
}

} // namespace

TEST_CASE("coboundaries are the transposed boundaries") {
  const ChainComplexX &x = *rep3_cyclic().x;
  std::mt19937_64 rng(31);
  const BitMatrix d2t = x.d2().transpose(), d1t = x.d1().transpose();
  for (int it = 0; it < 20; ++it) {
    const BitVector c1 = random_vector(x.size(1), 0.3, rng), c0 = random_vector(x.size(0), 0.3, rng);
    CHECK(x.coboundary1(c1) == d2t.apply(c1));
    CHECK(x.coboundary0(c0) == d1t.apply(c0));
  }
  CHECK(oracle::all_zero(oracle::product(oracle::dense(x.d1()), oracle::dense(x.d2()))));
}

TEST_CASE("cell norm sits between Hamming weight bounds") {
  const ChainComplexX &x = *decodable().x;
  std::mt19937_64 rng(32);
  for (int grade = 0; grade <= 2; ++grade)
    for (int it = 0; it < 30; ++it) {
      const BitVector v = random_vector(x.size(grade), 0.02 * (it % 5), rng);
      const std::size_t cells = x.cell_norm(grade, v), w = v.weight();
      std::size_t widest = 0;
      for (std::uint32_t c = 0; c < x.num_cells(grade); ++c)
        widest = std::max(widest, x.block(grade, c));
      CHECK(cells <= w);
      CHECK(w <= widest * cells);
    }
}

TEST_CASE("CSS export and dimension agree") {
  const ChainComplexX &x = *small().x;
  const CssCode css = css_code(x);
  CHECK(oracle::all_zero(oracle::product(oracle::dense(css.hx), oracle::dense(css.hz.transpose()))));
  CHECK(css.k == css.n - oracle::rank(oracle::dense(css.hx)) - oracle::rank(oracle::dense(css.hz)));
  CHECK(dimension_and_rate(x).k == css.k);
}

TEST_CASE("distance witnesses are logical operators of the reported weight") {
  const ChainComplexX &x = *small().x;
  const QuantumDistance q = quantum_distance_exact(x);
  REQUIRE(q.dx);
  REQUIRE(q.dz);
  CHECK(q.k == 2);
  CHECK(q.dx->hamming == 6);
  CHECK(q.dz->hamming == 6);
  SpanTester im_d1t(x.size(1)), im_d2(x.size(1));
  const BitMatrix d1t = x.d1().transpose();
  for (std::size_t c = 0; c < d1t.cols(); ++c)
    im_d1t.add(d1t.column(c));
  for (std::size_t c = 0; c < x.d2().cols(); ++c)
    im_d2.add(x.d2().column(c));

  const BitVector &wx = q.dx->witness_hamming;
  CHECK(wx.weight() == q.dx->hamming);
  CHECK(x.coboundary1(wx).is_zero());
  CHECK_FALSE(im_d1t.contains(wx));
  const BitVector &wz = q.dz->witness_hamming;
  CHECK(wz.weight() == q.dz->hamming);
  CHECK(x.boundary1(wz).is_zero());
  CHECK_FALSE(im_d2.contains(wz));
  CHECK(x.cell_norm(1, q.dx->witness_cell) == q.dx->cell);
  CHECK(q.dx->cell <= q.dx->hamming);

  CHECK_THROWS_AS(quantum_distance_exact(*decodable().x, 1u << 10), std::length_error);
}

TEST_CASE("co-decoders leave a zero syndrome alone") {
  const FlipTable t(*decodable().x);
  const BitVector zero(decodable().x->size(2));
  for (auto *fn : {&co_decode_simple, &co_decode_queue}) {
    const CoDecodeResult r = fn(t, zero);
    CHECK(r.success);
    CHECK(r.correction.is_zero());
    CHECK(r.iterations == 0);
  }
  CHECK(co_locally_minimal(t, zero));
}

TEST_CASE("co-decoders correct sampled weight-2 errors up to coboundaries") {
  const ChainComplexX &x = *decodable().x;
  const FlipTable t(x);
  std::mt19937_64 rng(33);
  for (int it = 0; it < 200; ++it) {
    BitVector e(x.size(1));
    e.set(uniform_below(rng, e.size()));
    e.set(uniform_below(rng, e.size()));
    const BitVector s = x.coboundary1(e);
    const CoDecodeResult r = co_decode_queue(t, s);
    CHECK(r.success);
    CHECK(r.final_syndrome.is_zero());
    CHECK(verify_correction(x, r.correction, e, Direction::cochain));
  }
}

TEST_CASE("restricted search needs an explicit opt-in") {
  const ChainComplexX &x = *decodable().x;
  DecoderOptions opt;
  opt.cap = 1u << 4;
  CHECK_THROWS_AS(FlipTable(x, opt), std::length_error);
  opt.allow_restricted = true;
  const FlipTable t(x, opt);
  CHECK(t.restricted());
  const CoDecodeResult r = co_decode_simple(t, BitVector(x.size(2)));
  CHECK(r.restricted);
}

TEST_CASE("reconstruction corrects every single-bit chain error") {
  const Instance &inst = rep3_cyclic();
  const ChainComplexX xd = dual_complex(inst.complex, inst.ca, inst.cb);
  const ReconstructDecoder dec(*inst.x, xd);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < inst.x->size(1); ++i) {
    const BitVector e = BitVector::unit(inst.x->size(1), i);
    const ReconstructResult r = dec.decode(inst.x->boundary1(e));
    if (r.success && verify_correction(*inst.x, r.correction, e, Direction::chain))
      ++ok;
  }
  CHECK(ok == inst.x->size(1));
}

TEST_CASE("local flip reduction stays in the same class") {
  const ChainComplexX &x = *rep3_cyclic().x;
  std::mt19937_64 rng(34);
  for (int it = 0; it < 20; ++it) {
    const BitVector c1 = random_vector(x.size(1), 0.05, rng);
    const LocalFlipResult r = local_flip_reduce(x, c1);
    CHECK(r.reduced == (c1 ^ x.boundary2(r.c2)));
    CHECK(x.cell_norm(1, r.reduced) <= x.cell_norm(1, c1));
  }
}

TEST_CASE("decoding radii on a hand-derived case") {
  const DecodingRadii r = decoding_radii(20, 20, 1, 10);
  CHECK(r.eta == Rational(5, 2));
  CHECK(r.eta_prime == Rational(1, 7));
  CHECK(r.kappa == Rational(3, 224));
  CHECK(guaranteed_radius(r, 224) == 3);
  CHECK_THROWS_AS(decoding_radii(20, 20, 1, 0), std::invalid_argument);
  CHECK_FALSE(decoding_radii(4, 4, 2, 4).applicable());
}

TEST_CASE("expansion probe reports consistent witnesses") {
  const ChainComplexX &x = *small().x;
  std::mt19937_64 rng(35);
  // Forcing a tiny lambda makes the radii applicable on a graph that is not
  // that good an expander, so violations are allowed; any reported witness
  // must genuinely break the inequality and be co-locally minimal.
  const ExpansionProbeReport rep = expansion_probe(x, Rational(1, 100), 6, 6, 200, 3, rng);
  CHECK(rep.samples == 200);
  CHECK(rep.radii.applicable());
  if (rep.violations > 0) {
    BitVector w = rep.violation_witness;
    const std::size_t norm = x.cell_norm(1, w);
    REQUIRE(norm > 0);
    const Rational rhs = rep.bound.lin * norm -
                         rep.bound.quad * norm * norm / Rational(x.complex().order());
    CHECK(Rational(x.coboundary1(w).weight()) < rhs);
    CHECK(co_local_reduce(x, w) == 0);
  }
  // with the bound coefficients zeroed by a huge lambda nothing can fail
  const ExpansionProbeReport loose = expansion_probe(x, 1000, 1, 1, 100, 3, rng);
  CHECK_FALSE(loose.radii.applicable());
}
