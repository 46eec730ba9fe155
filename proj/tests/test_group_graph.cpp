#include "lrq/group_graph.h"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

using namespace lrq;

TEST_CASE("PSL(2,q) orders and group axioms") {
  std::mt19937_64 rng(1);
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    const FiniteGroup g = build_psl2(q);
    CHECK(g.order == q * (q * q - 1) / 2);
    CHECK(g.validate(rng));
  }
  CHECK_THROWS(build_psl2(9));
}

TEST_CASE("tables that are not groups are rejected") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
}

TEST_CASE("LPS generator validity follows the Legendre symbol") {
  CHECK(legendre(5, 13) == -1);
  CHECK(legendre(17, 13) == 1);
  const FiniteGroup g = build_psl2(13);
  CHECK_THROWS_AS(lps_generators(g, 5, 13), std::invalid_argument);
  const GeneratorSet s = lps_generators(g, 17, 13);
  CHECK(s.size() == 18);
  CHECK_NOTHROW(check_generators(g, s));
}

TEST_CASE("generator sets must be inverse-closed and identity-free") {
  const FiniteGroup g = build_cyclic_group(7);
  CHECK_THROWS_AS(check_generators(g, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(check_generators(g, {{0, 1, 6}}), std::invalid_argument);
  CHECK_THROWS_AS(check_generators(g, {{1, 6, 1, 6}}), std::invalid_argument);
  CHECK_NOTHROW(check_generators(g, {{1, 6}}));
}

TEST_CASE("Cayley graphs are regular, and the double cover is bipartite") {
  std::mt19937_64 rng(5);
  const FiniteGroup g = build_psl2(7);
  for (std::size_t delta : {3u, 4u, 6u}) {
    for (Side side : {Side::left, Side::right}) {
      const GeneratorSet s = random_generators(g, delta, rng, side);
      const Graph c = cayley_graph(g, s);
      CHECK(c.degree() == delta);
      CHECK(c.num_arcs() == delta * g.order);
      const SpectralReport rep = spectral_report(c);
      CHECK(rep.eigenvalues.front() == doctest::Approx(double(delta)));
      CHECK(rep.lambda <= double(delta) + 1e-9);
      const Graph d = double_cover(c);
      CHECK(d.degree() == delta);
      for (std::uint32_t v = 0; v < d.num_vertices(); ++v)
        for (auto w : d.nbr[v])
          CHECK((v < g.order) != (w < g.order));
    }
  }
}

TEST_CASE("cycle spectrum matches the closed form") {
  const auto [g, s] = build_cyclic(12, {1, -1});
  const SpectralReport rep = spectral_report(cayley_graph(g, s));
  // eigenvalues 2 cos(2 pi j / 12); lambda is |-2| since the cycle is bipartite
  CHECK(rep.lambda == doctest::Approx(2.0));
  CHECK(rep.eigenvalues[1] == doctest::Approx(2 * std::cos(2 * M_PI / 12)));
}

TEST_CASE("mixing lemma holds on sampled sets") {
  std::mt19937_64 rng(6);
  const FiniteGroup g = build_psl2(5);
  const Graph c = cayley_graph(g, random_generators(g, 4, rng));
  const MixingResult m = mixing_check(c, spectral_report(c), 300, rng);
  CHECK(m.pass);
  CHECK(m.worst_slack >= 0);
}
