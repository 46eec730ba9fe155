#include "lrq/radii.h"

#include "lrq/rng.h"

#include <bit>
#include <stdexcept>

namespace lrq {

DecodingRadii decoding_radii(const Rational &d1, const Rational &d2,
                             const Rational &lambda, const Rational &delta) {
  if (delta <= 0 || d1 < 0 || d2 < 0 || lambda < 0)
    throw std::invalid_argument("decoding_radii: need Delta > 0 and "
                                "non-negative d1, d2, lambda");
  DecodingRadii r;
  const Rational den = delta * d2 / 2 + 2 * delta;
  r.eta = (d1 * d2 - lambda * d2 - 8 * lambda * delta) / den;
  r.eta_prime = (d1 * d2 / 4 - lambda * d2 / 2 - 8 * lambda * delta) /
                (delta * d2 / 4 + 2 * delta);
  r.kappa = den / (8 * delta * d2 + 16 * delta * delta) * r.eta_prime * r.eta;
  r.eta_positive = r.eta > 0;
  r.eta_prime_positive = r.eta_prime > 0;
  return r;
}

Rational guaranteed_radius(const DecodingRadii &r, std::size_t group_order) {
  if (!r.applicable())
    return 0;
  return r.kappa * Rational(group_order);
}

CoExpansionBound co_expansion_bound(const Rational &d1, const Rational &d2,
                                    const Rational &lambda,
                                    const Rational &delta) {
  CoExpansionBound b;
  const Rational den = 4 * d2 + 8 * delta;
  b.lin = (d1 * d2 - lambda * d2 - 8 * lambda * delta) / den;
  b.quad = (delta * d2 / 2 + 2 * delta) / den;
  return b;
}

std::size_t co_local_reduce(const ChainComplexX &x, BitVector &c1) {
  const auto &cx = x.complex();
  const std::size_t blk = x.ma() * x.mb();
  if (blk > 20)
    throw std::length_error("co_local_reduce: vertex block of " +
                            std::to_string(blk) + " bits is too large");
  const std::size_t delta = cx.delta();
  const auto nv = static_cast<std::uint32_t>(cx.num_vertices());
  std::size_t moves = 0;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::uint32_t v = 0; v < nv; ++v) {
      std::vector<std::uint32_t> edges;
      for (std::uint32_t a = 0; a < delta; ++a)
        edges.push_back(cx.vertex_vertical(v, a));
      for (std::uint32_t b = 0; b < delta; ++b)
        edges.push_back(cx.vertex_horizontal(v, b));
      // local columns of delta^0 = rows of d1 for this vertex
      std::vector<BitVector> cols(blk);
      for (std::size_t i = 0; i < blk; ++i)
        cols[i] = x.d1().row(x.offset(0, v) + i);
      auto local_norm = [&](const BitVector &c) {
        std::size_t n = 0;
        for (auto e : edges)
          n += x.get_block(1, c, e) != 0;
        return n;
      };
      const std::size_t base = local_norm(c1);
      std::size_t best = base;
      std::uint64_t best_e = 0;
      BitVector cur = c1;
      for (std::uint64_t i = 1; i < (std::uint64_t{1} << blk); ++i) {
        cur ^= cols[std::countr_zero(i)];
        const std::size_t n = local_norm(cur);
        if (n < best) {
          best = n;
          best_e = i ^ (i >> 1);
        }
      }
      if (best < base) {
        for (std::size_t i = 0; i < blk; ++i)
          if ((best_e >> i) & 1)
            c1 ^= cols[i];
        ++moves;
        improved = true;
      }
    }
  }
  return moves;
}

ExpansionProbeReport expansion_probe(const ChainComplexX &x,
                                     const Rational &lambda,
                                     const Rational &d1, const Rational &d2,
                                     std::size_t samples,
                                     std::size_t max_cells,
                                     std::mt19937_64 &rng) {
  const auto &cx = x.complex();
  const Rational delta(cx.delta());
  ExpansionProbeReport rep;
  rep.radii = decoding_radii(d1, d2, lambda, delta);
  rep.bound = co_expansion_bound(d1, d2, lambda, delta);
  const auto ne = static_cast<std::uint32_t>(cx.num_edges());
  bool first = true;
  for (std::size_t s = 0; s < samples; ++s) {
    BitVector c(x.size(1));
    const std::size_t cells = 1 + uniform_below(rng, std::max<std::size_t>(max_cells, 1));
    for (std::size_t k = 0; k < cells; ++k) {
      auto e = static_cast<std::uint32_t>(uniform_below(rng, ne));
      const std::size_t w = x.block(1, e);
      if (w == 0)
        continue;
      std::uint64_t bits = 1 + uniform_below(rng, (std::uint64_t{1} << w) - 1);
      x.xor_block(1, c, e, bits);
    }
    co_local_reduce(x, c);
    ++rep.samples;
    const std::size_t norm = x.cell_norm(1, c);
    if (norm == 0)
      continue;
    ++rep.nonzero_after_reduce;
    const std::size_t lhs = x.coboundary1(c).weight();
    const Rational rhs = rep.bound.lin * norm -
                         rep.bound.quad * norm * norm / Rational(cx.order());
    const double slack = to_double(Rational(lhs) - rhs);
    if (first || slack < rep.worst_slack)
      rep.worst_slack = slack;
    first = false;
    if (Rational(lhs) < rhs) {
      if (rep.violations == 0)
        rep.violation_witness = c;
      ++rep.violations;
    }
  }
  return rep;
}

} // namespace lrq
