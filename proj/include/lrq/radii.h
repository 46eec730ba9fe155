#pragma once

#include "lrq/qcode.h"
#include "lrq/rational.h"

#include <random>

namespace lrq {

/// eta, eta' and kappa of the co-decoder theorem, in exact arithmetic.
struct DecodingRadii {
  Rational eta = 0, eta_prime = 0, kappa = 0;
  bool eta_positive = false, eta_prime_positive = false;
  bool applicable() const { return eta_positive && eta_prime_positive; }
};

/// lambda is converted exactly from its binary value. Throws
/// std::invalid_argument for a non-positive Delta or negative inputs.
DecodingRadii decoding_radii(const Rational &d1, const Rational &d2,
                             const Rational &lambda, const Rational &delta);

/// Guaranteed error radius in cells: kappa |X(1)| / (2 Delta (m_a + m_b)),
/// i.e. kappa * |G| (zero when the theorem does not apply).
Rational guaranteed_radius(const DecodingRadii &r, std::size_t group_order);

/// Coefficients of ||delta^1 c|| >= lin ||c|| - quad ||c||^2 / |G|.
struct CoExpansionBound {
  Rational lin = 0, quad = 0;
};
CoExpansionBound co_expansion_bound(const Rational &d1, const Rational &d2,
                                    const Rational &lambda,
                                    const Rational &delta);

/// Reduce c^1 by single-vertex coboundaries delta^0 e^0 while the cell norm
/// strictly drops. Returns the number of accepted moves.
std::size_t co_local_reduce(const ChainComplexX &x, BitVector &c1);

struct ExpansionProbeReport {
  DecodingRadii radii;
  CoExpansionBound bound;
  std::size_t samples = 0, nonzero_after_reduce = 0, violations = 0;
  double worst_slack = 0; // min of lhs - rhs over nonzero samples
  BitVector violation_witness;
};
/// Samples random grade-1 cochains of at most `max_cells` nonzero cells,
/// makes them co-locally minimal and checks the co-expansion inequality.
ExpansionProbeReport expansion_probe(const ChainComplexX &x,
                                     const Rational &lambda,
                                     const Rational &d1, const Rational &d2,
                                     std::size_t samples,
                                     std::size_t max_cells,
                                     std::mt19937_64 &rng);

} // namespace lrq
