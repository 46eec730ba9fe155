#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lrq {

/// Finite group as a full multiplication table over element indices.
struct FiniteGroup {
  std::uint32_t order = 0;
  std::uint32_t id = 0;
  std::vector<std::uint32_t> mul_table; // mul_table[a*order+b] = a*b
  std::vector<std::uint32_t> inv_table;
  std::vector<std::string> labels;      // human-readable element names

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_table[std::size_t{a} * order + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_table[a]; }

  /// Validates a table given in full; throws std::invalid_argument.
  static FiniteGroup from_table(std::vector<std::vector<std::uint32_t>> table);
  /// Spot-checks associativity on `samples` random triples (all triples when
  /// order^3 <= samples), plus identity and inverse laws.
  bool validate(std::mt19937_64 &rng, std::size_t samples = 4096) const;
};

enum class Side { left, right };

struct GeneratorSet {
  std::vector<std::uint32_t> elements;
  Side side = Side::left;
  std::size_t size() const { return elements.size(); }
};

/// Throws std::invalid_argument unless gens is inverse-closed, identity-free
/// and duplicate-free.
void check_generators(const FiniteGroup &g, const GeneratorSet &s);

FiniteGroup build_cyclic_group(std::uint32_t n);
/// Z_n with offsets as generators (offsets taken mod n).
std::pair<FiniteGroup, GeneratorSet>
build_cyclic(std::uint32_t n, const std::vector<std::int64_t> &offsets);

/// PSL(2,q). Elements stored as 2x2 matrices normalized so the first nonzero
/// entry (row-major) is 1; this identifies M with every scalar multiple.
FiniteGroup build_psl2(std::uint32_t q);
using Mat2 = std::array<std::uint32_t, 4>;
Mat2 psl2_normalize(Mat2 m, std::uint32_t q);
/// Element index of a matrix (any scalar multiple accepted); throws when the
/// matrix is singular or does not lie in PSL(2,q).
std::uint32_t psl2_index(const FiniteGroup &g, std::uint32_t q, Mat2 m);

bool is_prime(std::uint64_t n);
/// Legendre symbol (a|p) for odd prime p, in {-1,0,1}.
int legendre(std::int64_t a, std::int64_t p);

/// The p+1 LPS generators inside PSL(2,q) (group built by build_psl2(q)).
GeneratorSet lps_generators(const FiniteGroup &g, std::uint32_t p,
                            std::uint32_t q);

/// Random inverse-closed identity-free set of exactly `delta` elements.
GeneratorSet random_generators(const FiniteGroup &g, std::size_t delta,
                               std::mt19937_64 &rng, Side side = Side::left);

/// Regular multigraph given as neighbour lists; nbr[v] lists every arc out of
/// v (length = degree, repeats allowed).
struct Graph {
  std::vector<std::vector<std::uint32_t>> nbr;
  std::size_t num_vertices() const { return nbr.size(); }
  std::size_t degree() const; // throws std::domain_error if irregular
  std::size_t num_arcs() const;
};

/// Cay(G,S): arc g -> s*g for left generators, g -> g*s for right ones.
Graph cayley_graph(const FiniteGroup &g, const GeneratorSet &s);
/// Vertices (g,0) = g and (g,1) = |G| + g; arc (g,0) -> (ag,1) per arc of g.
Graph double_cover(const Graph &g);

struct SpectralReport {
  std::size_t delta = 0;
  double lambda = 0;           // max(|lambda_2|, |lambda_n|)
  double lambda_certified = 0; // lambda + 1e-6
  std::vector<double> eigenvalues; // descending
};

/// Dense symmetric eigensolve of the adjacency matrix.
SpectralReport spectral_report(const Graph &g);

struct MixingResult {
  bool pass = true;
  double worst_slack = 0; // min over trials of (bound - |E(S,T)|)
  std::size_t trials = 0;
};

/// |E(S,T)| = 1_S^T A 1_T <= (Delta/|V|)|S||T| + lambda sqrt(|S||T|) for
/// random S, T (each vertex kept with a per-trial random density).
MixingResult mixing_check(const Graph &g, const SpectralReport &rep,
                          std::size_t trials, std::mt19937_64 &rng);
std::size_t edges_between(const Graph &g, const std::vector<bool> &s,
                          const std::vector<bool> &t);

} // namespace lrq
