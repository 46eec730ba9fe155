#pragma once

#include "lrq/group_graph.h"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace lrq {

// Vertex classes V00, V10, V01, V11. The first digit flips along vertical
// edges (left action by A), the second along horizontal ones (right action
// by B). Vertex index = cls*|G| + g.
enum VertexClass : std::uint32_t { V00 = 0, V10 = 1, V01 = 2, V11 = 3 };

// Edge classes. Horizontal classes come first so that grade-1 vectors list
// the m_a-blocks before the m_b-blocks. Edge index = cls*|G|*Delta + g*Delta
// + slot, where slot is b for horizontal and a for vertical edges.
//   E0s: (g,b), V00 g -- V01 gb        E1s: (h,b), V10 h -- V11 hb
//   Es0: (g,a), V00 g -- V10 ag        Es1: (h,a), V01 h -- V11 ah
enum EdgeClass : std::uint32_t { E0s = 0, E1s = 1, Es0 = 2, Es1 = 3 };

/// The 4-fold left-right Cayley complex on (G, A, B). Faces are labelled
/// (g,a,b) with index (g*Delta + a)*Delta + b and have corners g, ag, gb, agb.
class LeftRightComplex {
public:
  LeftRightComplex(FiniteGroup g, GeneratorSet a, GeneratorSet b);

  const FiniteGroup &group() const { return g_; }
  const GeneratorSet &A() const { return a_; }
  const GeneratorSet &B() const { return b_; }
  std::size_t delta() const { return delta_; }
  std::size_t order() const { return g_.order; }
  std::size_t num_vertices() const { return 4 * order(); }
  std::size_t num_edges() const { return 4 * order() * delta_; }
  std::size_t num_faces() const { return order() * delta_ * delta_; }
  /// Edges of one class; horizontal edges are [0, 2*class_size).
  std::size_t class_size() const { return order() * delta_; }

  std::uint32_t vertex(VertexClass c, std::uint32_t g) const {
    return c * static_cast<std::uint32_t>(order()) + g;
  }
  std::uint32_t edge(EdgeClass c, std::uint32_t g, std::uint32_t slot) const {
    return static_cast<std::uint32_t>((c * order() + g) * delta_ + slot);
  }
  std::uint32_t face(std::uint32_t g, std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((g * delta_ + a) * delta_ + b);
  }
  VertexClass vertex_class(std::uint32_t v) const {
    return static_cast<VertexClass>(v / order());
  }
  EdgeClass edge_class(std::uint32_t e) const {
    return static_cast<EdgeClass>(e / class_size());
  }
  bool is_vertical(std::uint32_t e) const { return e >= 2 * class_size(); }
  std::uint32_t edge_slot(std::uint32_t e) const { return e % delta_; }
  std::uint32_t edge_group(std::uint32_t e) const {
    return static_cast<std::uint32_t>(e % class_size() / delta_);
  }

  /// Edges of a face in the order Es0, Es1, E0s, E1s.
  const std::uint32_t *face_edges(std::uint32_t f) const {
    return &face_edges_[4 * std::size_t{f}];
  }
  /// Corners of a face in the order V00, V10, V01, V11.
  const std::uint32_t *face_vertices(std::uint32_t f) const {
    return &face_vertices_[4 * std::size_t{f}];
  }
  /// Faces of an edge indexed by slot (b for vertical, a for horizontal).
  const std::uint32_t *edge_faces(std::uint32_t e) const {
    return &edge_faces_[std::size_t{e} * delta_];
  }
  std::uint32_t edge_end(std::uint32_t e, int i) const {
    return edge_ends_[2 * std::size_t{e} + i];
  }
  /// Vertical edge of v in slot a / horizontal edge of v in slot b.
  std::uint32_t vertex_vertical(std::uint32_t v, std::uint32_t a) const {
    return vertex_vert_[std::size_t{v} * delta_ + a];
  }
  std::uint32_t vertex_horizontal(std::uint32_t v, std::uint32_t b) const {
    return vertex_horiz_[std::size_t{v} * delta_ + b];
  }
  /// Face of v at local position (a,b).
  std::uint32_t vertex_face(std::uint32_t v, std::uint32_t a,
                            std::uint32_t b) const {
    return vertex_faces_[(std::size_t{v} * delta_ + a) * delta_ + b];
  }

private:
  FiniteGroup g_;
  GeneratorSet a_, b_;
  std::size_t delta_;
  std::vector<std::uint32_t> face_edges_, face_vertices_, edge_faces_,
      edge_ends_, vertex_vert_, vertex_horiz_, vertex_faces_;
};

/// Named neighbourhoods of a vertex (for v in V00: E_{*0}, E_{0*}, E_{*1},
/// E_{1*}, F, V10, V01, V11) generalised to every class by geometry.
struct VertexNeighborhood {
  std::vector<std::uint32_t> vertical, horizontal;   // incident edges
  std::vector<std::uint32_t> far_vertical;           // Delta^2, multiset
  std::vector<std::uint32_t> far_horizontal;         // Delta^2, multiset
  std::vector<std::uint32_t> faces;                  // Delta^2
  std::vector<std::uint32_t> via_vertical;           // Delta vertices
  std::vector<std::uint32_t> via_horizontal;         // Delta vertices
  std::vector<std::uint32_t> diagonal;               // Delta^2 vertices
};
/// For an edge: the opposite parallel edges, perpendicular edges at each
/// endpoint and the faces (for e in E_{*0}: E_{*1}, E_{0*}, E_{1*}, F).
struct EdgeNeighborhood {
  std::vector<std::uint32_t> opposite, perp_first, perp_second, faces;
};
VertexNeighborhood neighborhood_vertex(const LeftRightComplex &x,
                                       std::uint32_t v);
EdgeNeighborhood neighborhood_edge(const LeftRightComplex &x, std::uint32_t e);

/// Bipartite graph with the identification bits x [2] = checks x [Delta].
struct TannerGraph {
  std::size_t num_checks = 0, num_bits = 0, delta = 0;
  std::vector<std::uint32_t> slot_bit; // [check*delta + slot] -> bit
  std::vector<std::uint32_t> bit_end;  // [2*bit + i] -> check*delta + slot
};

enum class SubgraphKind { ef_vertical, ef_horizontal, ve_vertical, ve_horizontal };

/// ef_*: checks are the vertical (horizontal) edges, bits are faces.
/// ve_*: checks are vertices, bits are the vertical (horizontal) edges.
/// Local edge index: position within the vertical (horizontal) block.
TannerGraph subgraph(const LeftRightComplex &x, SubgraphKind which);
/// Throws std::invalid_argument if the identification is not a bijection.
void check_identification(const TannerGraph &t);

struct QuadraticCheck {
  bool pass = true;
  std::size_t samples = 0;
  double worst_slack_m1 = 0, worst_slack_m0 = 0;
};
double m1_form(const LeftRightComplex &x, const std::vector<bool> &s);
double m0_form(const LeftRightComplex &x, const std::vector<bool> &s);
/// Samples edge subsets and checks the two quadratic-form bounds with
/// lambda = certified max(lambda_A, lambda_B).
QuadraticCheck m0_m1_check(const LeftRightComplex &x, double lambda,
                           std::size_t samples, std::mt19937_64 &rng);

struct CollisionStats {
  std::size_t shared_generators = 0;   // |A cap B|
  std::size_t involutions_a = 0, involutions_b = 0;
  std::size_t degenerate_faces = 0;    // faces with two equal corners
  std::size_t parallel_edges = 0;      // edges repeating an endpoint pair
};
CollisionStats collision_stats(const LeftRightComplex &x);

} // namespace lrq
