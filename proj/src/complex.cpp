#include "lrq/complex.h"
#include "lrq/rng.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace lrq {

LeftRightComplex::LeftRightComplex(FiniteGroup g, GeneratorSet a,
                                   GeneratorSet b)
    : g_(std::move(g)), a_(std::move(a)), b_(std::move(b)) {
  check_generators(g_, a_);
  check_generators(g_, b_);
  if (a_.size() != b_.size() || a_.size() == 0)
    throw std::invalid_argument("complex: |A| and |B| must be equal and > 0");
  a_.side = Side::left;
  b_.side = Side::right;
  delta_ = a_.size();
  const auto n = static_cast<std::uint32_t>(order());
  const auto d = static_cast<std::uint32_t>(delta_);
  auto A = [&](std::uint32_t i) { return a_.elements[i]; };
  auto B = [&](std::uint32_t i) { return b_.elements[i]; };
  auto mul = [&](std::uint32_t x, std::uint32_t y) { return g_.mul(x, y); };
  auto inv = [&](std::uint32_t x) { return g_.inv(x); };

  face_edges_.resize(4 * num_faces());
  face_vertices_.resize(4 * num_faces());
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t a = 0; a < d; ++a)
      for (std::uint32_t b = 0; b < d; ++b) {
        std::size_t f = face(g, a, b);
        std::uint32_t ag = mul(A(a), g), gb = mul(g, B(b));
        face_edges_[4 * f + 0] = edge(Es0, g, a);
        face_edges_[4 * f + 1] = edge(Es1, gb, a);
        face_edges_[4 * f + 2] = edge(E0s, g, b);
        face_edges_[4 * f + 3] = edge(E1s, ag, b);
        face_vertices_[4 * f + 0] = vertex(V00, g);
        face_vertices_[4 * f + 1] = vertex(V10, ag);
        face_vertices_[4 * f + 2] = vertex(V01, gb);
        face_vertices_[4 * f + 3] = vertex(V11, mul(ag, B(b)));
      }

  edge_faces_.resize(num_edges() * delta_);
  edge_ends_.resize(2 * num_edges());
  for (std::uint32_t h = 0; h < n; ++h)
    for (std::uint32_t s = 0; s < d; ++s) {
      // vertical: slot s = a; faces by b
      std::uint32_t e0 = edge(Es0, h, s), e1 = edge(Es1, h, s);
      edge_ends_[2 * e0] = vertex(V00, h);
      edge_ends_[2 * e0 + 1] = vertex(V10, mul(A(s), h));
      edge_ends_[2 * e1] = vertex(V01, h);
      edge_ends_[2 * e1 + 1] = vertex(V11, mul(A(s), h));
      // horizontal: slot s = b; faces by a
      std::uint32_t h0 = edge(E0s, h, s), h1 = edge(E1s, h, s);
      edge_ends_[2 * h0] = vertex(V00, h);
      edge_ends_[2 * h0 + 1] = vertex(V01, mul(h, B(s)));
      edge_ends_[2 * h1] = vertex(V10, h);
      edge_ends_[2 * h1 + 1] = vertex(V11, mul(h, B(s)));
      for (std::uint32_t t = 0; t < d; ++t) {
        edge_faces_[std::size_t{e0} * d + t] = face(h, s, t);
        edge_faces_[std::size_t{e1} * d + t] = face(mul(h, inv(B(t))), s, t);
        edge_faces_[std::size_t{h0} * d + t] = face(h, t, s);
        edge_faces_[std::size_t{h1} * d + t] = face(mul(inv(A(t)), h), t, s);
      }
    }

  vertex_vert_.resize(num_vertices() * delta_);
  vertex_horiz_.resize(num_vertices() * delta_);
  vertex_faces_.resize(num_vertices() * delta_ * delta_);
  for (std::uint32_t h = 0; h < n; ++h)
    for (std::uint32_t a = 0; a < d; ++a) {
      std::uint32_t ainv_h = mul(inv(A(a)), h);
      vertex_vert_[vertex(V00, h) * d + a] = edge(Es0, h, a);
      vertex_vert_[vertex(V10, h) * d + a] = edge(Es0, ainv_h, a);
      vertex_vert_[vertex(V01, h) * d + a] = edge(Es1, h, a);
      vertex_vert_[vertex(V11, h) * d + a] = edge(Es1, ainv_h, a);
      std::uint32_t b = a; // reuse the loop index as a B-slot
      std::uint32_t h_binv = mul(h, inv(B(b)));
      vertex_horiz_[vertex(V00, h) * d + b] = edge(E0s, h, b);
      vertex_horiz_[vertex(V01, h) * d + b] = edge(E0s, h_binv, b);
      vertex_horiz_[vertex(V10, h) * d + b] = edge(E1s, h, b);
      vertex_horiz_[vertex(V11, h) * d + b] = edge(E1s, h_binv, b);
      for (std::uint32_t bb = 0; bb < d; ++bb) {
        std::uint32_t hb = mul(h, inv(B(bb)));
        auto at = [&](VertexClass c) {
          return (std::size_t{vertex(c, h)} * d + a) * d + bb;
        };
        vertex_faces_[at(V00)] = face(h, a, bb);
        vertex_faces_[at(V10)] = face(ainv_h, a, bb);
        vertex_faces_[at(V01)] = face(hb, a, bb);
        vertex_faces_[at(V11)] = face(mul(inv(A(a)), hb), a, bb);
      }
    }
}

VertexNeighborhood neighborhood_vertex(const LeftRightComplex &x,
                                       std::uint32_t v) {
  VertexNeighborhood nb;
  const auto d = static_cast<std::uint32_t>(x.delta());
  auto other = [&](std::uint32_t e) {
    return x.edge_end(e, 0) == v ? x.edge_end(e, 1) : x.edge_end(e, 0);
  };
  for (std::uint32_t s = 0; s < d; ++s) {
    nb.vertical.push_back(x.vertex_vertical(v, s));
    nb.horizontal.push_back(x.vertex_horizontal(v, s));
    nb.via_vertical.push_back(other(nb.vertical.back()));
    nb.via_horizontal.push_back(other(nb.horizontal.back()));
  }
  const int cls = x.vertex_class(v);
  // Corner slot in face_vertices order: V00, V10, V01, V11.
  const int corner = cls == V00 ? 0 : cls == V10 ? 1 : cls == V01 ? 2 : 3;
  // Vertical edges of a face: [0] at V00/V10, [1] at V01/V11.
  const bool top = (cls == V00 || cls == V10);
  const bool left = (cls == V00 || cls == V01);
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t b = 0; b < d; ++b) {
      std::uint32_t f = x.vertex_face(v, a, b);
      nb.faces.push_back(f);
      const std::uint32_t *fe = x.face_edges(f);
      nb.far_vertical.push_back(top ? fe[1] : fe[0]);
      nb.far_horizontal.push_back(left ? fe[3] : fe[2]);
      nb.diagonal.push_back(x.face_vertices(f)[3 - corner]);
    }
  return nb;
}

EdgeNeighborhood neighborhood_edge(const LeftRightComplex &x,
                                   std::uint32_t e) {
  EdgeNeighborhood nb;
  const std::size_t d = x.delta();
  const std::uint32_t v0 = x.edge_end(e, 0), v1 = x.edge_end(e, 1);
  const bool vert = x.is_vertical(e);
  for (std::size_t s = 0; s < d; ++s) {
    std::uint32_t f = x.edge_faces(e)[s];
    nb.faces.push_back(f);
    const std::uint32_t *fe = x.face_edges(f);
    if (vert)
      nb.opposite.push_back(fe[0] == e ? fe[1] : fe[0]);
    else
      nb.opposite.push_back(fe[2] == e ? fe[3] : fe[2]);
    auto sv = static_cast<std::uint32_t>(s);
    nb.perp_first.push_back(vert ? x.vertex_horizontal(v0, sv)
                                 : x.vertex_vertical(v0, sv));
    nb.perp_second.push_back(vert ? x.vertex_horizontal(v1, sv)
                                  : x.vertex_vertical(v1, sv));
  }
  return nb;
}

TannerGraph subgraph(const LeftRightComplex &x, SubgraphKind which) {
  TannerGraph t;
  const auto d = static_cast<std::uint32_t>(x.delta());
  const std::uint32_t half = static_cast<std::uint32_t>(2 * x.class_size());
  t.delta = d;
  switch (which) {
  case SubgraphKind::ef_vertical:
  case SubgraphKind::ef_horizontal: {
    bool vert = which == SubgraphKind::ef_vertical;
    t.num_checks = half;
    t.num_bits = x.num_faces();
    t.slot_bit.resize(t.num_checks * d);
    for (std::uint32_t i = 0; i < half; ++i) {
      std::uint32_t e = vert ? half + i : i;
      for (std::uint32_t s = 0; s < d; ++s)
        t.slot_bit[i * d + s] = x.edge_faces(e)[s];
    }
    break;
  }
  case SubgraphKind::ve_vertical:
  case SubgraphKind::ve_horizontal: {
    bool vert = which == SubgraphKind::ve_vertical;
    t.num_checks = x.num_vertices();
    t.num_bits = half;
    t.slot_bit.resize(t.num_checks * d);
    for (std::uint32_t v = 0; v < t.num_checks; ++v)
      for (std::uint32_t s = 0; s < d; ++s)
        t.slot_bit[v * d + s] = vert ? x.vertex_vertical(v, s) - half
                                     : x.vertex_horizontal(v, s);
    break;
  }
  }
  t.bit_end.assign(2 * t.num_bits, UINT32_MAX);
  std::vector<std::uint8_t> seen(t.num_bits, 0);
  for (std::uint32_t cs = 0; cs < t.slot_bit.size(); ++cs) {
    std::uint32_t bit = t.slot_bit[cs];
    if (seen[bit] >= 2)
      throw std::logic_error("subgraph: bit incident to more than 2 checks");
    t.bit_end[2 * bit + seen[bit]++] = cs;
  }
  check_identification(t);
  return t;
}

void check_identification(const TannerGraph &t) {
  if (t.slot_bit.size() != t.num_checks * t.delta ||
      t.bit_end.size() != 2 * t.num_bits)
    throw std::invalid_argument("Tanner graph: identification missing");
  for (std::size_t b = 0; b < t.num_bits; ++b)
    for (int i = 0; i < 2; ++i) {
      std::uint32_t cs = t.bit_end[2 * b + i];
      if (cs >= t.slot_bit.size() || t.slot_bit[cs] != b)
        throw std::invalid_argument("Tanner graph: identification is not a "
                                    "bijection at bit " + std::to_string(b));
    }
}

double m1_form(const LeftRightComplex &x, const std::vector<bool> &s) {
  double acc = 0;
  for (std::uint32_t f = 0; f < x.num_faces(); ++f) {
    const std::uint32_t *fe = x.face_edges(f);
    acc += 2.0 * (s[fe[0]] && s[fe[1]]) + 2.0 * (s[fe[2]] && s[fe[3]]);
  }
  return acc;
}

double m0_form(const LeftRightComplex &x, const std::vector<bool> &s) {
  // 1^T U M0' D 1 = y^T M0' y with y = D 1_S (edges of S at each vertex).
  std::vector<double> y(x.num_vertices(), 0.0);
  for (std::uint32_t e = 0; e < x.num_edges(); ++e)
    if (s[e]) {
      y[x.edge_end(e, 0)] += 1;
      y[x.edge_end(e, 1)] += 1;
    }
  double acc = 0;
  for (std::uint32_t e = 0; e < x.num_edges(); ++e)
    acc += 2.0 * y[x.edge_end(e, 0)] * y[x.edge_end(e, 1)];
  return acc;
}

QuadraticCheck m0_m1_check(const LeftRightComplex &x, double lambda,
                           std::size_t samples, std::mt19937_64 &rng) {
  QuadraticCheck q;
  q.worst_slack_m0 = q.worst_slack_m1 = INFINITY;
  const double d = static_cast<double>(x.delta());
  const double g = static_cast<double>(x.order());
  auto eval = [&](const std::vector<bool> &s) {
    double n = static_cast<double>(std::count(s.begin(), s.end(), true));
    double s1 = lambda * n + d / (2 * g) * n * n - m1_form(x, s);
    double s0 = 8 * lambda * d * n + 2 * d / g * n * n - m0_form(x, s);
    q.worst_slack_m1 = std::min(q.worst_slack_m1, s1);
    q.worst_slack_m0 = std::min(q.worst_slack_m0, s0);
    if (s1 < -1e-9 || s0 < -1e-9)
      q.pass = false;
    ++q.samples;
  };
  eval(std::vector<bool>(x.num_edges(), false));
  eval(std::vector<bool>(x.num_edges(), true));
  for (std::size_t i = 0; i < samples; ++i) {
    // Mix dense and very sparse densities; small sets are where the
    // lambda term matters.
    double p = uniform01(rng);
    if (i % 2)
      p = p * p * p;
    std::vector<bool> s(x.num_edges());
    for (std::size_t e = 0; e < s.size(); ++e)
      s[e] = bernoulli(rng, p);
    eval(s);
  }
  return q;
}

CollisionStats collision_stats(const LeftRightComplex &x) {
  CollisionStats c;
  for (auto a : x.A().elements) {
    c.involutions_a += x.group().inv(a) == a;
    for (auto b : x.B().elements)
      c.shared_generators += a == b;
  }
  for (auto b : x.B().elements)
    c.involutions_b += x.group().inv(b) == b;
  for (std::uint32_t f = 0; f < x.num_faces(); ++f) {
    // compare the group labels of the four corners
    std::array<std::uint32_t, 4> g;
    for (int i = 0; i < 4; ++i)
      g[i] = x.face_vertices(f)[i] % static_cast<std::uint32_t>(x.order());
    bool deg = false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        deg |= g[i] == g[j];
    c.degenerate_faces += deg;
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> pairs;
  for (std::uint32_t e = 0; e < x.num_edges(); ++e) {
    auto u = x.edge_end(e, 0), w = x.edge_end(e, 1);
    if (++pairs[{std::min(u, w), std::max(u, w)}] > 1)
      ++c.parallel_edges;
  }
  return c;
}

} // namespace lrq
