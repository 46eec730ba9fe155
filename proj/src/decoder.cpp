#include "lrq/decoder.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace lrq {

namespace {

std::uint64_t column_bits(const BitMatrix &h, std::size_t col) {
  std::uint64_t v = 0;
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (h.get(r, col))
      v |= std::uint64_t{1} << r;
  return v;
}

// Packed column h * u for u given as packed bits over the columns of h.
std::uint64_t mul_packed(const BitMatrix &h, std::uint64_t u) {
  std::uint64_t y = 0;
  for (std::size_t c = 0; c < h.cols(); ++c)
    if ((u >> c) & 1)
      y ^= column_bits(h, c);
  return y;
}

// Least preimage table of h: for each syndrome, the lexicographically least
// u (bit 0 most significant) with h u = syndrome, or -1.
std::vector<std::int64_t> preimage_table(const BitMatrix &h) {
  const std::size_t n = h.cols(), m = h.rows();
  if (n > 24 || m > 24)
    throw std::length_error("preimage table: local code too long");
  std::vector<std::uint64_t> cols(n);
  for (std::size_t c = 0; c < n; ++c)
    cols[c] = column_bits(h, c);
  std::vector<std::int64_t> out(std::size_t{1} << m, -1);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    std::uint64_t u = 0, s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((code >> (n - 1 - i)) & 1) {
        u |= std::uint64_t{1} << i;
        s ^= cols[i];
      }
    if (out[s] < 0)
      out[s] = static_cast<std::int64_t>(u);
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

FlipTable::FlipTable(const ChainComplexX &x, const DecoderOptions &opt)
    : x_(&x), delta_(x.complex().delta()) {
  const auto &cx = x.complex();
  const std::size_t ma = x.ma(), mb = x.mb();
  if (delta_ * delta_ > 64)
    throw std::invalid_argument("FlipTable: Delta^2 above 64 faces");
  l_ = delta_ * (ma + mb);
  if (l_ > 62)
    throw std::length_error("FlipTable: more than 62 local bits");
  const BitMatrix &ha = x.CA().H(), &hb = x.CB().H();
  // The local face pattern of a vertex must agree with the edge/face slots
  // used by d2; checked for every vertex.
  for (std::uint32_t v = 0; v < cx.num_vertices(); ++v)
    for (std::uint32_t a = 0; a < delta_; ++a)
      for (std::uint32_t b = 0; b < delta_; ++b) {
        const std::uint32_t f = cx.vertex_face(v, a, b);
        if (cx.edge_faces(cx.vertex_vertical(v, a))[b] != f ||
            cx.edge_faces(cx.vertex_horizontal(v, b))[a] != f)
          throw std::logic_error("FlipTable: inconsistent face slots at vertex " +
                                 std::to_string(v));
      }
  bit_mask_.assign(l_, 0);
  for (std::size_t a = 0; a < delta_; ++a)
    for (std::size_t j = 0; j < mb; ++j) {
      std::uint64_t m = 0;
      for (std::size_t b = 0; b < delta_; ++b)
        if (hb.get(j, b))
          m |= std::uint64_t{1} << (a * delta_ + b);
      bit_mask_[a * mb + j] = m;
    }
  for (std::size_t b = 0; b < delta_; ++b)
    for (std::size_t i = 0; i < ma; ++i) {
      std::uint64_t m = 0;
      for (std::size_t a = 0; a < delta_; ++a)
        if (ha.get(i, a))
          m |= std::uint64_t{1} << (a * delta_ + b);
      bit_mask_[delta_ * mb + b * ma + i] = m;
    }
  if (delta_ * delta_ <= 22)
    cache_ = std::make_unique<std::atomic<std::uint64_t>[]>(std::size_t{1}
                                                             << (delta_ * delta_));
  if ((std::uint64_t{1} << l_) <= opt.cap) {
    all_masks_.assign(std::size_t{1} << l_, 0);
    for (std::uint64_t p = 1; p < all_masks_.size(); ++p) {
      const int low = std::countr_zero(p); // pattern bit -> local bit l-1-low
      all_masks_[p] = all_masks_[p & (p - 1)] ^ bit_mask_[l_ - 1 - low];
    }
    return;
  }
  if (!opt.allow_restricted)
    throw std::length_error("FlipTable: 2^" + std::to_string(l_) +
                            " local flips exceed cap " +
                            std::to_string(opt.cap) +
                            " (enable restricted search)");
  restricted_ = true;
  // All patterns with 1..max_support set bits, in increasing integer order.
  std::vector<std::size_t> idx;
  auto rec = [&](auto &&self, std::size_t start, std::uint64_t pat,
                 std::uint64_t mask) -> void {
    if (pat)
      candidates_.emplace_back(pat, mask);
    if (idx.size() == opt.max_support)
      return;
    for (std::size_t i = start; i < l_; ++i) {
      idx.push_back(i);
      self(self, i + 1, pat | (std::uint64_t{1} << (l_ - 1 - i)),
           mask ^ bit_mask_[i]);
      idx.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(candidates_.begin(), candidates_.end());
}

std::uint64_t FlipTable::face_mask(std::uint64_t pattern) const {
  if (!all_masks_.empty())
    return all_masks_[pattern];
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < l_; ++i)
    if ((pattern >> (l_ - 1 - i)) & 1)
      m ^= bit_mask_[i];
  return m;
}

std::uint64_t FlipTable::local_syndrome(std::uint32_t v,
                                        const BitVector &c2) const {
  const auto &cx = x_->complex();
  std::uint64_t s = 0;
  for (std::uint32_t a = 0; a < delta_; ++a)
    for (std::uint32_t b = 0; b < delta_; ++b)
      if (c2.get(cx.vertex_face(v, a, b)))
        s |= std::uint64_t{1} << (a * delta_ + b);
  return s;
}

std::optional<Flip> FlipTable::best_flip(std::uint64_t s) const {
  if (s == 0)
    return std::nullopt;
  if (!cache_)
    return search_flip(s);
  // 0: not yet computed, UINT64_MAX: no decreasing flip, else the pattern.
  // Concurrent writers store the same value, so relaxed order suffices.
  std::uint64_t c = cache_[s].load(std::memory_order_relaxed);
  if (c == 0) {
    auto f = search_flip(s);
    c = f ? f->pattern : UINT64_MAX;
    cache_[s].store(c, std::memory_order_relaxed);
  }
  if (c == UINT64_MAX)
    return std::nullopt;
  return Flip{c, static_cast<std::size_t>(std::popcount(s) -
                                          std::popcount(s ^ face_mask(c)))};
}

std::optional<Flip> FlipTable::search_flip(std::uint64_t s) const {
  const int base = std::popcount(s);
  int best = 0;
  std::uint64_t best_p = 0;
  if (!all_masks_.empty()) {
    for (std::uint64_t p = 1; p < all_masks_.size(); ++p) {
      const int drop = base - std::popcount(s ^ all_masks_[p]);
      if (drop > best) {
        best = drop;
        best_p = p;
      }
    }
  } else {
    for (const auto &[p, m] : candidates_) {
      const int drop = base - std::popcount(s ^ m);
      if (drop > best) {
        best = drop;
        best_p = p;
      }
    }
  }
  if (best <= 0)
    return std::nullopt;
  return Flip{best_p, static_cast<std::size_t>(best)};
}

void FlipTable::apply(std::uint32_t v, std::uint64_t pattern,
                      BitVector &correction, BitVector &c2) const {
  const auto &cx = x_->complex();
  const std::size_t ma = x_->ma(), mb = x_->mb();
  for (std::size_t i = 0; i < l_; ++i) {
    if (!((pattern >> (l_ - 1 - i)) & 1))
      continue;
    if (i < delta_ * mb) {
      auto e = cx.vertex_vertical(v, static_cast<std::uint32_t>(i / mb));
      correction.flip(x_->offset(1, e) + i % mb);
    } else {
      const std::size_t k = i - delta_ * mb;
      auto e = cx.vertex_horizontal(v, static_cast<std::uint32_t>(k / ma));
      correction.flip(x_->offset(1, e) + k % ma);
    }
  }
  const std::uint64_t m = face_mask(pattern);
  for (std::uint32_t a = 0; a < delta_; ++a)
    for (std::uint32_t b = 0; b < delta_; ++b)
      if ((m >> (a * delta_ + b)) & 1)
        c2.flip(cx.vertex_face(v, a, b));
}

// ---------------------------------------------------------------------------

CoDecodeResult co_decode_simple(const FlipTable &t, const BitVector &c2) {
  const ChainComplexX &x = t.complex();
  if (c2.size() != x.size(2))
    throw std::invalid_argument("co_decode: syndrome length mismatch");
  CoDecodeResult r;
  r.restricted = t.restricted();
  r.correction = BitVector(x.size(1));
  r.final_syndrome = c2;
  const auto nv = static_cast<std::uint32_t>(x.complex().num_vertices());
  bool progress = !c2.is_zero();
  while (progress) {
    progress = false;
    for (std::uint32_t v = 0; v < nv; ++v) {
      ++r.flips_evaluated;
      if (auto f = t.find_flip(v, r.final_syndrome)) {
        t.apply(v, f->pattern, r.correction, r.final_syndrome);
        ++r.iterations;
        progress = true;
        break;
      }
    }
  }
  r.success = r.final_syndrome.is_zero();
  return r;
}

CoDecodeResult co_decode_queue(const FlipTable &t, const BitVector &c2) {
  const ChainComplexX &x = t.complex();
  const auto &cx = x.complex();
  if (c2.size() != x.size(2))
    throw std::invalid_argument("co_decode: syndrome length mismatch");
  CoDecodeResult r;
  r.restricted = t.restricted();
  r.correction = BitVector(x.size(1));
  r.final_syndrome = c2;
  std::vector<char> queued(cx.num_vertices(), 0);
  std::deque<std::uint32_t> q;
  auto push_face = [&](std::uint32_t f) {
    const std::uint32_t *vs = cx.face_vertices(f);
    for (int i = 0; i < 4; ++i)
      if (!queued[vs[i]]) {
        queued[vs[i]] = 1;
        q.push_back(vs[i]);
      }
  };
  // Seed: corners of syndrome faces, in vertex index order.
  std::vector<char> touched(cx.num_vertices(), 0);
  for (auto f : c2.support()) {
    const std::uint32_t *vs = cx.face_vertices(static_cast<std::uint32_t>(f));
    for (int i = 0; i < 4; ++i)
      touched[vs[i]] = 1;
  }
  for (std::uint32_t v = 0; v < touched.size(); ++v)
    if (touched[v]) {
      queued[v] = 1;
      q.push_back(v);
    }
  const std::size_t delta = cx.delta();
  while (!q.empty()) {
    const std::uint32_t v = q.front();
    q.pop_front();
    queued[v] = 0;
    ++r.flips_evaluated;
    auto f = t.find_flip(v, r.final_syndrome);
    if (!f)
      continue;
    t.apply(v, f->pattern, r.correction, r.final_syndrome);
    ++r.iterations;
    // Every vertex whose local syndrome may have changed shares a face of v.
    for (std::uint32_t a = 0; a < delta; ++a)
      for (std::uint32_t b = 0; b < delta; ++b)
        push_face(cx.vertex_face(v, a, b));
  }
  r.success = r.final_syndrome.is_zero();
  return r;
}

bool co_locally_minimal(const FlipTable &t, const BitVector &c2) {
  const auto nv = static_cast<std::uint32_t>(t.complex().complex().num_vertices());
  for (std::uint32_t v = 0; v < nv; ++v)
    if (t.find_flip(v, c2))
      return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {
SpanTester boundary_span(const ChainComplexX &x, Direction d) {
  SpanTester s(x.size(1));
  if (d == Direction::chain) {
    const BitMatrix d2t = x.d2().transpose();
    for (std::size_t f = 0; f < d2t.rows(); ++f)
      s.add(d2t.row(f));
  } else {
    for (std::size_t r = 0; r < x.d1().rows(); ++r)
      s.add(x.d1().row(r));
  }
  return s;
}
} // namespace

BoundaryTester::BoundaryTester(const ChainComplexX &x, Direction d)
    : span_(boundary_span(x, d)) {}

bool verify_correction(const ChainComplexX &x, const BitVector &claimed,
                       const BitVector &true_error, Direction d) {
  if (claimed.size() != x.size(1) || true_error.size() != x.size(1))
    throw std::invalid_argument("verify_correction: grade-1 vectors expected");
  const BitMatrix &m = d == Direction::chain ? x.d2() : x.d1();
  BitVector diff = claimed ^ true_error;
  if (diff.is_zero())
    return true;
  if (d == Direction::chain)
    return solve_affine(m, diff).has_value();
  return solve_affine(m.transpose(), diff).has_value();
}

// ---------------------------------------------------------------------------

LocalFlipResult local_flip_reduce(const ChainComplexX &x, const BitVector &c1) {
  const auto &cx = x.complex();
  if (c1.size() != x.size(1))
    throw std::invalid_argument("local_flip_reduce: grade-1 vector expected");
  const std::size_t delta = cx.delta();
  const BitMatrix &ha = x.CA().H(), &hb = x.CB().H();
  std::vector<std::uint64_t> col_a(delta), col_b(delta);
  for (std::size_t s = 0; s < delta; ++s) {
    col_a[s] = column_bits(ha, s);
    col_b[s] = column_bits(hb, s);
  }
  LocalFlipResult r;
  r.reduced = c1;
  r.c2 = BitVector(x.size(2));
  const auto nf = static_cast<std::uint32_t>(cx.num_faces());
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::uint32_t f = 0; f < nf; ++f) {
      const std::uint32_t *es = cx.face_edges(f);
      const std::uint32_t a = (f / delta) % delta, b = f % delta;
      // vertical edges carry H_B column b, horizontal ones H_A column a
      const std::uint64_t add[4] = {col_b[b], col_b[b], col_a[a], col_a[a]};
      int before = 0, after = 0;
      for (int i = 0; i < 4; ++i) {
        const std::uint64_t blk = x.get_block(1, r.reduced, es[i]);
        before += blk != 0;
        after += (blk ^ add[i]) != 0;
      }
      if (after < before) {
        for (int i = 0; i < 4; ++i)
          x.xor_block(1, r.reduced, es[i], add[i]);
        r.c2.flip(f);
        ++r.iterations;
        improved = true;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

ReconstructDecoder::ReconstructDecoder(const ChainComplexX &x,
                                       const ChainComplexX &x_dual,
                                       const DecoderOptions &opt,
                                       bool use_queue)
    : x_(&x), xd_(&x_dual), dual_table_(x_dual, opt), use_queue_(use_queue),
      delta_(x.complex().delta()) {
  if (&x.complex() != &x_dual.complex() &&
      x.complex().num_faces() != x_dual.complex().num_faces())
    throw std::invalid_argument("ReconstructDecoder: complexes differ");
  if (x_dual.ma() != x.CA().k() || x_dual.mb() != x.CB().k())
    throw std::invalid_argument("ReconstructDecoder: second complex must use "
                                "the dual local codes");
  const std::size_t ma = x.ma(), mb = x.mb();
  const std::size_t l = delta_ * (ma + mb);
  if (l > 62 || (std::uint64_t{1} << l) > opt.cap)
    throw std::length_error("ReconstructDecoder: local solve needs 2^" +
                            std::to_string(l) + " steps, above cap");
  const BitMatrix &ha = x.CA().H(), &hb = x.CB().H();
  // image of local bit i under the vertex map, vertex block bit r*mb + j
  std::vector<std::uint64_t> img(l, 0);
  for (std::size_t a = 0; a < delta_; ++a)
    for (std::size_t j = 0; j < mb; ++j)
      for (std::size_t r = 0; r < ma; ++r)
        if (ha.get(r, a))
          img[a * mb + j] |= std::uint64_t{1} << (r * mb + j);
  for (std::size_t b = 0; b < delta_; ++b)
    for (std::size_t r = 0; r < ma; ++r)
      for (std::size_t j = 0; j < mb; ++j)
        if (hb.get(j, b))
          img[delta_ * mb + b * ma + r] |= std::uint64_t{1} << (r * mb + j);
  // Cross-check the local map against d1 at every vertex.
  const auto &cx = x.complex();
  for (std::uint32_t v = 0; v < cx.num_vertices(); ++v)
    for (std::size_t i = 0; i < l; ++i) {
      std::uint32_t e;
      std::size_t bit;
      if (i < delta_ * mb) {
        e = cx.vertex_vertical(v, static_cast<std::uint32_t>(i / mb));
        bit = i % mb;
      } else {
        const std::size_t k = i - delta_ * mb;
        e = cx.vertex_horizontal(v, static_cast<std::uint32_t>(k / ma));
        bit = k % ma;
      }
      const std::size_t col = x.offset(1, e) + bit;
      std::uint64_t got = 0;
      for (std::size_t q = 0; q < ma * mb; ++q)
        if (x.d1().get(x.offset(0, v) + q, col))
          got |= std::uint64_t{1} << q;
      if (got != img[i])
        throw std::logic_error("ReconstructDecoder: local map mismatch at vertex " +
                               std::to_string(v));
    }
  // Step 1 table: exhaustive over local chains.
  step1_.assign(std::size_t{1} << (ma * mb), -1);
  std::vector<std::size_t> best_norm(step1_.size(), SIZE_MAX);
  auto cell_count = [&](std::uint64_t pattern) {
    std::size_t n = 0;
    for (auto blk : unpack(pattern))
      n += blk != 0;
    return n;
  };
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << l); ++p) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < l; ++i)
      if ((p >> (l - 1 - i)) & 1)
        t ^= img[i];
    const std::size_t n = cell_count(p);
    if (n < best_norm[t]) { // p increasing: first minimal is least
      best_norm[t] = n;
      step1_[t] = static_cast<std::int64_t>(p);
    }
  }
  pre_a_ = preimage_table(ha);
  pre_b_ = preimage_table(hb);
}

std::vector<std::uint64_t>
ReconstructDecoder::unpack(std::uint64_t pattern) const {
  const std::size_t ma = x_->ma(), mb = x_->mb();
  const std::size_t l = delta_ * (ma + mb);
  std::vector<std::uint64_t> blocks(2 * delta_, 0);
  for (std::size_t i = 0; i < l; ++i) {
    if (!((pattern >> (l - 1 - i)) & 1))
      continue;
    if (i < delta_ * mb)
      blocks[i / mb] |= std::uint64_t{1} << (i % mb);
    else {
      const std::size_t k = i - delta_ * mb;
      blocks[delta_ + k / ma] |= std::uint64_t{1} << (k % ma);
    }
  }
  return blocks;
}

std::vector<std::uint64_t>
ReconstructDecoder::local_minimal_solve(std::uint64_t target) const {
  if (target >= step1_.size() || step1_[target] < 0)
    throw std::invalid_argument("local_minimal_solve: target not in the image "
                                "of the local map");
  return unpack(static_cast<std::uint64_t>(step1_[target]));
}

ReconstructResult ReconstructDecoder::decode(const BitVector &c0) const {
  const ChainComplexX &x = *x_, &xd = *xd_;
  const auto &cx = x.complex();
  if (c0.size() != x.size(0))
    throw std::invalid_argument("decode_reconstruct: grade-0 syndrome expected");
  ReconstructResult res;
  const std::size_t delta = delta_;
  const auto nv = static_cast<std::uint32_t>(cx.num_vertices());
  const auto ne = static_cast<std::uint32_t>(cx.num_edges());
  const auto nf = static_cast<std::uint32_t>(cx.num_faces());

  // Step 1: minimal local guesses s1(v), 2*Delta blocks per vertex.
  std::vector<std::vector<std::uint64_t>> s1(nv);
  for (std::uint32_t v = 0; v < nv; ++v) {
    const std::uint64_t target = x.get_block(0, c0, v);
    if (step1_[target] < 0) {
      res.stage = "step1: local syndrome outside the image at vertex " +
                  std::to_string(v);
      return res;
    }
    s1[v] = unpack(static_cast<std::uint64_t>(step1_[target]));
    for (auto blk : s1[v])
      res.step1_cells += blk != 0;
  }
  auto s1_at = [&](std::uint32_t v, std::uint32_t e) {
    const std::uint32_t slot = cx.edge_slot(e);
    return cx.is_vertical(e) ? s1[v][slot] : s1[v][delta + slot];
  };

  // Steps 2-3: t1 on edges, then least preimages u2 (zero where t1 is zero).
  std::vector<std::uint64_t> u2(ne, 0);
  for (std::uint32_t e = 0; e < ne; ++e) {
    const std::uint64_t t1 = s1_at(cx.edge_end(e, 0), e) ^
                             s1_at(cx.edge_end(e, 1), e);
    if (!t1)
      continue;
    const auto &pre = cx.is_vertical(e) ? pre_b_ : pre_a_;
    if (pre[t1] < 0) {
      res.stage = "step3: edge value outside the image of the local check "
                  "matrix at edge " + std::to_string(e);
      return res;
    }
    u2[e] = static_cast<std::uint64_t>(pre[t1]);
    ++res.step3_cells;
  }

  // Step 4: face syndrome and the dual co-decoder.
  BitVector c2(nf);
  for (std::uint32_t f = 0; f < nf; ++f) {
    const std::uint32_t a = (f / delta) % delta, b = f % delta;
    const std::uint32_t *es = cx.face_edges(f);
    const std::uint64_t bit = ((u2[es[0]] >> b) ^ (u2[es[1]] >> b) ^
                               (u2[es[2]] >> a) ^ (u2[es[3]] >> a)) & 1;
    if (bit)
      c2.set(f);
  }
  res.dual = use_queue_ ? co_decode_queue(dual_table_, c2)
                        : co_decode_simple(dual_table_, c2);
  if (!res.dual.success) {
    res.stage = "step4: dual co-decoder halted at a nonzero syndrome";
    return res;
  }

  // Step 5: t~'2 = u2 + (H^perp)^T c~1 per edge.
  const BitMatrix &ga = xd.CA().H(), &gb = xd.CB().H();
  std::vector<std::uint64_t> tt(ne, 0);
  for (std::uint32_t e = 0; e < ne; ++e) {
    const std::uint64_t c = xd.get_block(1, res.dual.correction, e);
    const BitMatrix &g = cx.is_vertical(e) ? gb : ga;
    std::uint64_t lift = 0;
    for (std::size_t l = 0; l < g.rows(); ++l)
      if ((c >> l) & 1)
        lift ^= g.row_data(l)[0];
    tt[e] = u2[e] ^ lift;
  }

  // Step 6: assemble the chain.
  const BitMatrix &ha = x.CA().H(), &hb = x.CB().H();
  res.correction = BitVector(x.size(1));
  for (std::uint32_t e = 0; e < ne; ++e) {
    std::uint64_t val = s1_at(cx.edge_end(e, 0), e);
    const EdgeClass cls = cx.edge_class(e);
    if (cls == Es1 || cls == E1s) {
      // faces of e, in e's slot order; read t~'2 on the edge of the face that
      // touches the V00 corner through the other direction
      std::uint64_t w = 0;
      const std::uint32_t *fs = cx.edge_faces(e);
      for (std::uint32_t s = 0; s < delta; ++s) {
        const std::uint32_t f = fs[s];
        const std::uint32_t a = (f / delta) % delta, b = f % delta;
        const std::uint32_t *es = cx.face_edges(f);
        const std::uint64_t bit = cls == Es1 ? (tt[es[2]] >> a) & 1  // E0s edge
                                             : (tt[es[0]] >> b) & 1; // Es0 edge
        w |= bit << s;
      }
      val ^= mul_packed(cls == Es1 ? hb : ha, w);
    }
    x.xor_block(1, res.correction, e, val);
  }
  if (!(x.boundary1(res.correction) == c0)) {
    res.stage = "verify: boundary of the assembled chain differs from c0";
    return res;
  }
  res.success = true;
  return res;
}

} // namespace lrq
