#include "lrq/qcode.h"

#include <bit>
#include <stdexcept>

namespace lrq {

BitMatrix tanner_map(const TannerGraph &t, const BitMatrix &h) {
  check_identification(t);
  if (h.cols() != t.delta)
    throw std::invalid_argument("tanner_map: H must have Delta columns");
  const std::size_t m = h.rows();
  BitMatrix out(t.num_checks * m, t.num_bits);
  for (std::size_t v = 0; v < t.num_checks; ++v)
    for (std::size_t a = 0; a < t.delta; ++a) {
      std::uint32_t bit = t.slot_bit[v * t.delta + a];
      for (std::size_t r = 0; r < m; ++r)
        if (h.get(r, a))
          out.flip(v * m + r, bit);
    }
  return out;
}

BitMatrix fibre_lift(const BitMatrix &t, std::size_t m, std::size_t k,
                     bool fibre_major) {
  if (m == 0 || t.rows() % m != 0) {
    if (t.rows() != 0)
      throw std::invalid_argument("fibre_lift: rows not a multiple of m");
  }
  const std::size_t checks = m ? t.rows() / m : 0;
  BitMatrix out(checks * m * k, t.cols() * k);
  for (std::size_t row = 0; row < t.rows(); ++row) {
    std::size_t v = row / m, r = row % m;
    for (auto bit : t.row(row).support())
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t orow = fibre_major ? v * m * k + i * m + r
                                       : v * m * k + r * k + i;
        out.set(orow, bit * k + i);
      }
  }
  return out;
}

ChainComplexX::ChainComplexX(std::shared_ptr<const LeftRightComplex> cx,
                             LinearCode ca, LinearCode cb)
    : cx_(std::move(cx)), ca_(std::move(ca)), cb_(std::move(cb)) {
  const auto &x = *cx_;
  if (ca_.n() != x.delta() || cb_.n() != x.delta())
    throw std::invalid_argument("chain complex: local code length must equal "
                                "Delta = " + std::to_string(x.delta()));
  if (ma() * mb() > 64 || ma() > 64 || mb() > 64)
    throw std::invalid_argument("chain complex: vertex blocks above 64 bits");
  const BitMatrix &ha = ca_.H(), &hb = cb_.H();
  auto ef_h = subgraph(x, SubgraphKind::ef_horizontal);
  auto ef_v = subgraph(x, SubgraphKind::ef_vertical);
  auto ve_h = subgraph(x, SubgraphKind::ve_horizontal);
  auto ve_v = subgraph(x, SubgraphKind::ve_vertical);
  d2_ = BitMatrix::vstack(tanner_map(ef_h, ha), tanner_map(ef_v, hb));
  if (ma() && mb())
    d1_ = BitMatrix::hstack(fibre_lift(tanner_map(ve_h, hb), mb(), ma(), true),
                            fibre_lift(tanner_map(ve_v, ha), ma(), mb(), false));
  else
    d1_ = BitMatrix(0, size(1));
  d2t_ = d2_.transpose();
  d1t_ = d1_.transpose();
}

std::size_t ChainComplexX::size(int grade) const {
  const auto &x = *cx_;
  switch (grade) {
  case 2:
    return x.num_faces();
  case 1:
    return 2 * x.class_size() * (ma() + mb());
  case 0:
    return x.num_vertices() * ma() * mb();
  }
  throw std::invalid_argument("grade must be 0, 1 or 2");
}

std::size_t ChainComplexX::num_cells(int grade) const {
  const auto &x = *cx_;
  return grade == 2 ? x.num_faces() : grade == 1 ? x.num_edges()
                                                 : x.num_vertices();
}

std::size_t ChainComplexX::block(int grade, std::uint32_t cell) const {
  if (grade == 2)
    return 1;
  if (grade == 0)
    return ma() * mb();
  return cx_->is_vertical(cell) ? mb() : ma();
}

std::size_t ChainComplexX::offset(int grade, std::uint32_t cell) const {
  if (grade == 2)
    return cell;
  if (grade == 0)
    return std::size_t{cell} * ma() * mb();
  const std::size_t half = 2 * cx_->class_size();
  return cell < half ? std::size_t{cell} * ma()
                     : half * ma() + (cell - half) * mb();
}

std::uint64_t ChainComplexX::get_block(int grade, const BitVector &v,
                                       std::uint32_t cell) const {
  std::size_t off = offset(grade, cell), w = block(grade, cell);
  if (w == 0)
    return 0;
  const std::uint64_t *d = v.data();
  std::size_t word = off >> 6, sh = off & 63;
  std::uint64_t x = d[word] >> sh;
  if (sh && sh + w > 64)
    x |= d[word + 1] << (64 - sh);
  return w == 64 ? x : x & ((std::uint64_t{1} << w) - 1);
}

void ChainComplexX::xor_block(int grade, BitVector &v, std::uint32_t cell,
                              std::uint64_t bits) const {
  std::size_t off = offset(grade, cell), w = block(grade, cell);
  if (w < 64)
    bits &= (std::uint64_t{1} << w) - 1;
  std::uint64_t *d = v.data();
  std::size_t word = off >> 6, sh = off & 63;
  d[word] ^= bits << sh;
  if (sh && sh + w > 64)
    d[word + 1] ^= bits >> (64 - sh);
}

std::size_t ChainComplexX::cell_norm(int grade, const BitVector &v) const {
  if (v.size() != size(grade))
    throw std::invalid_argument("cell_norm: length mismatch");
  if (grade == 2)
    return v.weight();
  std::size_t n = 0;
  const auto cells = static_cast<std::uint32_t>(num_cells(grade));
  for (std::uint32_t c = 0; c < cells; ++c)
    n += get_block(grade, v, c) != 0;
  return n;
}

BitVector ChainComplexX::coboundary1(const BitVector &c1) const {
  return d2t_.apply(c1);
}
BitVector ChainComplexX::coboundary0(const BitVector &c0) const {
  return d1t_.apply(c0);
}

ChainComplexX build_chain_complex(std::shared_ptr<const LeftRightComplex> cx,
                                  const LinearCode &ca, const LinearCode &cb) {
  ChainComplexX x(std::move(cx), ca, cb);
  if (!(x.d1() * x.d2()).is_zero())
    throw std::logic_error("build_chain_complex: d1*d2 != 0");
  return x;
}

ChainComplexX dual_complex(std::shared_ptr<const LeftRightComplex> cx,
                           const LinearCode &ca, const LinearCode &cb) {
  return build_chain_complex(std::move(cx), dual(ca), dual(cb));
}

LdpcProfile ldpc_profile(const ChainComplexX &x) {
  LdpcProfile p;
  p.d2_max_row = x.d2().max_row_weight();
  p.d2_max_col = x.d2().max_col_weight();
  p.d1_max_row = x.d1().max_row_weight();
  p.d1_max_col = x.d1().max_col_weight();
  const std::size_t d = x.complex().delta();
  const std::size_t m = std::max(x.ma(), x.mb());
  p.within_4delta = p.d2_max_row <= 4 * d && p.d2_max_col <= 4 * d &&
                    p.d1_max_row <= 4 * d && p.d1_max_col <= 4 * d;
  p.fine_bounds = p.d2_max_col <= 4 * m && p.d2_max_row <= d &&
                  p.d1_max_col <= 2 * m && p.d1_max_row <= 2 * d;
  return p;
}

double rate_lower_bound(double ra, double rb) {
  return -(2 * ra - 1) * (2 * rb - 1) / (2 * (2 - ra - rb));
}

RateReport dimension_and_rate(const ChainComplexX &x) {
  RateReport r;
  r.n = x.size(1);
  r.rank_d1 = rank(x.d1());
  r.rank_d2 = rank(x.d2());
  r.k = r.n - r.rank_d1 - r.rank_d2;
  r.rate = r.n ? static_cast<double>(r.k) / static_cast<double>(r.n) : 0;
  const double d = static_cast<double>(x.complex().delta());
  r.lower_bound = rate_lower_bound(static_cast<double>(x.CA().k()) / d,
                                   static_cast<double>(x.CB().k()) / d);
  r.naive_k = static_cast<long long>(x.size(1)) -
              static_cast<long long>(x.size(2)) -
              static_cast<long long>(x.size(0));
  r.bound_holds = r.rate >= r.lower_bound - 1e-12 &&
                  static_cast<long long>(r.k) >= r.naive_k;
  return r;
}

CssCode css_code(const ChainComplexX &x) {
  CssCode c;
  c.hx = x.d1();
  c.hz = x.d2().transpose();
  c.n = x.size(1);
  c.k = c.n - rank(c.hx) - rank(c.hz);
  return c;
}

std::optional<DistanceValue>
min_weight_outside(const std::vector<BitVector> &z_basis,
                   const std::vector<BitVector> &b_gens, std::size_t len,
                   const std::function<std::size_t(const BitVector &)> &cell_of,
                   std::uint64_t cap) {
  SpanTester b(b_gens, len);
  std::vector<BitVector> bb = b.basis();
  std::vector<BitVector> logical;
  SpanTester z = b;
  for (const auto &v : z_basis)
    if (z.add(v))
      logical.push_back(v);
  if (logical.empty())
    return std::nullopt;
  const std::size_t dim = bb.size() + logical.size();
  if (dim >= 63 || (std::uint64_t{1} << dim) > cap)
    throw std::length_error(
        "distance: dim Z = " + std::to_string(dim) + " (dim B = " +
        std::to_string(bb.size()) + ", k = " + std::to_string(logical.size()) +
        "), 2^dim exceeds cap " + std::to_string(cap));
  DistanceValue best;
  best.hamming = best.cell = SIZE_MAX;
  BitVector lcur(len);
  for (std::uint64_t li = 1; li < (std::uint64_t{1} << logical.size()); ++li) {
    lcur ^= logical[std::countr_zero(li)];
    BitVector cur = lcur;
    for (std::uint64_t bi = 0;; ++bi) {
      if (bi)
        cur ^= bb[std::countr_zero(bi)];
      std::size_t w = cur.weight();
      if (w < best.hamming) {
        best.hamming = w;
        best.witness_hamming = cur;
      }
      if (cell_of) {
        std::size_t c = cell_of(cur);
        if (c < best.cell) {
          best.cell = c;
          best.witness_cell = cur;
        }
      }
      if (bi + 1 == (std::uint64_t{1} << bb.size()))
        break;
    }
  }
  if (!cell_of) {
    best.cell = best.hamming;
    best.witness_cell = best.witness_hamming;
  }
  return best;
}

QuantumDistance quantum_distance_exact(const ChainComplexX &x,
                                       std::uint64_t cap) {
  QuantumDistance q;
  auto cell1 = [&x](const BitVector &v) { return x.cell_norm(1, v); };
  const std::size_t n = x.size(1);
  // Z_1 = ker d1, B_1 = columns of d2; Z^1 = ker d2^T, B^1 = rows of d1.
  std::vector<BitVector> b_low, b_up;
  BitMatrix d2t = x.d2().transpose();
  for (std::size_t f = 0; f < d2t.rows(); ++f)
    b_low.push_back(d2t.row(f));
  for (std::size_t r = 0; r < x.d1().rows(); ++r)
    b_up.push_back(x.d1().row(r));
  auto zl = kernel_basis(x.d1());
  auto zu = kernel_basis(d2t);
  q.k = zl.size() - rank(x.d2());
  q.dz = min_weight_outside(zl, b_low, n, cell1, cap);
  q.dx = min_weight_outside(zu, b_up, n, cell1, cap);
  return q;
}

} // namespace lrq
