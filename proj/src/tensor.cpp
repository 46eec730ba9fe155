#include "lrq/tensor.h"

#include <bit>
#include <stdexcept>

namespace lrq {

namespace {

std::uint64_t low_mask(std::size_t w) {
  return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
}

std::size_t nz_rows(std::uint64_t c, std::size_t na, std::size_t nb) {
  std::size_t n = 0;
  const std::uint64_t m = low_mask(nb);
  for (std::size_t i = 0; i < na; ++i)
    n += ((c >> (i * nb)) & m) != 0;
  return n;
}

std::uint64_t col_union(std::uint64_t c, std::size_t na, std::size_t nb) {
  std::uint64_t u = 0;
  const std::uint64_t m = low_mask(nb);
  for (std::size_t i = 0; i < na; ++i)
    u |= (c >> (i * nb)) & m;
  return u;
}

std::size_t nz_cols(std::uint64_t c, std::size_t na, std::size_t nb) {
  return std::popcount(col_union(c, na, nb));
}

void check_shape(std::size_t na, std::size_t nb) {
  if (na * nb > 64)
    throw std::invalid_argument("tensor word: na*nb = " +
                                std::to_string(na * nb) + " exceeds 64");
}

// Spread an na-bit column into column j of a packed na x nb matrix.
std::uint64_t place_col(std::uint64_t v, std::size_t j, std::size_t na,
                        std::size_t nb) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < na; ++i)
    if ((v >> i) & 1)
      out |= std::uint64_t{1} << (i * nb + j);
  return out;
}

// Rational comparison a/b < c/d for positive denominators.
bool ratio_less(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return static_cast<unsigned __int128>(a) * d <
         static_cast<unsigned __int128>(c) * b;
}

} // namespace

TensorWord::TensorWord(std::size_t na_, std::size_t nb_, std::uint64_t b)
    : na(na_), nb(nb_), bits(b) {
  check_shape(na, nb);
  bits &= low_mask(na * nb);
}

void TensorWord::set(std::size_t i, std::size_t j, bool v) {
  std::uint64_t m = std::uint64_t{1} << (i * nb + j);
  bits = v ? (bits | m) : (bits & ~m);
}

std::uint64_t TensorWord::row(std::size_t i) const {
  return (bits >> (i * nb)) & low_mask(nb);
}

std::uint64_t TensorWord::col(std::size_t j) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < na; ++i)
    v |= ((bits >> (i * nb + j)) & 1) << i;
  return v;
}

std::size_t TensorWord::weight() const { return std::popcount(bits); }
std::size_t TensorWord::nonzero_rows() const { return nz_rows(bits, na, nb); }
std::size_t TensorWord::nonzero_cols() const { return nz_cols(bits, na, nb); }

BitVector TensorWord::vec() const {
  BitVector v(na * nb);
  if (na * nb != 0)
    v.data()[0] = bits;
  return v;
}

TensorWord TensorWord::from_vec(const BitVector &v, std::size_t na,
                                std::size_t nb) {
  if (v.size() != na * nb)
    throw std::invalid_argument("TensorWord::from_vec: length mismatch");
  return TensorWord(na, nb, na * nb != 0 ? v.data()[0] : 0);
}

std::uint64_t apply_packed(const BitMatrix &h, std::uint64_t x) {
  std::uint64_t y = 0;
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (h.cols() && std::popcount(h.row_data(r)[0] & x) & 1)
      y |= std::uint64_t{1} << r;
  return y;
}

std::vector<std::uint64_t> packed_codewords(const LinearCode &c) {
  if (c.n() > 64)
    throw std::invalid_argument("packed_codewords: length above 64");
  std::vector<std::uint64_t> out;
  for (const auto &w : c.codewords())
    out.push_back(c.n() ? w.data()[0] : 0);
  return out;
}

bool sigma_member(const TensorWord &c, const LinearCode &ca,
                  const LinearCode &cb) {
  if (c.na != ca.n() || c.nb != cb.n())
    throw std::invalid_argument("sigma_member: shape mismatch");
  // Columns of c H_B^T must lie in C_A.
  for (std::size_t r = 0; r < cb.m(); ++r) {
    std::uint64_t colv = 0;
    const std::uint64_t hrow = cb.n() ? cb.H().row_data(r)[0] : 0;
    for (std::size_t i = 0; i < c.na; ++i)
      colv |= std::uint64_t(std::popcount(c.row(i) & hrow) & 1) << i;
    if (apply_packed(ca.H(), colv))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

DecompositionSolver::DecompositionSolver(const LinearCode &ca,
                                         const LinearCode &cb,
                                         std::uint64_t cap)
    : na_(ca.n()), nb_(cb.n()), ma_(ca.m()), kb_(cb.k()), ca_(&ca) {
  check_shape(na_, nb_);
  for (std::size_t l = 0; l < kb_; ++l)
    gb_rows_.push_back(cb.generator().row_data(l)[0]);
  system_ = BitMatrix(ma_ * nb_, na_ * kb_);
  for (std::size_t i = 0; i < na_; ++i)
    for (std::size_t l = 0; l < kb_; ++l)
      for (std::size_t r = 0; r < ma_; ++r) {
        if (!ca.H().get(r, i))
          continue;
        for (std::size_t j = 0; j < nb_; ++j)
          if ((gb_rows_[l] >> j) & 1)
            system_.flip(r * nb_ + j, i * kb_ + l);
      }
  for (const auto &k : kernel_basis(system_))
    kernel_cb_.push_back(cb_of_x(k));
  if (kernel_cb_.size() >= 63 ||
      (std::uint64_t{1} << kernel_cb_.size()) > cap)
    throw std::length_error("min_decomposition: coset of size 2^" +
                            std::to_string(kernel_cb_.size()) +
                            " exceeds cap");
}

std::uint64_t DecompositionSolver::cb_of_x(const BitVector &x) const {
  std::uint64_t cb = 0;
  for (std::size_t i = 0; i < na_; ++i) {
    std::uint64_t row = 0;
    for (std::size_t l = 0; l < kb_; ++l)
      if (x.get(i * kb_ + l))
        row ^= gb_rows_[l];
    cb |= row << (i * nb_);
  }
  return cb;
}

std::uint64_t DecompositionSolver::rhs_of(std::uint64_t c,
                                          BitVector &rhs) const {
  // vec(H_A c), shape ma x nb
  rhs = BitVector(ma_ * nb_);
  const std::uint64_t m = low_mask(nb_);
  for (std::size_t r = 0; r < ma_; ++r) {
    std::uint64_t row = 0;
    for (std::size_t i = 0; i < na_; ++i)
      if (ca_->H().get(r, i))
        row ^= (c >> (i * nb_)) & m;
    for (std::size_t j = 0; j < nb_; ++j)
      if ((row >> j) & 1)
        rhs.set(r * nb_ + j);
  }
  return 0;
}

std::optional<std::uint64_t>
DecompositionSolver::particular(std::uint64_t c) const {
  BitVector rhs;
  rhs_of(c, rhs);
  auto sol = solve_affine(system_, rhs);
  if (!sol)
    return std::nullopt;
  return cb_of_x(sol->particular);
}

std::size_t DecompositionSolver::min_cost(std::uint64_t c,
                                          std::uint64_t cb) const {
  std::size_t best = nz_rows(cb, na_, nb_) + nz_cols(c ^ cb, na_, nb_);
  const std::uint64_t total = std::uint64_t{1} << kernel_cb_.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cb ^= kernel_cb_[std::countr_zero(i)];
    std::size_t cost = nz_rows(cb, na_, nb_) + nz_cols(c ^ cb, na_, nb_);
    if (cost < best)
      best = cost;
  }
  return best;
}

Decomposition DecompositionSolver::solve(const TensorWord &c) const {
  if (c.na != na_ || c.nb != nb_)
    throw std::invalid_argument("min_decomposition: shape mismatch");
  auto p = particular(c.bits);
  if (!p)
    throw std::invalid_argument("min_decomposition: word is not in Sigma");
  std::uint64_t cb = *p;
  std::uint64_t best_cb = cb;
  std::size_t best = nz_rows(cb, na_, nb_) + nz_cols(c.bits ^ cb, na_, nb_);
  const std::uint64_t total = std::uint64_t{1} << kernel_cb_.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cb ^= kernel_cb_[std::countr_zero(i)];
    std::size_t cost = nz_rows(cb, na_, nb_) + nz_cols(c.bits ^ cb, na_, nb_);
    if (cost < best || (cost == best && cb < best_cb)) {
      best = cost;
      best_cb = cb;
    }
  }
  Decomposition d;
  d.cb = TensorWord(na_, nb_, best_cb);
  d.ca = TensorWord(na_, nb_, c.bits ^ best_cb);
  d.cost = best;
  return d;
}

Decomposition min_decomposition(const TensorWord &c, const LinearCode &ca,
                                const LinearCode &cb, std::uint64_t cap) {
  return DecompositionSolver(ca, cb, cap).solve(c);
}

RobustnessReport robustness_exact(const LinearCode &ca, const LinearCode &cb,
                                  std::uint64_t cap) {
  const std::size_t na = ca.n(), nb = cb.n();
  check_shape(na, nb);
  RobustnessReport rep;
  auto sigma = kernel_basis(kron(ca.H(), cb.H()));
  if (sigma.empty()) {
    rep.vacuous = true;
    return rep;
  }
  DecompositionSolver solver(ca, cb, cap);
  const std::size_t dim = sigma.size() + solver.coset_dim();
  if (dim >= 63 || (std::uint64_t{1} << dim) > cap)
    throw std::length_error("robustness_exact: 2^" + std::to_string(dim) +
                            " enumeration steps exceed cap");
  std::vector<std::uint64_t> words, parts;
  for (const auto &s : sigma) {
    words.push_back(s.data()[0]);
    parts.push_back(*solver.particular(words.back()));
  }
  std::uint64_t c = 0, p = 0;
  std::size_t best_w = 0, best_cost = 0;
  std::uint64_t best_c = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << words.size()); ++i) {
    std::size_t bit = std::countr_zero(i);
    c ^= words[bit];
    p ^= parts[bit];
    std::size_t w = std::popcount(c);
    std::size_t cost = solver.min_cost(c, p);
    ++rep.words_examined;
    if (best_cost == 0 || ratio_less(w, cost, best_w, best_cost) ||
        (!ratio_less(best_w, best_cost, w, cost) && c < best_c)) {
      best_w = w;
      best_cost = cost;
      best_c = c;
    }
  }
  rep.d2 = Rational(best_w, best_cost);
  rep.witness = TensorWord(na, nb, best_c);
  rep.witness_decomposition = solver.solve(rep.witness);
  return rep;
}

AgreementReport agreement_test_parameter(const LinearCode &ca,
                                         const LinearCode &cb,
                                         std::uint64_t cap) {
  const std::size_t na = ca.n(), nb = cb.n();
  check_shape(na, nb);
  AgreementReport rep;
  const std::size_t ka = ca.k(), kb = cb.k();
  const std::size_t bits = ka * nb + kb * na + ka * kb;
  if (ka == 0 && kb == 0) {
    rep.vacuous = true;
    return rep;
  }
  if (bits >= 63 || (std::uint64_t{1} << bits) > cap)
    throw std::length_error("agreement_test_parameter: 2^" +
                            std::to_string(bits) + " steps exceed cap");
  auto wa = packed_codewords(ca), wb = packed_codewords(cb);
  // Column (resp. row) placements of every codeword.
  std::vector<std::vector<std::uint64_t>> col_place(nb), row_place(na);
  for (std::size_t j = 0; j < nb; ++j)
    for (auto w : wa)
      col_place[j].push_back(place_col(w, j, na, nb));
  for (std::size_t i = 0; i < na; ++i)
    for (auto w : wb)
      row_place[i].push_back(w << (i * nb));
  // C_A (x) C_B: span of outer products of generator rows.
  std::vector<std::uint64_t> tensor{0};
  for (std::size_t p = 0; p < ka; ++p)
    for (std::size_t q = 0; q < kb; ++q) {
      std::uint64_t gen = 0;
      std::uint64_t u = ca.generator().row_data(p)[0];
      std::uint64_t v = cb.generator().row_data(q)[0];
      for (std::size_t i = 0; i < na; ++i)
        if ((u >> i) & 1)
          gen |= v << (i * nb);
      std::size_t n = tensor.size();
      for (std::size_t t = 0; t < n; ++t)
        tensor.push_back(tensor[t] ^ gen);
    }
  // Mixed-radix odometers over column choices and row choices.
  std::vector<std::size_t> ci(nb, 0), ri(na, 0);
  std::size_t best_w = 0, best_m = 0;
  bool found = false;
  auto advance = [](std::vector<std::size_t> &idx, std::size_t radix) {
    for (auto &d : idx) {
      if (++d < radix)
        return true;
      d = 0;
    }
    return false;
  };
  do {
    std::uint64_t c_a = 0;
    for (std::size_t j = 0; j < nb; ++j)
      c_a ^= col_place[j][ci[j]];
    std::fill(ri.begin(), ri.end(), 0);
    do {
      std::uint64_t c_b = 0;
      for (std::size_t i = 0; i < na; ++i)
        c_b ^= row_place[i][ri[i]];
      const std::uint64_t w = c_a ^ c_b;
      if (!w)
        continue;
      std::size_t m = SIZE_MAX;
      for (auto t : tensor) {
        std::size_t cost = nz_cols(t ^ c_a, na, nb) + nz_rows(t ^ c_b, na, nb);
        if (cost < m)
          m = cost;
      }
      std::size_t wt = std::popcount(w);
      if (!found || ratio_less(wt, m, best_w, best_m)) {
        best_w = wt;
        best_m = m;
        found = true;
      }
    } while (advance(ri, wb.size()));
  } while (advance(ci, wa.size()));
  if (!found) {
    rep.vacuous = true;
    return rep;
  }
  rep.d2 = Rational(best_w, best_m);
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Recovers the codeword v of `code` whose restriction to `rest` is given,
// knowing v is supported anywhere and H|_{I} is injective.
std::uint64_t recover(const LinearCode &code, const std::vector<std::size_t> &I,
                      const std::vector<std::size_t> &rest,
                      const BitMatrix &j_left, std::uint64_t v_full_rest) {
  // v_I = J * H|_rest * v_rest
  BitVector vr(rest.size());
  for (std::size_t t = 0; t < rest.size(); ++t)
    if ((v_full_rest >> rest[t]) & 1)
      vr.set(t);
  std::uint64_t v = v_full_rest;
  for (auto i : I)
    v &= ~(std::uint64_t{1} << i);
  if (!I.empty()) {
    BitVector s = code.H().select_columns(rest).apply(vr);
    BitVector vi = j_left.apply(s);
    for (std::size_t t = 0; t < I.size(); ++t)
      if (vi.get(t))
        v |= std::uint64_t{1} << I[t];
  }
  return v;
}

std::vector<std::size_t> complement(const std::vector<std::size_t> &I,
                                    std::size_t n) {
  std::vector<bool> in(n, false);
  for (auto i : I) {
    if (i >= n)
      throw std::invalid_argument("index set entry out of range");
    in[i] = true;
  }
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i])
      r.push_back(i);
  return r;
}

} // namespace

StructuredResult structured_decomposition(const TensorWord &c,
                                          const std::vector<std::size_t> &ia,
                                          const std::vector<std::size_t> &ib,
                                          const LinearCode &ca,
                                          const LinearCode &cb) {
  const std::size_t na = ca.n(), nb = cb.n();
  if (c.na != na || c.nb != nb)
    throw std::invalid_argument("structured_decomposition: shape mismatch");
  auto rest_a = complement(ia, na), rest_b = complement(ib, nb);
  BitMatrix ja, jb;
  if (!ia.empty()) {
    try {
      ja = left_inverse(ca.H().select_columns(ia));
    } catch (const std::domain_error &) {
      throw std::invalid_argument("structured_decomposition: H_A restricted "
                                  "to Ia is not injective (|Ia| >= d1?)");
    }
  }
  if (!ib.empty()) {
    try {
      jb = left_inverse(cb.H().select_columns(ib));
    } catch (const std::domain_error &) {
      throw std::invalid_argument("structured_decomposition: H_B restricted "
                                  "to Ib is not injective (|Ib| >= d1?)");
    }
  }
  if (!sigma_member(c, ca, cb))
    throw std::invalid_argument("structured_decomposition: c not in Sigma");
  std::uint64_t allowed = 0;
  for (auto i : ia)
    for (std::size_t j = 0; j < nb; ++j)
      allowed |= std::uint64_t{1} << (i * nb + j);
  for (auto j : ib)
    for (std::size_t i = 0; i < na; ++i)
      allowed |= std::uint64_t{1} << (i * nb + j);
  if (c.bits & ~allowed)
    throw std::invalid_argument(
        "structured_decomposition: support not inside Ia x [nb] + [na] x Ib");

  // Column j in Ib: on rows outside Ia, c agrees with c_a.
  TensorWord c_a(na, nb);
  for (auto j : ib) {
    std::uint64_t v = recover(ca, ia, rest_a, ja, c.col(j));
    c_a.bits |= place_col(v, j, na, nb);
  }
  TensorWord c_b(na, nb, c.bits ^ c_a.bits);
  // The recovered parts must satisfy the lemma's structure exactly.
  for (std::size_t j = 0; j < nb; ++j)
    if (apply_packed(ca.H(), c_a.col(j)))
      throw std::logic_error("structured_decomposition: column not in C_A");
  for (std::size_t i = 0; i < na; ++i) {
    if (apply_packed(cb.H(), c_b.row(i)))
      throw std::logic_error("structured_decomposition: row not in C_B");
    if (c_b.row(i) && std::find(ia.begin(), ia.end(), i) == ia.end())
      throw std::logic_error("structured_decomposition: c_b leaves Ia rows");
  }
  StructuredResult r;
  r.dec.ca = c_a;
  r.dec.cb = c_b;
  r.dec.cost = c_a.nonzero_cols() + c_b.nonzero_rows();
  std::size_t d1 = std::min(distance_exact(ca), distance_exact(cb));
  if (d1 != distance_infinite && 2 * ia.size() < d1 && 2 * ib.size() < d1) {
    r.bound_checked = true;
    // |c| >= (d1/2) * cost  <=>  2|c| >= d1 * cost
    r.bound_holds = 2 * c.weight() >= d1 * r.dec.cost;
  }
  return r;
}

HeavyCheck punctured_heavy_check(const LinearCode &ca, const LinearCode &cb,
                                 std::size_t s, std::size_t t,
                                 std::uint64_t cap) {
  const std::size_t na = ca.n(), nb = cb.n();
  if (s > na || s > nb)
    throw std::invalid_argument("punctured_heavy_check: s exceeds length");
  HeavyCheck h;
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto &&self, std::size_t start) -> void {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  const std::size_t pa = na - s, pb = nb - s;
  check_shape(pa, pb);
  for (const auto &ia : subsets(na, s))
    for (const auto &ib : subsets(nb, s)) {
      LinearCode a = puncture(ca, ia), b = puncture(cb, ib);
      auto basis = kernel_basis(kron(a.H(), b.H()));
      if (basis.size() >= 63)
        throw std::length_error("punctured_heavy_check: Sigma too large");
      h.words_examined += (std::uint64_t{1} << basis.size()) - 1;
      if (h.words_examined > cap)
        throw std::length_error("punctured_heavy_check: enumeration exceeds cap");
      std::uint64_t c = 0;
      for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
        c ^= basis[std::countr_zero(i)].data()[0];
        TensorWord w(pa, pb, c);
        std::size_t heavy = 0;
        for (std::size_t r = 0; r < pa; ++r)
          heavy = std::max<std::size_t>(heavy, std::popcount(w.row(r)));
        for (std::size_t q = 0; q < pb; ++q)
          heavy = std::max<std::size_t>(heavy, std::popcount(w.col(q)));
        if (heavy < t) {
          h.pass = false;
          h.ia = ia;
          h.ib = ib;
          h.witness = w;
          return h;
        }
      }
    }
  return h;
}

// ---------------------------------------------------------------------------

LocalTensorComplex local_complex(const BitMatrix &ha, const BitMatrix &hb) {
  LocalTensorComplex y;
  y.ha = ha;
  y.hb = hb;
  y.na = ha.cols();
  y.nb = hb.cols();
  y.ma = ha.rows();
  y.mb = hb.rows();
  // middle space: [F^{na x mb} | F^{ma x nb}]
  y.d2 = BitMatrix::vstack(kron(BitMatrix::identity(y.na), hb),
                           kron(ha, BitMatrix::identity(y.nb)));
  y.d1 = BitMatrix::hstack(kron(ha, BitMatrix::identity(y.mb)),
                           kron(BitMatrix::identity(y.ma), hb));
  return y;
}

ExactnessReport exactness_check(const LocalTensorComplex &y) {
  ExactnessReport r;
  r.chain_ok = (y.d1 * y.d2).is_zero();
  r.rank_d1 = rank(y.d1);
  r.rank_d2 = rank(y.d2);
  r.dim_ker_d1 = y.d1.cols() - r.rank_d1;
  r.h1 = r.dim_ker_d1 - r.rank_d2;
  return r;
}

LiftResult lift_small(const LocalTensorComplex &y, const BitVector &c1,
                      const RobustnessReport &robust) {
  const std::size_t na = y.na, nb = y.nb, ma = y.ma, mb = y.mb;
  check_shape(na, nb);
  if (c1.size() != na * mb + ma * nb)
    throw std::invalid_argument("lift_small: c1 has wrong length");
  // q = first block (na x mb, equals c2 H_B^T), p = second (ma x nb, = H_A c2)
  auto q = [&](std::size_t i, std::size_t j) { return c1.get(i * mb + j); };
  auto p = [&](std::size_t r, std::size_t j) {
    return c1.get(na * mb + r * nb + j);
  };
  TensorWord sa(na, nb), sb(na, nb);
  std::size_t norm_c1 = 0;
  for (std::size_t j = 0; j < nb; ++j) {
    BitVector col(ma);
    for (std::size_t r = 0; r < ma; ++r)
      if (p(r, j))
        col.set(r);
    if (col.is_zero())
      continue;
    ++norm_c1;
    auto sol = solve_affine(y.ha, col);
    if (!sol)
      throw std::invalid_argument("lift_small: c1 not in the image of d2");
    for (std::size_t i = 0; i < na; ++i)
      if (sol->particular.get(i))
        sa.set(i, j);
  }
  for (std::size_t i = 0; i < na; ++i) {
    BitVector row(mb);
    for (std::size_t j = 0; j < mb; ++j)
      if (q(i, j))
        row.set(j);
    if (row.is_zero())
      continue;
    ++norm_c1;
    auto sol = solve_affine(y.hb, row);
    if (!sol)
      throw std::invalid_argument("lift_small: c1 not in the image of d2");
    for (std::size_t j = 0; j < nb; ++j)
      if (sol->particular.get(j))
        sb.set(i, j);
  }
  LinearCode ca = LinearCode::from_parity_check(y.ha);
  LinearCode cb = LinearCode::from_parity_check(y.hb);
  TensorWord t2(na, nb, sa.bits ^ sb.bits);
  if (!sigma_member(t2, ca, cb))
    throw std::invalid_argument("lift_small: c1 not in the image of d2");
  Decomposition dec = min_decomposition(t2, ca, cb);
  LiftResult r;
  r.c2 = TensorWord(na, nb, sa.bits ^ dec.ca.bits);
  if (!(y.d2.apply(r.c2.vec()) == c1))
    throw std::invalid_argument("lift_small: c1 not in the image of d2");
  r.norm_c1 = norm_c1;
  r.norm_c2 = r.c2.nonzero_rows() + r.c2.nonzero_cols();
  const std::size_t delta = std::max(na, nb);
  if (robust.vacuous || t2.bits == 0) {
    r.bound = Rational(norm_c1);
    if (!robust.vacuous)
      r.bound = (1 + Rational(delta) / robust.d2) * norm_c1;
  } else {
    r.bound = (1 + Rational(delta) / robust.d2) * norm_c1;
  }
  r.bound_holds = Rational(r.norm_c2) <= r.bound;
  return r;
}

} // namespace lrq
