#include "lrq/group_graph.h"
#include "lrq/rng.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lrq {

FiniteGroup
FiniteGroup::from_table(std::vector<std::vector<std::uint32_t>> table) {
  FiniteGroup g;
  g.order = static_cast<std::uint32_t>(table.size());
  if (g.order == 0)
    throw std::invalid_argument("group table: empty");
  g.mul_table.resize(std::size_t{g.order} * g.order);
  for (std::uint32_t a = 0; a < g.order; ++a) {
    if (table[a].size() != g.order)
      throw std::invalid_argument("group table: row " + std::to_string(a) +
                                  " has wrong length");
    for (std::uint32_t b = 0; b < g.order; ++b) {
      if (table[a][b] >= g.order)
        throw std::invalid_argument("group table: entry out of range");
      g.mul_table[std::size_t{a} * g.order + b] = table[a][b];
    }
  }
  bool found = false;
  for (std::uint32_t e = 0; e < g.order && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < g.order && ok; ++x)
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.id = e;
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("group table: no identity element");
  g.inv_table.assign(g.order, g.order);
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = 0; b < g.order; ++b)
      if (g.mul(a, b) == g.id && g.mul(b, a) == g.id)
        g.inv_table[a] = b;
  for (std::uint32_t a = 0; a < g.order; ++a)
    if (g.inv_table[a] == g.order)
      throw std::invalid_argument("group table: element " +
                                  std::to_string(a) + " has no inverse");
  // Associativity: exhaustive for small tables.
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = 0; b < g.order; ++b)
      for (std::uint32_t c = 0; c < g.order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::invalid_argument("group table: not associative");
  g.labels.resize(g.order);
  for (std::uint32_t a = 0; a < g.order; ++a)
    g.labels[a] = std::to_string(a);
  return g;
}

bool FiniteGroup::validate(std::mt19937_64 &rng, std::size_t samples) const {
  for (std::uint32_t x = 0; x < order; ++x) {
    if (mul(id, x) != x || mul(x, id) != x)
      return false;
    if (mul(inv(x), x) != id || mul(x, inv(x)) != id)
      return false;
  }
  const std::uint64_t n = order;
  if (n * n * n <= samples) {
    for (std::uint32_t a = 0; a < order; ++a)
      for (std::uint32_t b = 0; b < order; ++b)
        for (std::uint32_t c = 0; c < order; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            return false;
    return true;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    auto a = static_cast<std::uint32_t>(uniform_below(rng, n));
    auto b = static_cast<std::uint32_t>(uniform_below(rng, n));
    auto c = static_cast<std::uint32_t>(uniform_below(rng, n));
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      return false;
  }
  return true;
}

void check_generators(const FiniteGroup &g, const GeneratorSet &s) {
  std::vector<bool> in(g.order, false);
  for (auto a : s.elements) {
    if (a >= g.order)
      throw std::invalid_argument("generator index out of range");
    if (a == g.id)
      throw std::invalid_argument("generator set contains the identity");
    if (in[a])
      throw std::invalid_argument("generator set has a repeated element " +
                                  g.labels[a]);
    in[a] = true;
  }
  for (auto a : s.elements)
    if (!in[g.inv(a)])
      throw std::invalid_argument("generator set not closed under inverse: " +
                                  g.labels[a] + " lacks its inverse");
}

FiniteGroup build_cyclic_group(std::uint32_t n) {
  if (n == 0)
    throw std::invalid_argument("cyclic group: n must be positive");
  FiniteGroup g;
  g.order = n;
  g.id = 0;
  g.mul_table.resize(std::size_t{n} * n);
  g.inv_table.resize(n);
  g.labels.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b)
      g.mul_table[std::size_t{a} * n + b] = (a + b) % n;
    g.inv_table[a] = (n - a) % n;
    g.labels[a] = std::to_string(a);
  }
  return g;
}

std::pair<FiniteGroup, GeneratorSet>
build_cyclic(std::uint32_t n, const std::vector<std::int64_t> &offsets) {
  FiniteGroup g = build_cyclic_group(n);
  GeneratorSet s;
  for (auto o : offsets) {
    std::int64_t r = ((o % std::int64_t{n}) + n) % n;
    s.elements.push_back(static_cast<std::uint32_t>(r));
  }
  check_generators(g, s);
  return {std::move(g), std::move(s)};
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1)
      r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  return static_cast<std::uint32_t>(pow_mod(a, q - 2, q));
}

std::uint64_t mat_key(const Mat2 &m, std::uint32_t q) {
  return ((std::uint64_t{m[0]} * q + m[1]) * q + m[2]) * q + m[3];
}

Mat2 mat_mul(const Mat2 &x, const Mat2 &y, std::uint32_t q) {
  auto f = [q](std::uint64_t a, std::uint64_t b, std::uint64_t c,
               std::uint64_t d) {
    return static_cast<std::uint32_t>((a * b + c * d) % q);
  };
  return {f(x[0], y[0], x[1], y[2]), f(x[0], y[1], x[1], y[3]),
          f(x[2], y[0], x[3], y[2]), f(x[2], y[1], x[3], y[3])};
}

// Index lookup table for PSL(2,q) groups built here, keyed by q.
struct PslLookup {
  std::uint32_t q = 0;
  std::vector<std::int32_t> index; // size q^4, -1 for non-members
};

PslLookup make_lookup(const FiniteGroup &g, std::uint32_t q) {
  PslLookup l;
  l.q = q;
  l.index.assign(std::size_t{q} * q * q * q, -1);
  for (std::uint32_t i = 0; i < g.order; ++i) {
    // labels hold "a,b,c,d" of the normalized representative
    Mat2 m{};
    std::size_t pos = 0;
    const std::string &s = g.labels[i];
    for (int k = 0; k < 4; ++k) {
      std::size_t next = s.find(',', pos);
      m[k] = static_cast<std::uint32_t>(std::stoul(s.substr(pos, next - pos)));
      pos = next + 1;
    }
    l.index[mat_key(m, q)] = static_cast<std::int32_t>(i);
  }
  return l;
}

} // namespace

int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = ((a % p) + p) % p;
  if (r == 0)
    return 0;
  auto v = pow_mod(static_cast<std::uint64_t>(r),
                   static_cast<std::uint64_t>((p - 1) / 2),
                   static_cast<std::uint64_t>(p));
  return v == 1 ? 1 : -1;
}

Mat2 psl2_normalize(Mat2 m, std::uint32_t q) {
  for (auto &x : m)
    x %= q;
  std::uint32_t lead = 0;
  for (auto x : m)
    if (x) {
      lead = x;
      break;
    }
  if (!lead)
    throw std::invalid_argument("psl2: zero matrix");
  std::uint64_t s = inv_mod(lead, q);
  for (auto &x : m)
    x = static_cast<std::uint32_t>(x * s % q);
  return m;
}

FiniteGroup build_psl2(std::uint32_t q) {
  if (!is_prime(q) || q < 3)
    throw std::invalid_argument("build_psl2: q must be an odd prime, got " +
                                std::to_string(q));
  const std::uint64_t order = std::uint64_t{q} * (std::uint64_t{q} * q - 1) / 2;
  if (order > 3000)
    throw std::length_error("build_psl2: |PSL(2," + std::to_string(q) +
                            ")| = " + std::to_string(order) +
                            " exceeds the dense-table limit 3000");
  std::vector<std::uint64_t> keys;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          if ((std::uint64_t{a} * d + std::uint64_t{q - b} * c) % q != 1)
            continue;
          keys.push_back(mat_key(psl2_normalize({a, b, c, d}, q), q));
        }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  if (keys.size() != order)
    throw std::logic_error("build_psl2: unexpected element count");

  FiniteGroup g;
  g.order = static_cast<std::uint32_t>(order);
  std::vector<Mat2> mats(order);
  std::vector<std::int32_t> index(std::size_t{q} * q * q * q, -1);
  for (std::size_t i = 0; i < order; ++i) {
    std::uint64_t k = keys[i];
    mats[i] = {static_cast<std::uint32_t>(k / (std::uint64_t{q} * q * q)),
               static_cast<std::uint32_t>(k / (std::uint64_t{q} * q) % q),
               static_cast<std::uint32_t>(k / q % q),
               static_cast<std::uint32_t>(k % q)};
    index[k] = static_cast<std::int32_t>(i);
  }
  g.labels.resize(order);
  for (std::size_t i = 0; i < order; ++i)
    g.labels[i] = std::to_string(mats[i][0]) + "," + std::to_string(mats[i][1]) +
                  "," + std::to_string(mats[i][2]) + "," +
                  std::to_string(mats[i][3]);
  g.mul_table.resize(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      g.mul_table[i * order + j] = static_cast<std::uint32_t>(
          index[mat_key(psl2_normalize(mat_mul(mats[i], mats[j], q), q), q)]);
  g.id = static_cast<std::uint32_t>(index[mat_key({1, 0, 0, 1}, q)]);
  g.inv_table.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    const Mat2 &m = mats[i];
    Mat2 adj{m[3], (q - m[1]) % q, (q - m[2]) % q, m[0]};
    g.inv_table[i] = static_cast<std::uint32_t>(
        index[mat_key(psl2_normalize(adj, q), q)]);
  }
  return g;
}

std::uint32_t psl2_index(const FiniteGroup &g, std::uint32_t q, Mat2 m) {
  for (auto &x : m)
    x %= q;
  std::uint64_t det = (std::uint64_t{m[0]} * m[3] +
                       std::uint64_t{q - m[1]} * m[2]) % q;
  if (det == 0)
    throw std::invalid_argument("psl2_index: singular matrix");
  if (legendre(static_cast<std::int64_t>(det), q) != 1)
    throw std::invalid_argument(
        "psl2_index: determinant is a non-residue, matrix lies outside PSL");
  static thread_local PslLookup cache;
  if (cache.q != q || cache.index.empty() ||
      cache.index.size() != std::size_t{q} * q * q * q)
    cache = make_lookup(g, q);
  std::int32_t i = cache.index[mat_key(psl2_normalize(m, q), q)];
  if (i < 0)
    throw std::invalid_argument("psl2_index: matrix not found in group");
  return static_cast<std::uint32_t>(i);
}

GeneratorSet lps_generators(const FiniteGroup &g, std::uint32_t p,
                            std::uint32_t q) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw std::invalid_argument("lps_generators: p, q must be distinct primes");
  if (p % 4 != 1 || q % 4 != 1)
    throw std::invalid_argument("lps_generators: need p = q = 1 (mod 4)");
  if (legendre(q, p) != 1 || legendre(p, q) != 1)
    throw std::invalid_argument(
        "lps_generators: need (q|p) = 1 so the generators lie in PSL(2,q); "
        "got (" + std::to_string(q) + "|" + std::to_string(p) + ") = " +
        std::to_string(legendre(q, p)));
  if (g.order != q * (q * q - 1) / 2)
    throw std::invalid_argument("lps_generators: group is not PSL(2,q)");
  std::uint32_t iota = 0;
  for (std::uint32_t x = 1; x < q; ++x)
    if (std::uint64_t{x} * x % q == q - 1) {
      iota = x;
      break;
    }
  GeneratorSet s;
  s.side = Side::left;
  const auto ip = static_cast<std::int64_t>(p);
  const auto iq = static_cast<std::int64_t>(q);
  auto md = [iq](std::int64_t v) {
    return static_cast<std::uint32_t>(((v % iq) + iq) % iq);
  };
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= ip)
    ++r;
  const std::int64_t lo = -(r - (r & 1)); // largest even magnitude <= r
  for (std::int64_t a = 1; a <= r; a += 2)
    for (std::int64_t b = lo; b <= -lo; b += 2)
      for (std::int64_t c = lo; c <= -lo; c += 2)
        for (std::int64_t d = lo; d <= -lo; d += 2) {
          if (a * a + b * b + c * c + d * d != ip)
            continue;
          const std::int64_t i = iota;
          Mat2 m{md(a + b * i), md(c + d * i), md(-c + d * i), md(a - b * i)};
          s.elements.push_back(psl2_index(g, q, m));
        }
  if (s.elements.size() != p + 1)
    throw std::logic_error("lps_generators: expected p+1 quaternions");
  check_generators(g, s);
  return s;
}

GeneratorSet random_generators(const FiniteGroup &g, std::size_t delta,
                               std::mt19937_64 &rng, Side side) {
  std::vector<std::uint32_t> pool;
  for (std::uint32_t x = 0; x < g.order; ++x)
    if (x != g.id && x <= g.inv(x))
      pool.push_back(x);
  for (int attempt = 0; attempt < 256; ++attempt) {
    shuffle_range(pool.begin(), pool.end(), rng);
    GeneratorSet s;
    s.side = side;
    for (auto x : pool) {
      std::size_t need = (g.inv(x) == x) ? 1 : 2;
      if (s.size() + need > delta)
        continue;
      s.elements.push_back(x);
      if (need == 2)
        s.elements.push_back(g.inv(x));
      if (s.size() == delta)
        break;
    }
    if (s.size() == delta)
      return s;
  }
  throw std::invalid_argument("random_generators: cannot form an inverse-closed "
                              "set of size " + std::to_string(delta));
}

std::size_t Graph::degree() const {
  if (nbr.empty())
    return 0;
  std::size_t d = nbr[0].size();
  for (const auto &n : nbr)
    if (n.size() != d)
      throw std::domain_error("graph is not regular");
  return d;
}

std::size_t Graph::num_arcs() const {
  std::size_t n = 0;
  for (const auto &x : nbr)
    n += x.size();
  return n;
}

Graph cayley_graph(const FiniteGroup &g, const GeneratorSet &s) {
  check_generators(g, s);
  Graph gr;
  gr.nbr.resize(g.order);
  for (std::uint32_t x = 0; x < g.order; ++x)
    for (auto a : s.elements)
      gr.nbr[x].push_back(s.side == Side::left ? g.mul(a, x) : g.mul(x, a));
  return gr;
}

Graph double_cover(const Graph &g) {
  const auto n = static_cast<std::uint32_t>(g.num_vertices());
  Graph d;
  d.nbr.resize(2 * std::size_t{n});
  for (std::uint32_t v = 0; v < n; ++v)
    for (auto w : g.nbr[v]) {
      d.nbr[v].push_back(n + w);
      d.nbr[n + w].push_back(v);
    }
  return d;
}

SpectralReport spectral_report(const Graph &g) {
  SpectralReport r;
  r.delta = g.degree();
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v)
    for (auto w : g.nbr[static_cast<std::size_t>(v)])
      a(v, w) += 1.0;
  if (!a.isApprox(a.transpose()))
    throw std::domain_error("spectral_report: adjacency is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectral_report: eigensolver failed");
  for (Eigen::Index i = n - 1; i >= 0; --i)
    r.eigenvalues.push_back(es.eigenvalues()(i));
  if (n >= 2)
    r.lambda = std::max(std::abs(r.eigenvalues[1]),
                        std::abs(r.eigenvalues.back()));
  r.lambda_certified = r.lambda + 1e-6;
  return r;
}

std::size_t edges_between(const Graph &g, const std::vector<bool> &s,
                          const std::vector<bool> &t) {
  std::size_t e = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (s[v])
      for (auto w : g.nbr[v])
        e += t[w];
  return e;
}

MixingResult mixing_check(const Graph &g, const SpectralReport &rep,
                          std::size_t trials, std::mt19937_64 &rng) {
  MixingResult res;
  res.worst_slack = INFINITY;
  const std::size_t n = g.num_vertices();
  const double delta = static_cast<double>(rep.delta);
  for (std::size_t t = 0; t < trials; ++t) {
    double ps = uniform01(rng), pt = uniform01(rng);
    std::vector<bool> s(n), tt(n);
    double ns = 0, nt = 0;
    for (std::size_t v = 0; v < n; ++v) {
      s[v] = bernoulli(rng, ps);
      tt[v] = bernoulli(rng, pt);
      ns += s[v];
      nt += tt[v];
    }
    double e = static_cast<double>(edges_between(g, s, tt));
    double bound = delta / static_cast<double>(n) * ns * nt +
                   rep.lambda_certified * std::sqrt(ns * nt);
    double slack = bound - e;
    res.worst_slack = std::min(res.worst_slack, slack);
    if (slack < -1e-9)
      res.pass = false;
    ++res.trials;
  }
  return res;
}

} // namespace lrq
