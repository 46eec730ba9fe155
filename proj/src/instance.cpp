#include "lrq/instance.h"

#include "lrq/rng.h"
#include "lrq/tensor.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lrq {

namespace {

[[noreturn]] void schema_error(const std::string &field, const std::string &msg) {
  throw std::invalid_argument("config field '" + field + "': " + msg);
}

const json &require(const json &obj, const std::string &key,
                    const std::string &path) {
  if (!obj.is_object())
    schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    schema_error(path + "." + key, "missing");
  return *it;
}

template <class T> T get_as(const json &v, const std::string &path) {
  try {
    return v.get<T>();
  } catch (const json::exception &e) {
    schema_error(path, std::string("wrong type (") + e.what() + ")");
  }
}

std::uint64_t get_u64(const json &obj, const std::string &key,
                      const std::string &path, std::uint64_t def) {
  if (!obj.is_object() || !obj.contains(key))
    return def;
  const json &v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    schema_error(path + "." + key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

} // namespace

RunConfig parse_config(const json &doc) {
  RunConfig c;
  c.raw = doc;
  if (!doc.is_object())
    schema_error("$", "top level must be an object");
  if (doc.contains("version") && get_as<int>(doc.at("version"), "version") != 1)
    schema_error("version", "only version 1 is supported");
  const json &g = require(doc, "group", "$");
  const std::string kind = get_as<std::string>(require(g, "kind", "group"), "group.kind");
  if (kind != "cyclic" && kind != "psl2" && kind != "table")
    schema_error("group.kind", "expected cyclic, psl2 or table, got '" + kind + "'");
  require(doc, "A", "$");
  require(doc, "B", "$");
  const json &codes = require(doc, "codes", "$");
  require(codes, "A", "codes");
  require(codes, "B", "codes");
  if (doc.contains("caps")) {
    const json &cp = doc.at("caps");
    c.caps.distance = get_u64(cp, "distance", "caps", c.caps.distance);
    c.caps.flip = get_u64(cp, "flip", "caps", c.caps.flip);
    c.caps.robustness = get_u64(cp, "robustness", "caps", c.caps.robustness);
  }
  if (doc.contains("channel")) {
    const json &ch = doc.at("channel");
    if (!ch.is_object())
      schema_error("channel", "expected an object");
    if (ch.contains("model"))
      c.channel.model = get_as<std::string>(ch.at("model"), "channel.model");
    if (c.channel.model != "fixed-weight" && c.channel.model != "iid")
      schema_error("channel.model", "expected fixed-weight or iid");
    if (ch.contains("p"))
      c.channel.p = get_as<double>(ch.at("p"), "channel.p");
    if (c.channel.p < 0 || c.channel.p > 1)
      schema_error("channel.p", "must lie in [0,1]");
    c.channel.w = get_u64(ch, "w", "channel", c.channel.w);
    c.channel.trials = get_u64(ch, "trials", "channel", c.channel.trials);
    c.channel.seed = get_u64(ch, "seed", "channel", c.channel.seed);
  }
  return c;
}

RunConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open config " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument("config " + path + " is not valid JSON: " +
                                e.what());
  }
  return parse_config(doc);
}

namespace {

FiniteGroup build_group(const json &g, std::uint32_t &q_out) {
  const std::string kind = g.at("kind").get<std::string>();
  q_out = 0;
  if (kind == "cyclic") {
    auto n = get_u64(g, "n", "group", 0);
    if (n == 0 || n > 100000)
      schema_error("group.n", "need 1 <= n <= 100000");
    return build_cyclic_group(static_cast<std::uint32_t>(n));
  }
  if (kind == "psl2") {
    auto q = get_u64(g, "q", "group", 0);
    if (q < 3 || !is_prime(q))
      schema_error("group.q", "need an odd prime");
    q_out = static_cast<std::uint32_t>(q);
    return build_psl2(q_out);
  }
  auto table = get_as<std::vector<std::vector<std::uint32_t>>>(
      require(g, "table", "group"), "group.table");
  return FiniteGroup::from_table(std::move(table));
}

GeneratorSet build_generators(const json &spec, const std::string &path,
                              const FiniteGroup &g, const std::string &kind,
                              std::uint32_t q, Side side) {
  GeneratorSet s;
  s.side = side;
  if (!spec.is_object())
    schema_error(path, "expected an object");
  if (spec.contains("offsets")) {
    if (kind != "cyclic")
      schema_error(path + ".offsets", "only valid for cyclic groups");
    auto offs = get_as<std::vector<std::int64_t>>(spec.at("offsets"), path + ".offsets");
    const auto n = static_cast<std::int64_t>(g.order);
    for (auto o : offs)
      s.elements.push_back(static_cast<std::uint32_t>(((o % n) + n) % n));
  } else if (spec.contains("elements")) {
    s.elements = get_as<std::vector<std::uint32_t>>(spec.at("elements"), path + ".elements");
    for (auto e : s.elements)
      if (e >= g.order)
        schema_error(path + ".elements", "element index out of range");
  } else if (spec.contains("matrices")) {
    if (kind != "psl2")
      schema_error(path + ".matrices", "only valid for psl2 groups");
    auto ms = get_as<std::vector<std::array<std::uint32_t, 4>>>(spec.at("matrices"),
                                                              path + ".matrices");
    for (auto m : ms)
      s.elements.push_back(psl2_index(g, q, m));
  } else if (spec.contains("lps")) {
    if (kind != "psl2")
      schema_error(path + ".lps", "only valid for psl2 groups");
    auto p = get_u64(spec.at("lps"), "p", path + ".lps", 0);
    s = lps_generators(g, static_cast<std::uint32_t>(p), q);
    s.side = side;
  } else if (spec.contains("random")) {
    const json &r = spec.at("random");
    auto count = get_u64(r, "count", path + ".random", 0);
    auto seed = get_u64(r, "seed", path + ".random", 0);
    std::mt19937_64 rng(seed);
    s = random_generators(g, count, rng, side);
  } else {
    schema_error(path, "expected one of offsets, elements, matrices, lps, random");
  }
  try {
    check_generators(g, s);
  } catch (const std::invalid_argument &e) {
    schema_error(path, e.what());
  }
  return s;
}

LinearCode build_code(const json &spec, const std::string &path) {
  if (!spec.is_object())
    schema_error(path, "expected an object");
  if (spec.contains("H")) {
    auto rows = get_as<std::vector<std::string>>(spec.at("H"), path + ".H");
    try {
      return LinearCode::from_parity_check(BitMatrix::from_rows(rows));
    } catch (const std::exception &e) {
      schema_error(path + ".H", e.what());
    }
  }
  if (spec.contains("repetition")) {
    auto n = get_u64(spec, "repetition", path, 0);
    if (n < 1)
      schema_error(path + ".repetition", "need n >= 1");
    BitMatrix h(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h.set(i, i);
      h.set(i, i + 1);
    }
    return LinearCode::from_parity_check(h);
  }
  if (spec.contains("random")) {
    const json &r = spec.at("random");
    auto n = get_u64(r, "n", path + ".random", 0);
    auto k = get_u64(r, "k", path + ".random", 0);
    auto seed = get_u64(r, "seed", path + ".random", 0);
    if (k > n || n == 0)
      schema_error(path + ".random", "need 0 <= k <= n, n > 0");
    std::mt19937_64 rng(seed);
    return sample_uniform(n, k, rng);
  }
  schema_error(path, "expected one of H, repetition, random");
}

json matrix_rows(const BitMatrix &m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(m.row(r).to_string());
  return rows;
}

json distance_json(std::size_t d) {
  return d == distance_infinite ? json("infinite") : json(d);
}

} // namespace

Instance build_instance(const RunConfig &cfg) {
  Instance inst;
  inst.config = cfg;
  const json &doc = cfg.raw;
  std::uint32_t q = 0;
  inst.group = build_group(doc.at("group"), q);
  const std::string kind = doc.at("group").at("kind").get<std::string>();
  inst.A = build_generators(doc.at("A"), "A", inst.group, kind, q, Side::left);
  inst.B = build_generators(doc.at("B"), "B", inst.group, kind, q, Side::right);
  inst.ca = build_code(doc.at("codes").at("A"), "codes.A");
  inst.cb = build_code(doc.at("codes").at("B"), "codes.B");
  if (inst.A.size() != inst.B.size())
    schema_error("B", "|A| = " + std::to_string(inst.A.size()) +
                          " but |B| = " + std::to_string(inst.B.size()));
  if (inst.ca.n() != inst.A.size() || inst.cb.n() != inst.B.size())
    schema_error("codes", "code lengths must equal Delta = " +
                              std::to_string(inst.A.size()));
  inst.complex = std::make_shared<const LeftRightComplex>(inst.group, inst.A, inst.B);
  inst.x = std::make_shared<const ChainComplexX>(
      build_chain_complex(inst.complex, inst.ca, inst.cb));
  return inst;
}

json manifest_json(const Instance &inst, bool with_spectrum) {
  const ChainComplexX &x = *inst.x;
  const auto &cx = *inst.complex;
  json m;
  m["format"] = "lrq-instance";
  m["version"] = 1;
  m["config"] = inst.config.raw;
  m["group"] = {{"order", inst.group.order}};
  auto gens = [&](const GeneratorSet &s) {
    json a = json::array();
    for (auto e : s.elements)
      a.push_back({{"index", e}, {"label", inst.group.labels.empty() ? std::to_string(e)
                                                                     : inst.group.labels[e]}});
    return a;
  };
  m["A"] = gens(inst.A);
  m["B"] = gens(inst.B);
  auto code = [&](const LinearCode &c) {
    return json{{"n", c.n()}, {"k", c.k()}, {"m", c.m()}, {"H", matrix_rows(c.H())},
                {"distance", distance_json(distance_exact(c))},
                {"dual_distance", distance_json(distance_exact(dual(c)))}};
  };
  m["codes"] = {{"A", code(inst.ca)}, {"B", code(inst.cb)}};
  m["sizes"] = {{"delta", cx.delta()},     {"vertices", cx.num_vertices()},
                {"edges", cx.num_edges()}, {"faces", cx.num_faces()},
                {"X2", x.size(2)},         {"X1", x.size(1)},
                {"X0", x.size(0)}};
  const LdpcProfile p = ldpc_profile(x);
  m["ldpc"] = {{"d2_max_row", p.d2_max_row}, {"d2_max_col", p.d2_max_col},
               {"d1_max_row", p.d1_max_row}, {"d1_max_col", p.d1_max_col},
               {"within_4delta", p.within_4delta}, {"fine_bounds", p.fine_bounds}};
  const RateReport r = dimension_and_rate(x);
  m["k"] = r.k;
  m["rank_d1"] = r.rank_d1;
  m["rank_d2"] = r.rank_d2;
  m["rate"] = r.rate;
  m["rate_lower_bound"] = r.lower_bound;
  m["naive_k"] = r.naive_k;
  const CollisionStats cs = collision_stats(cx);
  m["collisions"] = {{"shared_generators", cs.shared_generators},
                     {"involutions_a", cs.involutions_a},
                     {"involutions_b", cs.involutions_b},
                     {"degenerate_faces", cs.degenerate_faces},
                     {"parallel_edges", cs.parallel_edges}};
  if (with_spectrum && inst.group.order <= 3000) {
    const auto ra = spectral_report(cayley_graph(inst.group, inst.A));
    const auto rb = spectral_report(cayley_graph(inst.group, inst.B));
    std::ostringstream la, lb;
    la << std::setprecision(12) << ra.lambda;
    lb << std::setprecision(12) << rb.lambda;
    m["lambda"] = {{"A", la.str()}, {"B", lb.str()},
                   {"certified", std::max(ra.lambda_certified, rb.lambda_certified)}};
  }
  m["files"] = {{"hx_alist", "hx.alist"}, {"hz_alist", "hz.alist"},
                {"hx_mtx", "hx.mtx"}, {"hz_mtx", "hz.mtx"}};
  return m;
}

void write_exports(const Instance &inst, const std::string &dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const CssCode css = css_code(*inst.x);
  auto open = [&](const std::string &name) {
    std::ofstream f(fs::path(dir) / name, std::ios::binary);
    if (!f)
      throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
    return f;
  };
  {
    auto f = open("hx.alist");
    write_alist(f, css.hx);
  }
  {
    auto f = open("hz.alist");
    write_alist(f, css.hz);
  }
  {
    auto f = open("hx.mtx");
    write_mtx(f, css.hx);
  }
  {
    auto f = open("hz.mtx");
    write_mtx(f, css.hz);
  }
  auto f = open("manifest.json");
  f << manifest_json(inst).dump(2) << "\n";
}

std::optional<ChainFault> chain_condition_fault(const BitMatrix &d1,
                                                const BitMatrix &d2,
                                                std::size_t vertex_block) {
  if (d1.cols() != d2.rows())
    throw std::invalid_argument("chain check: d1 columns != d2 rows");
  const BitMatrix prod = d1 * d2;
  for (std::size_t r = 0; r < prod.rows(); ++r) {
    const BitVector row = prod.row(r);
    if (row.is_zero())
      continue;
    ChainFault f;
    f.row = r;
    f.vertex = vertex_block ? r / vertex_block : r;
    f.face = row.support().front();
    return f;
  }
  return std::nullopt;
}

std::vector<CheckItem> run_checks(const Instance &inst, std::uint64_t seed,
                                  std::size_t samples, const BitMatrix *d1,
                                  const BitMatrix *d2) {
  std::vector<CheckItem> out;
  const ChainComplexX &x = *inst.x;
  const auto &cx = *inst.complex;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  const BitMatrix &m1 = d1 ? *d1 : x.d1();
  const BitMatrix &m2 = d2 ? *d2 : x.d2();
  if (m1.rows() != x.d1().rows() || m1.cols() != x.d1().cols() ||
      m2.rows() != x.d2().rows() || m2.cols() != x.d2().cols()) {
    add("matrix_shapes", false, "loaded matrices do not match the instance sizes");
    return out;
  }
  add("matrix_shapes", true);
  if (auto fault = chain_condition_fault(m1, m2, x.ma() * x.mb())) {
    add("chain_condition", false,
        "d1*d2 nonzero at face " + std::to_string(fault->face) + ", vertex " +
            std::to_string(fault->vertex) + " (row " + std::to_string(fault->row) + ")");
  } else {
    add("chain_condition", true);
  }
  add("matches_construction", m1 == x.d1() && m2 == x.d2(),
      m1 == x.d1() && m2 == x.d2() ? "" : "matrices differ from a fresh build");
  const LdpcProfile p = ldpc_profile(x);
  add("ldpc_4delta", p.within_4delta);
  add("ldpc_fine_bounds", p.fine_bounds);
  const RateReport r = dimension_and_rate(x);
  add("dimension_rate_bound", r.bound_holds,
      "k=" + std::to_string(r.k) + " rate=" + std::to_string(r.rate) +
          " bound=" + std::to_string(r.lower_bound));
  const auto ex = exactness_check(local_complex(inst.ca.H(), inst.cb.H()));
  add("local_exactness", ex.exact(), "h1=" + std::to_string(ex.h1));
  bool ident = true;
  for (auto k : {SubgraphKind::ef_vertical, SubgraphKind::ef_horizontal,
                 SubgraphKind::ve_vertical, SubgraphKind::ve_horizontal}) {
    try {
      check_identification(subgraph(cx, k));
    } catch (const std::exception &) {
      ident = false;
    }
  }
  add("tanner_identification", ident);
  std::mt19937_64 rng(seed);
  for (const auto *gs : {&inst.A, &inst.B}) {
    const std::string tag = gs == &inst.A ? "A" : "B";
    Graph g = cayley_graph(inst.group, *gs);
    bool regular = true;
    try {
      regular = g.degree() == gs->size();
    } catch (const std::domain_error &) {
      regular = false;
    }
    add("cayley_regular_" + tag, regular);
    if (inst.group.order <= 3000) {
      auto rep = spectral_report(g);
      auto mix = mixing_check(g, rep, samples, rng);
      add("mixing_" + tag, mix.pass, "worst slack " + std::to_string(mix.worst_slack));
    }
  }
  if (inst.group.order <= 3000) {
    const auto ra = spectral_report(cayley_graph(inst.group, inst.A));
    const auto rb = spectral_report(cayley_graph(inst.group, inst.B));
    const double lambda = std::max(ra.lambda_certified, rb.lambda_certified);
    auto q = m0_m1_check(cx, lambda, samples, rng);
    add("m0_m1_forms", q.pass,
        "worst slack m1 " + std::to_string(q.worst_slack_m1) + ", m0 " +
            std::to_string(q.worst_slack_m0));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<RobustRow> robust_search(std::size_t delta, std::size_t ka,
                                     std::size_t kb, std::size_t samples,
                                     std::uint64_t seed, std::uint64_t cap) {
  if (ka > delta || kb > delta)
    throw std::invalid_argument("robust_search: k exceeds Delta");
  std::vector<RobustRow> rows;
  for (std::size_t i = 0; i < samples; ++i) {
    RobustRow row;
    row.seed = seed + i;
    row.delta = delta;
    row.ka = ka;
    row.kb = kb;
    std::mt19937_64 rng(row.seed);
    const LinearCode a = sample_uniform(delta, ka, rng);
    const LinearCode b = sample_uniform(delta, kb, rng);
    const LinearCode ad = dual(a), bd = dual(b);
    row.d1[0] = distance_exact(a);
    row.d1[1] = distance_exact(b);
    row.d1[2] = distance_exact(ad);
    row.d1[3] = distance_exact(bd);
    auto eval = [&](const LinearCode &x, const LinearCode &y, std::string &out,
                    double &val) {
      const RobustnessReport r = robustness_exact(x, y, cap);
      bool agree = false;
      try {
        const AgreementReport ag = agreement_test_parameter(x, y, cap);
        agree = ag.vacuous == r.vacuous && (r.vacuous || ag.d2 == r.d2);
      } catch (const std::length_error &) {
        agree = false; // second oracle out of reach: not certified
      }
      out = r.vacuous ? "vacuous" : to_string(r.d2);
      val = r.vacuous ? INFINITY : to_double(r.d2);
      return agree;
    };
    double v1 = 0, v2 = 0;
    const bool c1 = eval(a, b, row.d2, v1);
    const bool c2 = eval(ad, bd, row.d2_dual, v2);
    row.certified = c1 && c2;
    double score = std::min(v1, v2);
    for (auto d : row.d1)
      score = std::min(score, d == distance_infinite ? INFINITY : double(d));
    row.score = score;
    rows.push_back(row);
  }
  return rows;
}

void write_robust_csv(std::ostream &os, const std::vector<RobustRow> &rows) {
  os << "seed,delta,ka,kb,d1_A,d1_B,d1_Adual,d1_Bdual,d2,d2_dual,certified\n";
  auto d = [](std::size_t v) {
    return v == distance_infinite ? std::string("inf") : std::to_string(v);
  };
  for (const auto &r : rows)
    os << r.seed << ',' << r.delta << ',' << r.ka << ',' << r.kb << ','
       << d(r.d1[0]) << ',' << d(r.d1[1]) << ',' << d(r.d1[2]) << ','
       << d(r.d1[3]) << ',' << r.d2 << ',' << r.d2_dual << ','
       << (r.certified ? "true" : "false") << '\n';
}

// ---------------------------------------------------------------------------

DecoderKind parse_decoder(const std::string &s) {
  if (s == "simple")
    return DecoderKind::simple;
  if (s == "queue")
    return DecoderKind::queue;
  if (s == "reconstruct")
    return DecoderKind::reconstruct;
  throw std::invalid_argument("unknown decoder '" + s +
                              "' (simple, queue, reconstruct)");
}

std::string to_string(DecoderKind k) {
  switch (k) {
  case DecoderKind::simple:
    return "simple";
  case DecoderKind::queue:
    return "queue";
  case DecoderKind::reconstruct:
    return "reconstruct";
  }
  return "?";
}

namespace {

BitVector sample_error(std::size_t n, const ChannelSpec &ch,
                       std::mt19937_64 &rng) {
  BitVector e(n);
  if (ch.model == "iid") {
    for (std::size_t i = 0; i < n; ++i)
      if (bernoulli(rng, ch.p))
        e.set(i);
    return e;
  }
  if (ch.w > n)
    throw std::invalid_argument("channel.w exceeds the number of bits");
  // partial Fisher-Yates for w distinct positions
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i)
    idx[i] = i;
  for (std::size_t i = 0; i < ch.w; ++i) {
    std::size_t j = i + uniform_below(rng, n - i);
    std::swap(idx[i], idx[j]);
    e.set(idx[i]);
  }
  return e;
}

} // namespace

std::vector<TrialRow> simulate(const Instance &inst, const ChannelSpec &ch,
                               DecoderKind kind, std::size_t threads,
                               bool timing) {
  const ChainComplexX &x = *inst.x;
  DecoderOptions opt;
  opt.cap = inst.config.caps.flip;
  std::unique_ptr<FlipTable> table;
  std::unique_ptr<ChainComplexX> xd;
  std::unique_ptr<ReconstructDecoder> rec;
  std::unique_ptr<BoundaryTester> tester;
  if (kind == DecoderKind::reconstruct) {
    xd = std::make_unique<ChainComplexX>(dual_complex(inst.complex, inst.ca, inst.cb));
    rec = std::make_unique<ReconstructDecoder>(x, *xd, opt, true);
    tester = std::make_unique<BoundaryTester>(x, Direction::chain);
  } else {
    table = std::make_unique<FlipTable>(x, opt);
    tester = std::make_unique<BoundaryTester>(x, Direction::cochain);
  }
  std::vector<TrialRow> rows(ch.trials);
  auto run = [&](std::size_t t) {
    auto rng = derived_rng(ch.seed, t);
    TrialRow row;
    row.trial = t;
    row.decoder = kind;
    const BitVector err = sample_error(x.size(1), ch, rng);
    row.error_weight = err.weight();
    const auto t0 = std::chrono::steady_clock::now();
    if (kind == DecoderKind::reconstruct) {
      const BitVector c0 = x.boundary1(err);
      row.syndrome_weight = c0.weight();
      const ReconstructResult r = rec->decode(c0);
      row.flips_evaluated = r.dual.flips_evaluated;
      row.success = r.success && tester->contains(r.correction ^ err);
    } else {
      const BitVector c2 = x.coboundary1(err);
      row.syndrome_weight = c2.weight();
      const CoDecodeResult r = kind == DecoderKind::simple
                                   ? co_decode_simple(*table, c2)
                                   : co_decode_queue(*table, c2);
      row.flips_evaluated = r.flips_evaluated;
      row.success = r.success && tester->contains(r.correction ^ err);
    }
    const auto t1 = std::chrono::steady_clock::now();
    row.wall_ns = timing ? static_cast<std::uint64_t>(
                               std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                                   .count())
                         : 0;
    rows[t] = row;
  };
  threads = std::max<std::size_t>(1, threads);
  if (threads == 1) {
    for (std::size_t t = 0; t < ch.trials; ++t)
      run(t);
    return rows;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < ch.trials; t += threads)
          run(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto &th : pool)
    th.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return rows;
}

LinearFit linear_fit(const std::vector<double> &x, const std::vector<double> &y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit: need at least two paired points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  if (sxx == 0)
    return f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

SimulationSummary summarize(const std::vector<TrialRow> &rows) {
  SimulationSummary s;
  s.trials = rows.size();
  std::vector<double> xs, ys;
  double flips = 0;
  for (const auto &r : rows) {
    s.successes += r.success;
    flips += static_cast<double>(r.flips_evaluated);
    xs.push_back(static_cast<double>(r.syndrome_weight));
    ys.push_back(static_cast<double>(r.flips_evaluated));
  }
  if (s.trials) {
    s.success_rate = static_cast<double>(s.successes) / s.trials;
    s.mean_flips = flips / s.trials;
  }
  if (rows.size() >= 2) {
    const LinearFit f = linear_fit(xs, ys);
    s.slope = f.slope;
    s.intercept = f.intercept;
    s.r2 = f.r2;
  }
  return s;
}

void write_trials_csv(std::ostream &os, const std::vector<TrialRow> &rows) {
  os << "trial,error_weight,syndrome_weight,decoder,success,flips_evaluated,wall_ns\n";
  for (const auto &r : rows)
    os << r.trial << ',' << r.error_weight << ',' << r.syndrome_weight << ','
       << to_string(r.decoder) << ',' << (r.success ? "true" : "false") << ','
       << r.flips_evaluated << ',' << r.wall_ns << '\n';
}

} // namespace lrq
