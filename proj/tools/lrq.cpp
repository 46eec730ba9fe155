// Command-line front end: build, check, robust-search, simulate, distance,
// expansion. Tabular output is CSV, everything else JSON.

#include "lrq/instance.h"
#include "lrq/radii.h"
#include "lrq/tensor.h"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace lrq;

namespace {

std::ostream &open_out(const std::string &path, std::ofstream &file) {
  if (path.empty() || path == "-")
    return std::cout;
  file.open(path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot write " + path);
  return file;
}

Rational parse_rational(const std::string &s) {
  // accepts "p/q", integers and decimals
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos)
    return Rational(std::stod(s));
  return Rational(s);
}

int cmd_build(const std::string &config, const std::string &out) {
  Instance inst = build_instance(load_config(config));
  if (out.empty()) {
    std::cout << manifest_json(inst).dump(2) << "\n";
  } else {
    write_exports(inst, out);
    std::cerr << "wrote " << out << "/manifest.json and matrix exports\n";
  }
  return 0;
}

int cmd_check(const std::string &config, const std::string &from,
              std::uint64_t seed, std::size_t samples) {
  Instance inst = build_instance(load_config(config));
  BitMatrix d1, d2;
  const BitMatrix *p1 = nullptr, *p2 = nullptr;
  if (!from.empty()) {
    std::ifstream hx(std::filesystem::path(from) / "hx.alist");
    std::ifstream hz(std::filesystem::path(from) / "hz.alist");
    if (!hx || !hz)
      throw std::runtime_error("cannot read hx.alist / hz.alist in " + from);
    d1 = read_alist(hx);
    d2 = read_alist(hz).transpose();
    p1 = &d1;
    p2 = &d2;
  }
  const auto items = run_checks(inst, seed, samples, p1, p2);
  json rep = json::array();
  bool all = true;
  for (const auto &it : items) {
    rep.push_back({{"check", it.name}, {"pass", it.pass}, {"detail", it.detail}});
    all = all && it.pass;
  }
  std::cout << json{{"all_pass", all}, {"checks", rep}}.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_robust(std::size_t delta, std::size_t ka, std::size_t kb,
               std::size_t samples, std::uint64_t seed, std::uint64_t cap,
               const std::string &out) {
  const auto rows = robust_search(delta, ka, kb, samples, seed, cap);
  std::ofstream f;
  write_robust_csv(open_out(out, f), rows);
  const RobustRow *best = nullptr;
  for (const auto &r : rows)
    if (!best || r.score > best->score)
      best = &r;
  if (best)
    std::cerr << "best: seed " << best->seed << ", score " << best->score
              << (best->certified ? "" : " (not certified)") << "\n";
  return 0;
}

int cmd_simulate(const std::string &config, const std::string &decoder,
                 std::optional<std::size_t> trials, std::optional<std::uint64_t> seed,
                 std::optional<std::size_t> w, std::optional<double> p,
                 std::size_t threads, bool timing, const std::string &out) {
  Instance inst = build_instance(load_config(config));
  ChannelSpec ch = inst.config.channel;
  if (trials)
    ch.trials = *trials;
  if (seed)
    ch.seed = *seed;
  if (w) {
    ch.model = "fixed-weight";
    ch.w = *w;
  }
  if (p) {
    ch.model = "iid";
    ch.p = *p;
  }
  const auto rows = simulate(inst, ch, parse_decoder(decoder), threads, timing);
  std::ofstream f;
  write_trials_csv(open_out(out, f), rows);
  const auto s = summarize(rows);
  std::cerr << json{{"trials", s.trials},         {"successes", s.successes},
                    {"success_rate", s.success_rate}, {"mean_flips", s.mean_flips},
                    {"slope", s.slope},           {"intercept", s.intercept},
                    {"r2", s.r2}}
                   .dump()
            << "\n";
  return 0;
}

json distance_value(const std::optional<DistanceValue> &d) {
  if (!d)
    return nullptr;
  return {{"hamming", d->hamming}, {"cell", d->cell},
          {"witness_hamming", d->witness_hamming.to_string()},
          {"witness_cell", d->witness_cell.to_string()}};
}

int cmd_distance(const std::string &config, std::optional<std::uint64_t> cap) {
  Instance inst = build_instance(load_config(config));
  const QuantumDistance q =
      quantum_distance_exact(*inst.x, cap.value_or(inst.config.caps.distance));
  std::cout << json{{"k", q.k}, {"dx", distance_value(q.dx)}, {"dz", distance_value(q.dz)}}
                   .dump(2)
            << "\n";
  return 0;
}

int cmd_expansion(const std::string &config, std::uint64_t seed,
                  std::size_t samples, std::size_t max_cells,
                  const std::string &lambda_s, const std::string &d1_s,
                  const std::string &d2_s) {
  Instance inst = build_instance(load_config(config));
  // the co-expansion statement is about the dual local codes
  const LinearCode ad = dual(inst.ca), bd = dual(inst.cb);
  Rational lambda, d1, d2;
  if (lambda_s.empty()) {
    const auto ra = spectral_report(cayley_graph(inst.group, inst.A));
    const auto rb = spectral_report(cayley_graph(inst.group, inst.B));
    lambda = Rational(std::max(ra.lambda_certified, rb.lambda_certified));
  } else {
    lambda = parse_rational(lambda_s);
  }
  if (d1_s.empty()) {
    const std::size_t a = distance_exact(ad), b = distance_exact(bd);
    d1 = Rational(std::min(a, b) == distance_infinite ? inst.A.size() : std::min(a, b));
  } else {
    d1 = parse_rational(d1_s);
  }
  if (d2_s.empty()) {
    const auto r = robustness_exact(ad, bd, inst.config.caps.robustness);
    d2 = r.vacuous ? Rational(0) : r.d2;
  } else {
    d2 = parse_rational(d2_s);
  }
  std::mt19937_64 rng(seed);
  const auto rep = expansion_probe(*inst.x, lambda, d1, d2, samples, max_cells, rng);
  std::cout << json{{"lambda", to_string(lambda)},
                    {"d1", to_string(d1)},
                    {"d2", to_string(d2)},
                    {"eta", to_string(rep.radii.eta)},
                    {"eta_prime", to_string(rep.radii.eta_prime)},
                    {"kappa", to_string(rep.radii.kappa)},
                    {"applicable", rep.radii.applicable()},
                    {"guaranteed_radius_cells",
                     to_string(guaranteed_radius(rep.radii, inst.group.order))},
                    {"samples", rep.samples},
                    {"nonzero_after_reduce", rep.nonzero_after_reduce},
                    {"violations", rep.violations},
                    {"worst_slack", rep.worst_slack}}
                   .dump(2)
            << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantum LDPC codes on left-right Cayley complexes"};
  app.require_subcommand(1);

  std::string config, out, from, decoder = "queue";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> seed_opt, cap_opt;
  std::uint64_t cap = std::uint64_t{1} << 30;
  std::size_t samples = 500, threads = 1, max_cells = 4;
  std::size_t delta = 4, ka = 2, kb = 2;
  std::optional<std::size_t> trials, weight;
  std::optional<double> prob;
  bool no_timing = false;
  std::string lambda_s, d1_s, d2_s;

  auto *build = app.add_subcommand("build", "build an instance and export matrices");
  build->add_option("--config", config, "instance config (JSON)")->required();
  build->add_option("--out", out, "output directory (manifest to stdout if omitted)");

  auto *check = app.add_subcommand("check", "run the validity suites");
  check->add_option("--config", config)->required();
  check->add_option("--from", from, "directory with hx.alist/hz.alist to check instead");
  check->add_option("--seed", seed);
  check->add_option("--samples", samples, "random subsets per mixing test");

  auto *robust = app.add_subcommand("robust-search", "sample code pairs, exact robustness");
  robust->add_option("--delta", delta)->check(CLI::Range(1, 8));
  robust->add_option("--ka", ka);
  robust->add_option("--kb", kb);
  robust->add_option("--samples", samples);
  robust->add_option("--seed", seed);
  robust->add_option("--cap", cap);
  robust->add_option("--out", out, "CSV path (stdout if omitted)");

  auto *sim = app.add_subcommand("simulate", "decoding trials");
  sim->add_option("--config", config)->required();
  sim->add_option("--decoder", decoder)
      ->check(CLI::IsMember({"simple", "queue", "reconstruct"}));
  sim->add_option("--trials", trials);
  sim->add_option("--seed", seed_opt);
  sim->add_option("--weight", weight, "fixed error weight (overrides channel)");
  sim->add_option("--p", prob, "iid flip probability (overrides channel)");
  sim->add_option("--threads", threads);
  sim->add_flag("--no-timing", no_timing, "write wall_ns = 0 for byte-stable output");
  sim->add_option("--out", out);

  auto *dist = app.add_subcommand("distance", "exact dx, dz with witnesses");
  dist->add_option("--config", config)->required();
  dist->add_option("--cap", cap_opt);

  auto *exp = app.add_subcommand("expansion", "co-expansion probe and decoding radii");
  exp->add_option("--config", config)->required();
  exp->add_option("--seed", seed);
  exp->add_option("--samples", samples);
  exp->add_option("--max-cells", max_cells);
  exp->add_option("--lambda", lambda_s, "override lambda (e.g. 1/2)");
  exp->add_option("--d1", d1_s, "override d1");
  exp->add_option("--d2", d2_s, "override d2");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*build)
      return cmd_build(config, out);
    if (*check)
      return cmd_check(config, from, seed, samples);
    if (*robust)
      return cmd_robust(delta, ka, kb, samples, seed, cap, out);
    if (*sim)
      return cmd_simulate(config, decoder, trials, seed_opt, weight, prob, threads,
                          !no_timing, out);
    if (*dist)
      return cmd_distance(config, cap_opt);
    if (*exp)
      return cmd_expansion(config, seed, samples, max_cells, lambda_s, d1_s, d2_s);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
