#pragma once

// Run configuration (JSON), instance assembly and the batch routines behind
// the command-line tool: checks, robust-code search and decoding trials.

#include "lrq/complex.h"
#include "lrq/decoder.h"
#include "lrq/group_graph.h"
#include "lrq/linear_code.h"
#include "lrq/qcode.h"

#include <json.hpp>

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lrq {

using json = nlohmann::json;

struct ChannelSpec {
  std::string model = "fixed-weight"; // or "iid"
  double p = 0;
  std::size_t w = 1;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

struct Caps {
  std::uint64_t distance = std::uint64_t{1} << 22;
  std::uint64_t flip = std::uint64_t{1} << 20;
  std::uint64_t robustness = std::uint64_t{1} << 30;
};

/// Parsed configuration. `raw` keeps the document for the manifest.
struct RunConfig {
  json raw;
  Caps caps;
  ChannelSpec channel;
};

/// Schema errors throw std::invalid_argument naming the offending field.
RunConfig parse_config(const json &doc);
RunConfig load_config(const std::string &path);

struct Instance {
  RunConfig config;
  FiniteGroup group;
  GeneratorSet A, B;
  LinearCode ca, cb;
  std::shared_ptr<const LeftRightComplex> complex;
  std::shared_ptr<const ChainComplexX> x;
};

Instance build_instance(const RunConfig &cfg);

/// Everything the manifest reports; spectral data is optional because the
/// dense eigensolve is skipped above a size limit.
json manifest_json(const Instance &inst, bool with_spectrum = true);
/// Writes manifest.json, hx/hz in alist and MatrixMarket form into dir.
void write_exports(const Instance &inst, const std::string &dir);

struct ChainFault {
  std::size_t face = 0, vertex = 0, row = 0;
};
/// First nonzero entry of d1 * d2, located as (face, vertex).
std::optional<ChainFault> chain_condition_fault(const BitMatrix &d1,
                                                const BitMatrix &d2,
                                                std::size_t vertex_block);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};
/// Chain condition, LDPC bounds, dimension/rate, local exactness, slot
/// identification, Cayley regularity, mixing and the M0/M1 forms.
/// `d1`, `d2` override the built matrices (e.g. read back from files).
std::vector<CheckItem> run_checks(const Instance &inst, std::uint64_t seed,
                                  std::size_t samples,
                                  const BitMatrix *d1 = nullptr,
                                  const BitMatrix *d2 = nullptr);

// ---------------------------------------------------------------------------

struct RobustRow {
  std::uint64_t seed = 0;
  std::size_t delta = 0, ka = 0, kb = 0;
  std::size_t d1[4] = {0, 0, 0, 0}; // A, B, A dual, B dual (SIZE_MAX: zero code)
  std::string d2, d2_dual;          // rational or "vacuous"
  bool certified = false;           // agreement oracle equal on both pairs
  double score = 0;                 // min of the six quantities
};
/// Row i samples a pair from mt19937_64(seed + i).
std::vector<RobustRow> robust_search(std::size_t delta, std::size_t ka,
                                     std::size_t kb, std::size_t samples,
                                     std::uint64_t seed, std::uint64_t cap);
void write_robust_csv(std::ostream &os, const std::vector<RobustRow> &rows);

// ---------------------------------------------------------------------------

enum class DecoderKind { simple, queue, reconstruct };
DecoderKind parse_decoder(const std::string &s);
std::string to_string(DecoderKind k);

struct TrialRow {
  std::size_t trial = 0, error_weight = 0, syndrome_weight = 0;
  DecoderKind decoder = DecoderKind::queue;
  bool success = false;
  std::size_t flips_evaluated = 0;
  std::uint64_t wall_ns = 0;
};

struct SimulationSummary {
  std::size_t trials = 0, successes = 0;
  double success_rate = 0, mean_flips = 0;
  double slope = 0, intercept = 0, r2 = 0; // flips vs syndrome weight
};

/// Trial t uses derived_rng(channel.seed, t); results do not depend on the
/// thread count.
std::vector<TrialRow> simulate(const Instance &inst, const ChannelSpec &ch,
                               DecoderKind kind, std::size_t threads,
                               bool timing = true);
SimulationSummary summarize(const std::vector<TrialRow> &rows);
void write_trials_csv(std::ostream &os, const std::vector<TrialRow> &rows);

/// Least-squares fit y = slope x + intercept with R^2.
struct LinearFit {
  double slope = 0, intercept = 0, r2 = 0;
};
LinearFit linear_fit(const std::vector<double> &x, const std::vector<double> &y);

} // namespace lrq
