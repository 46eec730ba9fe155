#include "oracles.h"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <sstream>
#include <string>

using namespace lrq;

namespace {

std::string error_of(const json &doc) {
  try {
    build_instance(parse_config(doc));
  } catch (const std::invalid_argument &e) {
    return e.what();
  }
  return {};
}

std::string trials_csv(const Instance &inst, const ChannelSpec &ch, DecoderKind kind,
                       std::size_t threads) {
  std::ostringstream os;
  write_trials_csv(os, simulate(inst, ch, kind, threads, false));
  return os.str();
}

} // namespace

TEST_CASE("schema errors name the offending field") {
  const json good = oracle::cyclic_config(6, {1, -1}, {2, -2}, {{"repetition", 2}}, {{"repetition", 2}});
  CHECK(error_of(good).empty());

  json no_group = good;
  no_group.erase("group");
  CHECK(error_of(no_group).find("group") != std::string::npos);

  json bad_n = good;
  bad_n["group"]["n"] = "six";
  CHECK(error_of(bad_n).find("group.n") != std::string::npos);

  json bad_model = good;
  bad_model["channel"] = {{"model", "erasure"}};
  CHECK(error_of(bad_model).find("channel.model") != std::string::npos);

  json no_b = good;
  no_b["codes"].erase("B");
  CHECK(error_of(no_b).find("codes.B") != std::string::npos);
}

TEST_CASE("generator sets are validated at build time") {
  // not inverse-closed in Z_6
  CHECK_FALSE(error_of(oracle::cyclic_config(6, {1, 2}, {1, -1}, {{"repetition", 2}},
                                             {{"repetition", 2}}))
                  .empty());
  // |A| != |B|
  CHECK_FALSE(error_of(oracle::cyclic_config(6, {1, -1}, {1, -1, 3}, {{"repetition", 2}},
                                             {{"repetition", 3}}))
                  .empty());
  // local code length must equal Delta
  CHECK_FALSE(error_of(oracle::cyclic_config(6, {1, -1}, {1, -1}, {{"repetition", 3}},
                                             {{"repetition", 2}}))
                  .empty());
}

TEST_CASE("all built-in checks pass on a small instance") {
  const Instance inst = build_instance(parse_config(
      oracle::cyclic_config(5, {1, 4}, {2, 3}, {{"repetition", 2}}, {{"repetition", 2}})));
  for (const CheckItem &c : run_checks(inst, 1, 200)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("a flipped d2 bit is localised to its face and an incident vertex") {
  const Instance inst = build_instance(parse_config(
      oracle::cyclic_config(8, {1, -1}, {3, -3}, {{"H", {"11"}}}, {{"H", {"11"}}})));
  const ChainComplexX &x = *inst.x;
  std::mt19937_64 rng(41);
  const std::size_t vb = x.ma() * x.mb();
  for (int it = 0; it < 25; ++it) {
    BitMatrix d2 = x.d2();
    const std::size_t r = uniform_below(rng, d2.rows()), f = uniform_below(rng, d2.cols());
    d2.flip(r, f);
    const auto fault = chain_condition_fault(x.d1(), d2, vb);
    if (x.d1().column(r).is_zero()) {
      CHECK_FALSE(fault);
      continue;
    }
    REQUIRE(fault);
    CHECK(fault->face == f);
    CHECK(x.d1().get(fault->row, r));
    CHECK(fault->vertex == fault->row / vb);
    const auto checks = run_checks(inst, 1, 50, nullptr, &d2);
    const auto chain = std::find_if(checks.begin(), checks.end(),
                                    [](const CheckItem &c) { return c.name == "chain_condition"; });
    REQUIRE(chain != checks.end());
    CHECK_FALSE(chain->pass);
    CHECK(chain->detail.find("face " + std::to_string(f)) != std::string::npos);
  }
  CHECK_FALSE(chain_condition_fault(x.d1(), x.d2(), vb));
}

TEST_CASE("simulation output is independent of threads and repeatable") {
  const Instance inst = build_instance(parse_config(oracle::decodable_config()));
  ChannelSpec ch;
  ch.model = "iid";
  ch.p = 0.003;
  ch.trials = 40;
  ch.seed = 9;
  const std::string a = trials_csv(inst, ch, DecoderKind::queue, 1);
  CHECK(a == trials_csv(inst, ch, DecoderKind::queue, 1));
  CHECK(a == trials_csv(inst, ch, DecoderKind::queue, 3));
  ch.seed = 10;
  CHECK(a != trials_csv(inst, ch, DecoderKind::queue, 1));
}

TEST_CASE("noiseless simulation succeeds without flips") {
  const Instance inst = build_instance(parse_config(oracle::decodable_config()));
  ChannelSpec ch;
  ch.model = "iid";
  ch.p = 0;
  ch.trials = 25;
  for (DecoderKind kind : {DecoderKind::simple, DecoderKind::queue}) {
    const auto rows = simulate(inst, ch, kind, 1, false);
    const SimulationSummary s = summarize(rows);
    CHECK(s.trials == 25);
    CHECK(s.success_rate == 1.0);
    for (const auto &r : rows) {
      CHECK(r.syndrome_weight == 0);
      CHECK(r.flips_evaluated == 0);
    }
  }
  CHECK_THROWS_AS(parse_decoder("belief-propagation"), std::invalid_argument);
  CHECK(to_string(parse_decoder("reconstruct")) == "reconstruct");
}

TEST_CASE("least-squares fit recovers a line") {
  const LinearFit f = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(f.slope == doctest::Approx(2));
  CHECK(f.intercept == doctest::Approx(1));
  CHECK(f.r2 == doctest::Approx(1));
}

TEST_CASE("manifest reports the code parameters") {
  const Instance inst = build_instance(parse_config(
      oracle::cyclic_config(5, {1, 4}, {2, 3}, {{"repetition", 2}}, {{"repetition", 2}})));
  const json m = manifest_json(inst);
  CHECK(m.dump().find("\"k\"") != std::string::npos);
}
