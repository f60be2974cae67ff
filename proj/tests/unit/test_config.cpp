#include <algorithm>
#include <string>

#include "doctest.h"
#include "fbl/config.hpp"
#include "fbl/errors.hpp"

using namespace fbl;

namespace {

std::vector<std::string> violations(const std::string& text,
                                    const std::vector<std::pair<std::string, std::string>>& overrides = {}) {
  try {
    parse_config(text, overrides);
  } catch (const ConfigError& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<std::string>& list, const std::string& needle) {
  return std::any_of(list.begin(), list.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

std::string entry(const RunConfig& cfg, const std::string& key) {
  for (const auto& [k, v] : cfg.entries)
    if (k == key) return v;
  return "<missing>";
}

}  // namespace

TEST_CASE("defaults are filled and echoed") {
  const auto cfg = parse_config("command = norm\n");
  CHECK(cfg.command == Command::norm);
  CHECK(cfg.grid.n() == 32);
  CHECK(cfg.output.stem == "norm");
  CHECK(entry(cfg, "grid.n") == "32");
  CHECK(entry(cfg, "exponent.p.base") == "3");
  CHECK(std::is_sorted(cfg.entries.begin(), cfg.entries.end()));
}

TEST_CASE("comments, blank lines and spacing are ignored") {
  const auto a = parse_config("command = norm\ngrid.n = 16\n");
  const auto b = parse_config("# header\n\n   command=norm   # trailing\ngrid.n =16\n");
  CHECK(a.canonical() == b.canonical());
  CHECK(a.hash() == b.hash());
  CHECK(a.hash().size() == 16);
}

TEST_CASE("different settings hash differently") {
  CHECK(parse_config("command = norm\nseed = 1\n").hash() != parse_config("command = norm\nseed = 2\n").hash());
}

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("all violations are reported together") {
  const auto v = violations(
      "command = solve-ns\n"
      "grid.n = 24\n"
      "bogus.key = 1\n"
      "seed = 3\n"
      "seed = 4\n"
      "norm.kind = sobolev\n"
      "exponent.p.kind = constant\n"
      "exponent.p.base = 7\n");
  CHECK(v.size() >= 5);
  CHECK(mentions(v, "grid.n: must be a power of two"));
  CHECK(mentions(v, "line 3: unknown key 'bogus.key'"));
  CHECK(mentions(v, "duplicate key 'seed' on lines 4"));
  CHECK(mentions(v, "sobolev"));
  CHECK(mentions(v, "2 <= p- <= p+ <= 6"));
}

TEST_CASE("exponent upper limit for the solvers") {
  CHECK(violations("command = solve-ks\nexponent.p.kind = smooth\nexponent.p.base = 5\nexponent.p.amplitude = 2\n")
            .size() == 1);
  CHECK(violations("command = solve-ks\nexponent.p.kind = smooth\nexponent.p.base = 4\nexponent.p.amplitude = 2\n")
            .empty());
}

TEST_CASE("missing command") {
  CHECK(mentions(violations("seed = 1\n"), "command"));
  CHECK(mentions(violations("command = launch\n"), "command"));
}

TEST_CASE("malformed lines and numbers") {
  CHECK(mentions(violations("command = norm\njust words\n"), "line 2: expected 'key = value'"));
  CHECK(mentions(violations("command = norm\nseed = abc\n"), "seed"));
  CHECK(mentions(violations("command = norm\nnorm.r = 1.5x\n"), "norm.r"));
}

TEST_CASE("command-line overrides") {
  const auto cfg = parse_config("command = verify\n", {{"estimate.id", "embedding"}});
  CHECK(cfg.estimate == "embedding");
  CHECK(cfg.estimate_parameter("p2") == 4.0);
  CHECK(entry(cfg, "estimate.id") == "embedding");
  // Agreeing values are fine, contradicting ones are not.
  CHECK(violations("command = verify\nestimate.id = holder\n", {{"estimate.id", "holder"}}).empty());
  CHECK(mentions(violations("command = verify\nestimate.id = holder\n", {{"estimate.id", "embedding"}}),
                 "command line"));
}

TEST_CASE("estimate parameters follow the estimate id") {
  const auto cfg = parse_config("command = verify\nestimate.id = product-2.9\nestimate.s = 3\n");
  CHECK(cfg.estimate_parameter("s") == 3.0);
  CHECK(cfg.estimate_parameter("p") == 6.0);
  CHECK(entry(cfg, "estimate.theta") == "<missing>");
  CHECK(mentions(violations("command = verify\n"), "estimate.id"));
  CHECK(mentions(violations("command = verify\nestimate.id = fourier\n"), "fourier"));
}

TEST_CASE("solver settings") {
  const auto cfg = parse_config(
      "command = solve-ks\n"
      "grid.n = 16\n"
      "initial.kind = bump-pair\n"
      "initial.target = 0.5\n"
      "solver.eta = 1\n"
      "forcing.enabled = true\n"
      "forcing.envelope = exp-decay\n");
  CHECK(cfg.solver.system == System::keller_segel);
  CHECK(cfg.initial.kind == InitialKind::bump_pair);
  CHECK(cfg.target_norm == 0.5);
  CHECK(cfg.solver.picard.eta == 1.0);
  REQUIRE(cfg.forcing.has_value());
  CHECK(cfg.forcing->envelope == Envelope::exp_decay);
  CHECK(cfg.forcing->seed == cfg.seed + 1);
  CHECK(mentions(violations("command = solve-ns\ninitial.kind = bump-pair\n"), "bump-pair"));
}

TEST_CASE("mode lists") {
  const auto cfg = parse_config("command = solve-ns\ninitial.kind = mode\ninitial.modes = 1,0,0; 0,2,1\n");
  REQUIRE(cfg.initial.modes.size() == 2);
  CHECK(cfg.initial.modes[1] == Freq{0, 2, 1});
  CHECK(mentions(violations("command = solve-ns\ninitial.modes = 1,0\n"), "initial.modes"));
}

TEST_CASE("every documented key parses with its default") {
  std::string text = "command = solve-ns\n";
  const auto keys = config_keys();
  CHECK(keys.size() > 50);
  for (const auto& [k, v] : keys)
    if (k != "command" && !v.empty()) text += k + " = " + v + "\n";
  const auto explicit_defaults = parse_config(text);
  CHECK(explicit_defaults.solver.picard.eta == parse_config("command = solve-ns\n").solver.picard.eta);
}

TEST_CASE("output directory does not enter the hash") {
  const auto a = parse_config("command = norm\n", {{"output.dir", "/tmp/a"}});
  const auto b = parse_config("command = norm\n", {{"output.dir", "/tmp/b"}});
  CHECK(a.output.dir == "/tmp/a");
  CHECK(a.hash() == b.hash());
  CHECK(entry(a, "output.dir") == "<missing>");
}
