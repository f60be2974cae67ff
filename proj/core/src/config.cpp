#include "fbl/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "fbl/errors.hpp"
#include "format.hpp"

namespace fbl {
namespace {

enum class Type { integer, real, real_or_inf, boolean, text, choice, modes, reals };

struct Key {
  std::string name;
  std::string fallback;
  Type type;
  std::vector<std::string> choices;
};

const std::vector<std::string> kKinds{"constant", "smooth", "piecewise"};
const std::vector<std::string> kProfiles{"bump", "trig", "step"};

void add_recipe(std::vector<Key>& keys, const std::string& prefix, const char* kind,
                const char* base, const char* amplitude, const char* profile) {
  keys.push_back({prefix + ".kind", kind, Type::choice, kKinds});
  keys.push_back({prefix + ".base", base, Type::real, {}});
  keys.push_back({prefix + ".amplitude", amplitude, Type::real, {}});
  keys.push_back({prefix + ".profile", profile, Type::choice, kProfiles});
}

const std::vector<std::string> kEstimateParameters{"k", "p",  "q",  "lambda", "s",  "s1",   "s2",
                                                   "p1", "p2", "r", "r1",    "r2", "theta", "bound"};

/// Parameters each estimate reads, with their defaults.
const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& estimate_defaults() {
  static const std::map<std::string, std::vector<std::pair<std::string, std::string>>> table{
      {"bernstein-i", {{"k", "1"}, {"p", "4"}, {"q", "2"}, {"lambda", "4"}}},
      {"bernstein-ii", {{"k", "1"}, {"p", "4"}, {"q", "2"}, {"lambda", "4"}}},
      {"bernstein-iii", {{"k", "1"}, {"p", "4"}, {"q", "2"}, {"lambda", "4"}}},
      {"embedding", {{"s", "1"}, {"p1", "2"}, {"p2", "4"}, {"r1", "1"}, {"r2", "2"}}},
      {"gradient-equivalence", {{"s", "1"}, {"p", "2"}, {"r", "1"}}},
      {"interpolation", {{"s1", "0.5"}, {"s2", "1.5"}, {"theta", "0.5"}, {"p", "2"}, {"r", "1"}}},
      {"product-2.9", {{"s", "2.5"}, {"p", "6"}, {"p1", "2"}, {"p2", "1.5"}}},
      {"product-2.10", {{"s1", "2.5"}, {"s2", "0.5"}, {"p1", "2"}, {"p2", "2"}}},
      {"holder", {{"bound", "4"}}},
      {"heat-3.2", {}},
  };
  return table;
}

const std::vector<Key>& schema() {
  static const std::vector<Key> keys = [] {
    std::vector<Key> k;
    k.push_back({"command", "", Type::choice,
                 {"norm", "decompose", "verify", "heat", "solve-ns", "solve-ks", "sweep"}});
    k.push_back({"seed", "1", Type::integer, {}});
    k.push_back({"grid.n", "32", Type::integer, {}});
    k.push_back({"grid.dims", "3", Type::integer, {}});
    k.push_back({"partition.order", "4", Type::integer, {}});
    k.push_back({"output.dir", ".", Type::text, {}});
    k.push_back({"output.stem", "", Type::text, {}});
    k.push_back({"output.snapshot_times", "", Type::reals, {}});
    k.push_back({"input.snapshot", "", Type::text, {}});
    k.push_back({"field.components", "1", Type::integer, {}});
    k.push_back({"field.inner", "2", Type::real, {}});
    k.push_back({"field.outer", "6", Type::real, {}});
    k.push_back({"field.slope", "0", Type::real, {}});
    k.push_back({"field.solenoidal", "false", Type::boolean, {}});
    k.push_back({"norm.kind", "fourier-besov", Type::choice,
                 {"fourier-besov", "variable-lebesgue", "fourier-lebesgue"}});
    k.push_back({"norm.r", "1", Type::real_or_inf, {}});
    add_recipe(k, "exponent.p", "smooth", "3", "0.5", "bump");
    add_recipe(k, "exponent.s", "constant", "0.5", "0", "bump");
    k.push_back({"time.horizon", "1", Type::real, {}});
    k.push_back({"time.intervals", "128", Type::integer, {}});
    k.push_back({"time.spacing", "geometric", Type::choice, {"uniform", "geometric"}});
    k.push_back({"time.grading", "8", Type::real, {}});
    k.push_back({"trials.calibration", "50", Type::integer, {}});
    k.push_back({"trials.holdout", "50", Type::integer, {}});
    k.push_back({"trials.safety", "2", Type::real, {}});
    k.push_back({"trials.slope", "2", Type::real, {}});
    std::vector<std::string> ids{""};
    for (const auto& [id, params] : estimate_defaults()) ids.push_back(id);
    k.push_back({"estimate.id", "", Type::choice, ids});
    for (const auto& p : kEstimateParameters)
      k.push_back({"estimate." + p, "", p == "k" ? Type::integer : Type::real_or_inf, {}});
    add_recipe(k, "holder.p1", "smooth", "4", "1", "bump");
    add_recipe(k, "holder.p2", "smooth", "4", "1", "trig");
    add_recipe(k, "heat.s", "constant", "0.5", "0", "bump");
    add_recipe(k, "heat.p", "smooth", "4", "1", "bump");
    k.push_back({"heat.r", "1", Type::real_or_inf, {}});
    k.push_back({"heat.rho", "1", Type::real_or_inf, {}});
    k.push_back({"heat.rho1", "2", Type::real_or_inf, {}});
    k.push_back({"heat.forcing", "true", Type::boolean, {}});
    k.push_back({"solver.rho", "2", Type::real_or_inf, {}});
    k.push_back({"solver.eta", "0.1", Type::real, {}});
    k.push_back({"solver.max_iterations", "50", Type::integer, {}});
    k.push_back({"solver.tolerance", "1e-10", Type::real, {}});
    k.push_back({"solver.dealias", "false", Type::boolean, {}});
    k.push_back({"solver.c_fit", "0", Type::real, {}});
    k.push_back({"solver.calibration_trials", "6", Type::integer, {}});
    k.push_back({"initial.kind", "shell", Type::choice,
                 {"shell", "mode", "zero", "bump-pair", "taylor-green"}});
    k.push_back({"initial.inner", "2", Type::real, {}});
    k.push_back({"initial.outer", "4", Type::real, {}});
    k.push_back({"initial.slope", "0", Type::real, {}});
    k.push_back({"initial.modes", "1,0,0", Type::modes, {}});
    k.push_back({"initial.amplitude", "1", Type::real, {}});
    k.push_back({"initial.target", "0", Type::real, {}});
    k.push_back({"forcing.enabled", "false", Type::boolean, {}});
    k.push_back({"forcing.kind", "shell", Type::choice, {"shell", "mode"}});
    k.push_back({"forcing.modes", "1,0,0", Type::modes, {}});
    k.push_back({"forcing.inner", "1", Type::real, {}});
    k.push_back({"forcing.outer", "3", Type::real, {}});
    k.push_back({"forcing.amplitude", "1", Type::real, {}});
    k.push_back({"forcing.envelope", "constant", Type::choice, {"constant", "exp-decay"}});
    k.push_back({"forcing.rate", "1", Type::real, {}});
    k.push_back({"sweep.system", "navier-stokes", Type::choice, {"navier-stokes", "keller-segel"}});
    k.push_back({"sweep.trials", "6", Type::integer, {}});
    return k;
  }();
  return keys;
}

const Key* find_key(const std::string& name) {
  for (const auto& k : schema())
    if (k.name == name) return &k;
  return nullptr;
}

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::optional<long long> to_integer(const std::string& s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::optional<double> to_real(const std::string& s, bool allow_inf) {
  if (allow_inf && (s == "inf" || s == "infinity")) return HUGE_VAL;
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty() || !std::isfinite(v)) return std::nullopt;
  return v;
}

/// Reads typed values and records every failure.
class Reader {
 public:
  Reader(const std::map<std::string, std::string>& values, std::vector<std::string>& errors)
      : values_(values), errors_(errors) {}

  const std::string& text(const std::string& key) const { return values_.at(key); }

  long long integer(const std::string& key, long long lo, long long hi) {
    const auto v = to_integer(text(key));
    if (!v) return fail<long long>(key, "malformed integer '" + text(key) + "'", lo);
    if (*v < lo || *v > hi)
      return fail<long long>(
          key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", lo);
    return *v;
  }

  double real(const std::string& key, bool allow_inf = false) {
    const auto v = to_real(text(key), allow_inf);
    if (!v) return fail<double>(key, "malformed number '" + text(key) + "'", 1.0);
    return *v;
  }

  double positive(const std::string& key, bool allow_inf = false) {
    const double v = real(key, allow_inf);
    if (!(v > 0.0)) return fail<double>(key, "must be positive", 1.0);
    return v;
  }

  double at_least_one(const std::string& key) {
    const double v = real(key, true);
    if (!(v >= 1.0)) return fail<double>(key, "must be at least 1", 1.0);
    return v;
  }

  bool boolean(const std::string& key) {
    const auto& t = text(key);
    if (t == "true") return true;
    if (t == "false") return false;
    return fail<bool>(key, "expected true or false, got '" + t + "'", false);
  }

  std::vector<Freq> modes(const std::string& key) {
    std::vector<Freq> out;
    for (const auto& item : split(text(key), ';')) {
      if (item.empty()) continue;
      const auto parts = split(item, ',');
      Freq xi{0, 0, 0};
      bool ok = parts.size() == 3;
      for (std::size_t i = 0; ok && i < 3; ++i) {
        const auto v = to_integer(parts[i]);
        ok = v.has_value();
        if (ok) xi[i] = static_cast<int>(*v);
      }
      if (!ok) return fail<std::vector<Freq>>(key, "malformed mode '" + item + "'", {});
      out.push_back(xi);
    }
    return out;
  }

  std::vector<double> reals(const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split(text(key), ',')) {
      if (item.empty()) continue;
      const auto v = to_real(item, false);
      if (!v) return fail<std::vector<double>>(key, "malformed number '" + item + "'", {});
      out.push_back(*v);
    }
    return out;
  }

  ExponentRecipe recipe(const std::string& prefix) {
    ExponentRecipe r;
    r.kind = *parse_exponent_kind(text(prefix + ".kind"));
    r.base = real(prefix + ".base");
    r.amplitude = real(prefix + ".amplitude");
    r.profile = *parse_profile(text(prefix + ".profile"));
    if (r.kind == ExponentKind::constant) r.amplitude = 0.0;
    return r;
  }

  ExponentRecipe integrability(const std::string& prefix) {
    ExponentRecipe r = recipe(prefix);
    if (!(r.lowest() > 1.0))
      error(prefix + ": exponent must exceed 1 everywhere (lowest value " +
            detail::format_double(r.lowest()) + ")");
    return r;
  }

  void error(std::string message) { errors_.push_back(std::move(message)); }

 private:
  template <class T>
  T fail(const std::string& key, const std::string& what, T fallback) {
    errors_.push_back(key + ": " + what);
    return fallback;
  }

  const std::map<std::string, std::string>& values_;
  std::vector<std::string>& errors_;
};

bool is_solver(Command c) {
  return c == Command::solve_ns || c == Command::solve_ks || c == Command::sweep;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::norm: return "norm";
    case Command::decompose: return "decompose";
    case Command::verify: return "verify";
    case Command::heat: return "heat";
    case Command::solve_ns: return "solve-ns";
    case Command::solve_ks: return "solve-ks";
    case Command::sweep: return "sweep";
  }
  return "norm";
}

std::optional<Command> parse_command(const std::string& s) {
  for (auto c : {Command::norm, Command::decompose, Command::verify, Command::heat,
                 Command::solve_ns, Command::solve_ks, Command::sweep})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::fourier_besov: return "fourier-besov";
    case NormKind::variable_lebesgue: return "variable-lebesgue";
    case NormKind::fourier_lebesgue: return "fourier-lebesgue";
  }
  return "fourier-besov";
}

const std::vector<std::string>& estimate_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, params] : estimate_defaults()) out.push_back(id);
    return out;
  }();
  return ids;
}

double RunConfig::estimate_parameter(const std::string& name) const {
  for (const auto& [k, v] : estimate_parameters)
    if (k == name) return v;
  throw DomainError("estimate parameter '" + name + "' is not set");
}

std::string RunConfig::canonical() const {
  std::string out;
  for (const auto& [k, v] : entries) out += k + " = " + v + "\n";
  return out;
}

std::string RunConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical())));
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::pair<std::string, std::string>> config_keys() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : schema()) out.emplace_back(k.name, k.fallback);
  return out;
}

RunConfig parse_config(std::string_view text,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::vector<std::string> errors;
  std::map<std::string, std::string> given;
  std::map<std::string, int> first_line;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(std::string_view(raw).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(line) + ": expected 'key = value'");
      continue;
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (!find_key(key)) {
      errors.push_back("line " + std::to_string(line) + ": unknown key '" + key + "'");
      continue;
    }
    if (auto it = first_line.find(key); it != first_line.end()) {
      errors.push_back("duplicate key '" + key + "' on lines " + std::to_string(it->second) +
                       " and " + std::to_string(line));
      continue;
    }
    first_line[key] = line;
    given[key] = value;
  }
  for (const auto& [key, value] : overrides) {
    if (!find_key(key)) {
      errors.push_back("unknown key '" + key + "'");
      continue;
    }
    if (auto it = given.find(key); it != given.end() && it->second != value) {
      errors.push_back(key + ": the file says '" + it->second + "' but the command line says '" +
                       value + "'");
      continue;
    }
    given[key] = value;
  }

  // Choice values are checked first: later defaults depend on them. A bad
  // choice falls back to its default so the remaining checks still run.
  std::vector<std::string> rejected;
  for (const auto& [key, value] : given) {
    const Key* k = find_key(key);
    if (k->type == Type::choice &&
        std::find(k->choices.begin(), k->choices.end(), value) == k->choices.end()) {
      std::string allowed;
      for (const auto& c : k->choices)
        if (!c.empty()) allowed += (allowed.empty() ? "" : ", ") + c;
      errors.push_back(key + ": '" + value + "' is not one of {" + allowed + "}");
      rejected.push_back(key);
    }
  }
  for (const auto& key : rejected) given.erase(key);
  if (!given.count("command")) {
    errors.push_back("command: required key is missing or invalid");
    throw ConfigError(std::move(errors));
  }

  RunConfig cfg;
  cfg.command = *parse_command(given.at("command"));
  std::map<std::string, std::string> values;
  for (const auto& k : schema()) {
    if (k.name.rfind("estimate.", 0) == 0 && k.name != "estimate.id") continue;
    values[k.name] = k.fallback;
  }
  if (values["output.stem"].empty()) values["output.stem"] = to_string(cfg.command);
  for (const auto& [key, value] : given) values[key] = value;

  const std::string id = values["estimate.id"];
  if (cfg.command == Command::verify) {
    if (id.empty()) errors.push_back("estimate.id: verify needs an estimate id");
    else
      for (const auto& [name, fallback] : estimate_defaults().at(id))
        if (!given.count("estimate." + name)) values["estimate." + name] = fallback;
  }

  Reader rd(values, errors);
  cfg.seed = static_cast<std::uint64_t>(rd.integer("seed", 0, (1LL << 62)));
  const int n = static_cast<int>(rd.integer("grid.n", 16, 512));
  const int dims = static_cast<int>(rd.integer("grid.dims", 1, 3));
  const bool power_of_two = (n & (n - 1)) == 0;
  if (!power_of_two) errors.push_back("grid.n: must be a power of two");
  cfg.grid = GridSpec(power_of_two ? n : 16, dims);
  cfg.partition_order = static_cast<int>(rd.integer("partition.order", 3, 16));

  cfg.output.dir = values["output.dir"];
  cfg.output.stem = values["output.stem"];
  if (cfg.output.stem.find('/') != std::string::npos)
    errors.push_back("output.stem: must be a plain file name");
  cfg.output.snapshot_times = rd.reals("output.snapshot_times");

  cfg.snapshot = values["input.snapshot"];
  cfg.field.components = static_cast<int>(rd.integer("field.components", 1, 3));
  cfg.field.inner = rd.real("field.inner");
  cfg.field.outer = rd.real("field.outer");
  cfg.field.slope = rd.real("field.slope");
  cfg.field.solenoidal = rd.boolean("field.solenoidal");
  cfg.field.real = true;
  if (!(cfg.field.inner >= 0.0 && cfg.field.outer > cfg.field.inner))
    errors.push_back("field: need 0 <= field.inner < field.outer");
  if (cfg.field.solenoidal && (cfg.field.components != 3 || dims != 3))
    errors.push_back("field.solenoidal: needs three components on a three-dimensional grid");
  const std::string nk = values["norm.kind"];
  cfg.norm_kind = nk == "variable-lebesgue" ? NormKind::variable_lebesgue
                  : nk == "fourier-lebesgue" ? NormKind::fourier_lebesgue
                                             : NormKind::fourier_besov;
  cfg.r = rd.at_least_one("norm.r");
  cfg.p = rd.integrability("exponent.p");
  cfg.s = rd.recipe("exponent.s");

  cfg.solver.time.horizon = rd.positive("time.horizon");
  cfg.solver.time.intervals = static_cast<int>(rd.integer("time.intervals", 1, 100000));
  cfg.solver.time.spacing =
      values["time.spacing"] == "uniform" ? TimeSpacing::uniform : TimeSpacing::geometric;
  cfg.solver.time.grading = rd.positive("time.grading");
  for (double t : cfg.output.snapshot_times)
    if (t < 0.0 || t > cfg.solver.time.horizon)
      errors.push_back("output.snapshot_times: " + detail::format_double(t) +
                       " lies outside [0, time.horizon]");

  cfg.plan.grid = cfg.grid;
  cfg.plan.seed = cfg.seed;
  cfg.plan.calibration = static_cast<std::size_t>(rd.integer("trials.calibration", 1, 100000));
  cfg.plan.holdout = static_cast<std::size_t>(rd.integer("trials.holdout", 0, 100000));
  cfg.plan.safety = rd.at_least_one("trials.safety");
  cfg.plan.slope = rd.real("trials.slope");

  cfg.estimate = id;
  for (const auto& name : kEstimateParameters) {
    const std::string key = "estimate." + name;
    if (!values.count(key)) continue;
    const double v = name == "k" ? double(rd.integer(key, 0, 8)) : rd.real(key, true);
    cfg.estimate_parameters.emplace_back(name, v);
  }
  cfg.holder_p1 = rd.integrability("holder.p1");
  cfg.holder_p2 = rd.integrability("holder.p2");

  cfg.heat.s = rd.recipe("heat.s");
  cfg.heat.p = rd.integrability("heat.p");
  cfg.heat.r = rd.at_least_one("heat.r");
  cfg.heat.rho = rd.at_least_one("heat.rho");
  cfg.heat.rho1 = rd.at_least_one("heat.rho1");
  if (cfg.heat.rho1 < cfg.heat.rho) errors.push_back("heat.rho1: must be at least heat.rho");
  cfg.heat.forcing = rd.boolean("heat.forcing");
  cfg.heat.time = cfg.solver.time;

  SolverConfig& sc = cfg.solver;
  sc.system = cfg.command == Command::solve_ks ? System::keller_segel
              : cfg.command == Command::sweep && values["sweep.system"] == "keller-segel"
                  ? System::keller_segel
                  : System::navier_stokes;
  sc.grid = cfg.grid;
  sc.p = cfg.p;
  sc.rho = rd.at_least_one("solver.rho");
  sc.bilinear.dealias = rd.boolean("solver.dealias");
  sc.picard.eta = rd.positive("solver.eta");
  sc.picard.max_iterations = static_cast<int>(rd.integer("solver.max_iterations", 1, 10000));
  sc.picard.tolerance = rd.positive("solver.tolerance");
  sc.c_fit = rd.real("solver.c_fit");
  if (sc.c_fit < 0.0) errors.push_back("solver.c_fit: must be 0 (calibrate) or positive");
  sc.calibration_trials = static_cast<int>(rd.integer("solver.calibration_trials", 1, 1000));
  sc.seed = cfg.seed;
  if (is_solver(cfg.command)) {
    if (dims != 3) errors.push_back("grid.dims: solver commands need a three-dimensional grid");
    if (cfg.p.lowest() < 2.0 || cfg.p.highest() > 6.0)
      errors.push_back("exponent.p: solver commands need 2 <= p- <= p+ <= 6 (the small-data "
                       "well-posedness window); got p- = " +
                       detail::format_double(cfg.p.lowest()) +
                       ", p+ = " + detail::format_double(cfg.p.highest()));
  }

  cfg.initial.kind = *parse_initial_kind(values["initial.kind"]);
  cfg.initial.inner = rd.real("initial.inner");
  cfg.initial.outer = rd.real("initial.outer");
  cfg.initial.slope = rd.real("initial.slope");
  cfg.initial.modes = rd.modes("initial.modes");
  cfg.initial.amplitude = rd.real("initial.amplitude");
  cfg.initial.seed = cfg.seed;
  cfg.target_norm = rd.real("initial.target");
  if (cfg.target_norm < 0.0) errors.push_back("initial.target: must be 0 (off) or positive");
  if (!(cfg.initial.inner >= 0.0 && cfg.initial.outer > cfg.initial.inner))
    errors.push_back("initial: need 0 <= initial.inner < initial.outer");
  if (cfg.command == Command::solve_ns && cfg.initial.kind == InitialKind::bump_pair)
    errors.push_back("initial.kind: bump-pair data is scalar; use it with solve-ks");
  if (cfg.command == Command::solve_ks && cfg.initial.kind == InitialKind::taylor_green)
    errors.push_back("initial.kind: taylor-green data is a velocity field; use it with solve-ns");

  ForcingSpec fs;
  fs.kind = *parse_forcing_kind(values["forcing.kind"]);
  fs.modes = rd.modes("forcing.modes");
  fs.inner = rd.real("forcing.inner");
  fs.outer = rd.real("forcing.outer");
  fs.amplitude = rd.real("forcing.amplitude");
  fs.envelope = *parse_envelope(values["forcing.envelope"]);
  fs.rate = rd.positive("forcing.rate");
  fs.seed = cfg.seed + 1;
  if (rd.boolean("forcing.enabled")) cfg.forcing = fs;
  cfg.sweep_trials = static_cast<int>(rd.integer("sweep.trials", 1, 1000));

  if (!errors.empty()) throw ConfigError(std::move(errors));
  // Where the reports go does not change what they say.
  values.erase("output.dir");
  cfg.entries.assign(values.begin(), values.end());
  return cfg;
}

}  // namespace fbl
