#include "armsrace/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "armsrace/multisurface.hpp"

namespace armsrace {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Keys recognised in a scenario document. Indexed targeting keys are
// canonicalised to `targeting.#.<field>`.
const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "model.q0", "model.h_family", "model.alpha", "model.saturation",
      "model.delta_family", "model.delta0", "model.beta", "model.k",
      "model.allow_k_above_one", "model.s", "model.V", "model.B", "model.c_d",
      "model.c_a", "model.F",
      "surfaces.N", "surfaces.rho", "surfaces.gamma", "surfaces.s",
      "dynamics.eta", "dynamics.max_steps", "dynamics.tol", "dynamics.starts",
      "dynamics.t_end", "dynamics.dt",
      "deterrence.d_fixed", "deterrence.h_simple_family",
      "deterrence.h_simple_alpha", "deterrence.h_simple_saturation",
      "deterrence.h_complex_family", "deterrence.h_complex_alpha",
      "deterrence.h_complex_saturation", "deterrence.N_a",
      "deterrence.gamma_a", "deterrence.rho",
      "deterrence.simple_attack_diluted", "deterrence.defender_best_responds",
      "targeting.count", "targeting.mode", "targeting.a", "targeting.rho",
      "targeting.d_step", "targeting.#.d", "targeting.#.s", "targeting.#.gamma",
      "targeting.#.N", "targeting.#.B", "targeting.#.V",
      "figures.beta_low", "figures.beta_mid", "figures.beta_high", "figures.a",
      "figures.d", "figures.a_max", "figures.d_max", "figures.n_points",
      "figures.traj_starts",
      "seed",
  };
  return keys;
}

// Replace a numeric path segment with '#': targeting.3.d -> targeting.#.d
std::string canonical_key(const std::string& key) {
  std::vector<std::string> parts;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    const bool numeric =
        !p.empty() && std::all_of(p.begin(), p.end(),
                                  [](unsigned char c) { return std::isdigit(c); });
    if (i) out += '.';
    out += numeric ? "#" : p;
  }
  return out;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string nearest_key(const std::string& key) {
  const std::string canon = canonical_key(key);
  std::string best;
  std::size_t best_dist = static_cast<std::size_t>(-1);
  for (const std::string& k : known_keys()) {
    const std::size_t d = edit_distance(canon, k);
    if (d < best_dist) {
      best_dist = d;
      best = k;
    }
  }
  return best;
}

struct RawEntry {
  std::string value;
  int line = 0;
};

class KeyMap {
 public:
  explicit KeyMap(std::map<std::string, RawEntry> entries)
      : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  bool has_prefix(const std::string& prefix) const {
    const auto it = entries_.lower_bound(prefix);
    return it != entries_.end() && it->first.rfind(prefix, 0) == 0;
  }

  // Typed accessors; every failure names the key.
  double number(const std::string& key) const {
    const std::string& text = raw(key);
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v)) {
      throw ValidationError("key '" + key + "': expected a finite number, got '" +
                            text + "'");
    }
    return v;
  }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  long integer(const std::string& key) const {
    const double v = number(key);
    if (v != std::floor(v) || std::fabs(v) > 9e15) {
      throw ValidationError("key '" + key + "': expected an integer");
    }
    return static_cast<long>(v);
  }

  long integer_or(const std::string& key, long fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  bool flag(const std::string& key) const {
    const std::string& text = raw(key);
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ValidationError("key '" + key + "': expected true/false, got '" +
                          text + "'");
  }

  bool flag_or(const std::string& key, bool fallback) const {
    return has(key) ? flag(key) : fallback;
  }

  const std::string& raw(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ValidationError("missing required key '" + key + "'");
    }
    return it->second.value;
  }

  std::string raw_or(const std::string& key, const std::string& fallback) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second.value;
  }

 private:
  std::map<std::string, RawEntry> entries_;
};

void require_range(double v, double lo, double hi, bool lo_open, bool hi_open,
                   const std::string& key, const std::string& interval) {
  const bool lo_ok = lo_open ? v > lo : v >= lo;
  const bool hi_ok = hi_open ? v < hi : v <= hi;
  if (!(lo_ok && hi_ok)) {
    throw ValidationError("key '" + key + "': value " + std::to_string(v) +
                          " outside admissible range " + interval);
  }
}

AmplificationSpec parse_amplification(const KeyMap& kv,
                                      const std::string& prefix,
                                      const std::string& family_key,
                                      const std::string& alpha_key,
                                      const std::string& saturation_key) {
  const std::string family = kv.raw_or(family_key, "logarithmic");
  const double alpha = kv.number(alpha_key);
  require_range(alpha, 0.0, 1e308, true, false, alpha_key, "(0, inf)");
  if (family == "logarithmic") {
    return AmplificationSpec::logarithmic(alpha);
  }
  if (family == "saturating") {
    const double sat = kv.number(saturation_key);
    require_range(sat, 0.0, 1e308, true, false, saturation_key, "(0, inf)");
    return AmplificationSpec::saturating(alpha, sat);
  }
  throw ValidationError("key '" + family_key + "': unknown family '" + family +
                        "' (expected logarithmic|saturating) in section " +
                        prefix);
}

ModelParams parse_model(const KeyMap& kv) {
  const double q0 = kv.number("model.q0");
  require_range(q0, 0.0, 1.0, true, true, "model.q0", "(0, 1)");

  const AmplificationSpec h = parse_amplification(
      kv, "model", "model.h_family", "model.alpha", "model.saturation");

  const std::string dfam = kv.raw_or("model.delta_family", "hyperbolic");
  const double delta0 = kv.number("model.delta0");
  require_range(delta0, 0.0, 1.0, true, false, "model.delta0", "(0, 1]");
  const double beta = kv.number("model.beta");
  require_range(beta, 0.0, 1e308, true, false, "model.beta", "(0, inf)");
  ErosionSpec delta = ErosionSpec::hyperbolic(delta0, beta);
  if (dfam == "hyperbolic") {
    // already built
  } else if (dfam == "powerlaw") {
    const double k = kv.number("model.k");
    const bool allow = kv.flag_or("model.allow_k_above_one", false);
    if (!allow) require_range(k, 0.0, 1.0, true, false, "model.k", "(0, 1]");
    delta = ErosionSpec::power_law(delta0, beta, k, allow);
  } else if (dfam == "exponential") {
    delta = ErosionSpec::exponential(delta0, beta);
  } else {
    throw ValidationError(
        "key 'model.delta_family': unknown family '" + dfam +
        "' (expected hyperbolic|powerlaw|exponential)");
  }

  const double s = kv.number("model.s");
  require_range(s, 0.0, 1e308, false, false, "model.s", "[0, inf)");
  const double V = kv.number("model.V");
  require_range(V, 0.0, 1e308, false, false, "model.V", "[0, inf)");
  const double B = kv.number("model.B");
  require_range(B, 0.0, 1e308, false, false, "model.B", "[0, inf)");
  const double c_d = kv.number("model.c_d");
  require_range(c_d, 0.0, 1e308, true, false, "model.c_d", "(0, inf)");
  const double c_a = kv.number("model.c_a");
  require_range(c_a, 0.0, 1e308, true, false, "model.c_a", "(0, inf)");
  const double F = kv.number_or("model.F", 0.0);
  require_range(F, 0.0, 1e308, false, false, "model.F", "[0, inf)");

  return ModelParams(q0, h, delta, s, V, B, c_d, c_a, F);
}

SurfaceConfig parse_surfaces(const KeyMap& kv) {
  const long N = kv.integer("surfaces.N");
  if (N < 1) {
    throw ValidationError(
        "key 'surfaces.N': value outside admissible range [1, inf)");
  }
  const double rho = kv.number("surfaces.rho");
  require_range(rho, 0.0, 1.0, false, false, "surfaces.rho", "[0, 1]");
  const double gamma = kv.number("surfaces.gamma");
  require_range(gamma, 0.0, 1.0, false, false, "surfaces.gamma", "[0, 1]");
  const double s = kv.number("surfaces.s");
  require_range(s, 0.0, 1e308, false, false, "surfaces.s", "[0, inf)");
  return SurfaceConfig(static_cast<int>(N), rho, gamma, s);
}

DynamicsConfig parse_dynamics(const KeyMap& kv) {
  DynamicsConfig cfg;
  cfg.eta = kv.number_or("dynamics.eta", cfg.eta);
  require_range(cfg.eta, 0.0, 1.0, true, false, "dynamics.eta", "(0, 1]");
  cfg.max_steps = static_cast<int>(
      kv.integer_or("dynamics.max_steps", cfg.max_steps));
  if (cfg.max_steps < 1) {
    throw ValidationError(
        "key 'dynamics.max_steps': value outside admissible range [1, inf)");
  }
  cfg.tol = kv.number_or("dynamics.tol", cfg.tol);
  require_range(cfg.tol, 0.0, 1.0, true, true, "dynamics.tol", "(0, 1)");
  cfg.starts = static_cast<int>(kv.integer_or("dynamics.starts", cfg.starts));
  if (cfg.starts < 1) {
    throw ValidationError(
        "key 'dynamics.starts': value outside admissible range [1, inf)");
  }
  cfg.t_end = kv.number_or("dynamics.t_end", cfg.t_end);
  require_range(cfg.t_end, 0.0, 1e308, true, false, "dynamics.t_end",
                "(0, inf)");
  cfg.dt = kv.number_or("dynamics.dt", cfg.dt);
  require_range(cfg.dt, 0.0, 1e308, true, false, "dynamics.dt", "(0, inf)");
  return cfg;
}

DeterrenceConfig parse_deterrence(const KeyMap& kv) {
  DeterrenceConfig cfg;
  cfg.d_fixed = kv.number("deterrence.d_fixed");
  require_range(cfg.d_fixed, 0.0, 1e308, false, false, "deterrence.d_fixed",
                "[0, inf)");
  cfg.h_simple = parse_amplification(
      kv, "deterrence", "deterrence.h_simple_family",
      "deterrence.h_simple_alpha", "deterrence.h_simple_saturation");
  cfg.h_complex = parse_amplification(
      kv, "deterrence", "deterrence.h_complex_family",
      "deterrence.h_complex_alpha", "deterrence.h_complex_saturation");
  const long na = kv.integer("deterrence.N_a");
  if (na < 2) {
    throw ValidationError(
        "key 'deterrence.N_a': value outside admissible range [2, inf)");
  }
  cfg.N_a = static_cast<int>(na);
  cfg.gamma_a = kv.number("deterrence.gamma_a");
  require_range(cfg.gamma_a, 0.0, 1.0, true, false, "deterrence.gamma_a",
                "(0, 1]");
  cfg.rho = kv.number("deterrence.rho");
  require_range(cfg.rho, 0.0, 1.0, false, false, "deterrence.rho", "[0, 1]");
  cfg.simple_attack_diluted =
      kv.flag_or("deterrence.simple_attack_diluted", false);
  cfg.defender_best_responds =
      kv.flag_or("deterrence.defender_best_responds", false);
  return cfg;
}

TargetingConfig parse_targeting(const KeyMap& kv) {
  TargetingConfig cfg;
  const long count = kv.integer("targeting.count");
  if (count < 1) {
    throw ValidationError(
        "key 'targeting.count': value outside admissible range [1, inf)");
  }
  const std::string mode = kv.raw_or("targeting.mode", "fixed_a");
  if (mode == "fixed_a") {
    cfg.mode = TargetingMode::FixedA;
    cfg.fixed_a = kv.number("targeting.a");
    require_range(cfg.fixed_a, 0.0, 1e308, false, false, "targeting.a",
                  "[0, inf)");
  } else if (mode == "best_response") {
    cfg.mode = TargetingMode::BestResponsePerTarget;
  } else {
    throw ValidationError("key 'targeting.mode': unknown mode '" + mode +
                          "' (expected fixed_a|best_response)");
  }
  cfg.rho = kv.number_or("targeting.rho", 1.0);
  require_range(cfg.rho, 0.0, 1.0, false, false, "targeting.rho", "[0, 1]");
  cfg.d_step = kv.number_or("targeting.d_step", 1.0);
  require_range(cfg.d_step, 0.0, 1e308, true, false, "targeting.d_step",
                "(0, inf)");
  for (long i = 0; i < count; ++i) {
    const std::string prefix = "targeting." + std::to_string(i) + ".";
    DefenderProfile prof;
    prof.d = kv.number(prefix + "d");
    require_range(prof.d, 0.0, 1e308, false, false, prefix + "d", "[0, inf)");
    prof.s = kv.number(prefix + "s");
    require_range(prof.s, 0.0, 1e308, false, false, prefix + "s", "[0, inf)");
    prof.gamma = kv.number(prefix + "gamma");
    require_range(prof.gamma, 0.0, 1.0, false, false, prefix + "gamma",
                  "[0, 1]");
    const long n = kv.integer(prefix + "N");
    if (n < 1) {
      throw ValidationError("key '" + prefix +
                            "N': value outside admissible range [1, inf)");
    }
    prof.N = static_cast<int>(n);
    prof.B = kv.number(prefix + "B");
    require_range(prof.B, 0.0, 1e308, false, false, prefix + "B", "[0, inf)");
    prof.V = kv.number(prefix + "V");
    require_range(prof.V, 0.0, 1e308, false, false, prefix + "V", "[0, inf)");
    cfg.profiles.push_back(prof);
  }
  return cfg;
}

FigureConfig parse_figures(const KeyMap& kv) {
  FigureConfig cfg;
  cfg.beta_low = kv.number_or("figures.beta_low", cfg.beta_low);
  cfg.beta_mid = kv.number_or("figures.beta_mid", cfg.beta_mid);
  cfg.beta_high = kv.number_or("figures.beta_high", cfg.beta_high);
  for (const char* key : {"figures.beta_low", "figures.beta_mid",
                          "figures.beta_high"}) {
    if (kv.has(key)) {
      require_range(kv.number(key), 0.0, 1e308, true, false, key, "(0, inf)");
    }
  }
  cfg.a = kv.number_or("figures.a", cfg.a);
  require_range(cfg.a, 0.0, 1e308, false, false, "figures.a", "[0, inf)");
  cfg.d = kv.number_or("figures.d", cfg.d);
  require_range(cfg.d, 0.0, 1e308, false, false, "figures.d", "[0, inf)");
  cfg.a_max = kv.number_or("figures.a_max", cfg.a_max);
  require_range(cfg.a_max, 0.0, 1e308, true, false, "figures.a_max",
                "(0, inf)");
  cfg.d_max = kv.number_or("figures.d_max", cfg.d_max);
  require_range(cfg.d_max, 0.0, 1e308, true, false, "figures.d_max",
                "(0, inf)");
  cfg.n_points = static_cast<int>(kv.integer_or("figures.n_points",
                                                cfg.n_points));
  if (cfg.n_points < 2) {
    throw ValidationError(
        "key 'figures.n_points': value outside admissible range [2, inf)");
  }
  cfg.traj_starts =
      static_cast<int>(kv.integer_or("figures.traj_starts", cfg.traj_starts));
  if (cfg.traj_starts < 1) {
    throw ValidationError(
        "key 'figures.traj_starts': value outside admissible range [1, inf)");
  }
  return cfg;
}

}  // namespace

double Scenario::effective_s() const {
  if (surfaces) return effective_signal(*surfaces);
  return model->s;
}

DeterrenceScenario Scenario::deterrence_scenario() const {
  if (!model || !deterrence) {
    throw ValidationError("scenario lacks the model/deterrence sections");
  }
  const DeterrenceConfig& c = *deterrence;
  return DeterrenceScenario(*model, c.d_fixed, c.h_simple, c.h_complex, c.N_a,
                            c.gamma_a, c.rho, c.simple_attack_diluted,
                            c.defender_best_responds);
}

Scenario parse_scenario(const std::string& text) {
  std::map<std::string, RawEntry> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected 'key = value', got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": empty key or value");
    }
    const std::string canon = canonical_key(key);
    const auto& known = known_keys();
    if (std::find(known.begin(), known.end(), canon) == known.end()) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": unknown key '" + key + "' (nearest known key: " +
                            nearest_key(key) + ")");
    }
    const auto it = entries.find(key);
    if (it != entries.end()) {
      throw ValidationError("duplicate key '" + key + "' on lines " +
                            std::to_string(it->second.line) + " and " +
                            std::to_string(line_no));
    }
    entries.emplace(key, RawEntry{value, line_no});
  }

  const KeyMap kv(std::move(entries));
  Scenario sc;
  sc.raw_text = text;
  sc.hash = fnv1a64(text);
  if (kv.has_prefix("model.")) sc.model = parse_model(kv);
  if (kv.has_prefix("surfaces.")) sc.surfaces = parse_surfaces(kv);
  if (kv.has_prefix("dynamics.")) sc.dynamics = parse_dynamics(kv);
  if (kv.has_prefix("deterrence.")) sc.deterrence = parse_deterrence(kv);
  if (kv.has_prefix("targeting.")) sc.targeting = parse_targeting(kv);
  sc.figures = parse_figures(kv);
  if (kv.has("seed")) {
    const std::string& raw = kv.raw("seed");
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw.c_str(), &end, 10);
    if (end == raw.c_str() || *end != '\0') {
      throw ValidationError("key 'seed': expected an unsigned integer, got '" +
                            raw + "'");
    }
    sc.seed = static_cast<std::uint64_t>(v);
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace armsrace
