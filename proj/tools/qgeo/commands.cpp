#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qgeo/cli.hpp"
#include "qgeo/error.hpp"
#include "qgeo/families.hpp"
#include "qgeo/lindblad.hpp"
#include "qgeo/parallel.hpp"
#include "qgeo/version.hpp"

namespace qgeo::cli {

namespace {

// Reads one JSON object, recording every value it hands out (explicit or
// default) into `resolved`. finish() rejects keys nobody asked for.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(ErrorKind::Validation, path_ + ": expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& raw(const std::string& key) {
    if (!has(key)) fail(ErrorKind::Validation, where(key) + ": required key missing");
    seen_.insert(key);
    return j_.at(key);
  }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    double v;
    if (has(key)) {
      const json& x = raw(key);
      if (!x.is_number()) fail(ErrorKind::Validation, where(key) + ": expected a number");
      v = x.get<double>();
    } else if (fallback) {
      v = *fallback;
    } else {
      fail(ErrorKind::Validation, where(key) + ": required key missing");
    }
    if (!std::isfinite(v)) fail(ErrorKind::Validation, where(key) + ": must be finite");
    resolved[key] = v;
    return v;
  }

  long integer(const std::string& key, std::optional<long> fallback, long lo, long hi) {
    long v;
    if (has(key)) {
      const json& x = raw(key);
      if (!x.is_number_integer()) fail(ErrorKind::Validation, where(key) + ": expected an integer");
      v = x.get<long>();
    } else if (fallback) {
      v = *fallback;
    } else {
      fail(ErrorKind::Validation, where(key) + ": required key missing");
    }
    if (v < lo || v > hi) {
      fail(ErrorKind::Validation, where(key) + ": must lie in [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]");
    }
    resolved[key] = v;
    return v;
  }

  std::string choice(const std::string& key, std::optional<std::string> fallback,
                     const std::vector<std::string>& allowed) {
    std::string v;
    if (has(key)) {
      const json& x = raw(key);
      if (!x.is_string()) fail(ErrorKind::Validation, where(key) + ": expected a string");
      v = x.get<std::string>();
    } else if (fallback) {
      v = *fallback;
    } else {
      fail(ErrorKind::Validation, where(key) + ": required key missing");
    }
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      fail(ErrorKind::Validation, where(key) + ": \"" + v + "\" is not one of {" + list + "}");
    }
    resolved[key] = v;
    return v;
  }

  std::vector<double> numbers(const std::string& key,
                              std::optional<std::vector<double>> fallback = std::nullopt) {
    std::vector<double> v;
    if (has(key)) {
      const json& x = raw(key);
      if (!x.is_array()) fail(ErrorKind::Validation, where(key) + ": expected an array of numbers");
      for (const auto& e : x) {
        if (!e.is_number()) fail(ErrorKind::Validation, where(key) + ": expected an array of numbers");
        v.push_back(e.get<double>());
      }
    } else if (fallback) {
      v = *fallback;
    } else {
      fail(ErrorKind::Validation, where(key) + ": required key missing");
    }
    resolved[key] = v;
    return v;
  }

  // Sub-object whose resolved form is filled in by the caller.
  Section child(const std::string& key) { return Section(raw(key), where(key)); }

  // Opaque value copied verbatim into the resolved config.
  const json& passthrough(const std::string& key) {
    const json& x = raw(key);
    resolved[key] = x;
    return x;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      (void)value;
      if (!seen_.count(key)) fail(ErrorKind::Validation, where(key) + ": unknown key");
    }
  }

  std::string where(const std::string& key) const { return path_ + "." + key; }

  json resolved = json::object();

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

// Common keys shared by every command.
struct Common {
  unsigned threads = 1;
  double tol = kDefaultRankTol;
  std::uint64_t seed = 0;
};

Common read_common(Section& s, const Overrides& o) {
  Common c;
  c.threads = static_cast<unsigned>(
      s.integer("threads", static_cast<long>(default_threads()), 1, 4096));
  if (o.threads) c.threads = *o.threads;
  s.resolved["threads"] = c.threads;

  c.tol = s.number("tol", kDefaultRankTol);
  if (o.tol) c.tol = *o.tol;
  if (!(c.tol > 0.0 && c.tol < 0.5)) fail(ErrorKind::Validation, "tol: must lie in (0, 0.5)");
  s.resolved["tol"] = c.tol;

  if (s.has("seed")) {
    const json& x = s.raw("seed");
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
      fail(ErrorKind::Validation, "config.seed: expected a non-negative integer");
    }
    c.seed = x.get<std::uint64_t>();
  }
  if (o.seed) c.seed = *o.seed;
  s.resolved["seed"] = c.seed;
  return c;
}

TorusGrid read_grid(Section& s, const std::string& key, std::vector<double> fallback) {
  const auto dims = s.numbers(key, fallback);
  std::vector<int> out;
  for (double d : dims) {
    if (d != std::floor(d) || d < 1 || d > 1 << 16) {
      fail(ErrorKind::Validation, s.where(key) + ": sizes must be positive integers");
    }
    out.push_back(static_cast<int>(d));
  }
  if (out.size() != 2) fail(ErrorKind::Validation, s.where(key) + ": expected two sizes");
  s.resolved[key] = out;
  return TorusGrid(out);
}

std::string mesh_label(const TorusGrid& g) {
  std::string s;
  for (int d : g.dims()) s += (s.empty() ? "" : "x") + std::to_string(d);
  return s;
}

std::array<double, 3> unit3(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) fail(ErrorKind::Validation, where + ": expected [x, y, z]");
  std::array<double, 3> a{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_number()) fail(ErrorKind::Validation, where + ": expected [x, y, z]");
    a[i] = v[i].get<double>();
  }
  const double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  if (!(n > 0.0)) fail(ErrorKind::Validation, where + ": zero vector");
  for (auto& x : a) x /= n;
  return a;
}

json holonomy_json(const HolonomyResult& h) {
  return {{"phase", h.phase}, {"mesh", h.mesh}, {"holonomy", matrix_to_json(h.holonomy)}};
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  CsvWriter csv(out);
  for (const auto& r : rows) csv.row(r);
  return out.str();
}

// ---------------------------------------------------------------- aa-phase

Outcome aa_phase_command(Section& cfg, const Common&) {
  Section loop = cfg.child("loop");
  const std::string type = loop.choice("type", std::nullopt, {"latitude", "polygon", "states"});
  PureLoop states;
  if (type == "latitude") {
    const double theta = loop.number("theta");
    const long steps = loop.integer("steps", 1000, 3, 100000000);
    states = latitude_loop(theta, static_cast<int>(steps));
  } else if (type == "polygon") {
    const json& v = loop.passthrough("vertices");
    if (!v.is_array() || v.size() < 3) {
      fail(ErrorKind::Validation, loop.where("vertices") + ": need at least three vertices");
    }
    std::vector<std::array<double, 3>> vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      vertices.push_back(unit3(v[i], loop.where("vertices") + "[" + std::to_string(i) + "]"));
    }
    const long steps = loop.integer("steps_per_edge", 200, 1, 10000000);
    states = geodesic_polygon_loop(vertices, static_cast<int>(steps));
  } else {
    states = pure_loop_from_json(loop.passthrough("data"));
  }
  loop.finish();
  cfg.resolved["loop"] = loop.resolved;

  const HolonomyResult r = aa_phase(states);
  Outcome out;
  out.result = holonomy_json(r);
  out.csv_name = "aa_phase.csv";
  out.csv = table({{"loop_type", "mesh", "phase_rad"},
                   {type, std::to_string(r.mesh), format_number(r.phase)}});
  return out;
}

// ---------------------------------------------------------------- uhlmann

TransportMethod read_method(Section& s) {
  return s.choice("method", "polar", {"polar", "path_ordered"}) == "polar"
             ? TransportMethod::PolarAlignment
             : TransportMethod::PathOrdered;
}

Outcome uhlmann_command(Section& cfg, const Common& common) {
  const TransportMethod method = read_method(cfg);
  Section loop = cfg.child("loop");
  const std::string type = loop.choice("type", std::nullopt, {"thermal", "states"});
  MixedLoop states;
  if (type == "thermal") {
    const double theta = loop.number("theta");
    const double temperature = loop.number("temperature");
    const long steps = loop.integer("steps", 2000, 3, 100000000);
    const double strength = loop.number("strength", 0.5);
    if (!(temperature > 0.0)) fail(ErrorKind::Validation, loop.where("temperature") + ": must be positive");
    states = thermal_loop(theta, temperature, static_cast<int>(steps), strength);
  } else {
    states = mixed_loop_from_json(loop.passthrough("data"));
  }
  loop.finish();
  cfg.resolved["loop"] = loop.resolved;

  const HolonomyResult r = uhlmann_transport(states, method, common.tol);
  Outcome out;
  out.result = holonomy_json(r);
  out.csv_name = "uhlmann.csv";
  out.csv = table({{"method", "mesh", "phase_rad"},
                   {cfg.resolved["method"].get<std::string>(), std::to_string(r.mesh),
                    format_number(r.phase)}});
  return out;
}

// ---------------------------------------------------------------- chern

BlochModel read_model(Section& cfg) { return model_from_json(cfg.passthrough("model")); }

std::string model_label(const json& m) {
  // Compact, deterministic identifier for CSV rows.
  return m.dump();
}

Outcome chern_command(Section& cfg, const Common& common) {
  const BlochModel model = read_model(cfg);
  const TorusGrid grid = read_grid(cfg, "grid", {32, 32});
  const long band = cfg.integer("band", 0, 0, model.bands - 1);

  const FiberField field = band_projector_field(model, grid, static_cast<int>(band), common.threads);
  const CurvatureField curv = fhs_curvature(field, common.threads);
  double total = 0.0;
  for (double f : curv.scalar) total += f;
  const double raw = total / kTwoPi;
  const long rounded = std::lround(raw);
  const double gap = min_gap(model, grid, static_cast<int>(band));

  Outcome out;
  out.result = {{"chern", rounded},
                {"raw", raw},
                {"residual", std::abs(raw - static_cast<double>(rounded))},
                {"min_gap", gap}};
  std::ostringstream csv;
  write_invariant_csv(csv, {{model_label(cfg.resolved["model"]), mesh_label(grid), "chern_fhs", raw,
                             rounded, std::abs(raw - static_cast<double>(rounded))}});
  out.csv_name = "invariants.csv";
  out.csv = csv.str();
  return out;
}

// ---------------------------------------------------------------- degree

Outcome degree_command(Section& cfg, const Common& common) {
  FiberField field{TorusGrid({4, 4}), FiberKind::Density, {}};
  std::string family_id;
  const bool has_field = cfg.has("field");
  const bool has_family = cfg.has("family");
  if (has_field == has_family) {
    fail(ErrorKind::Validation, "config: exactly one of \"field\" and \"family\" is required");
  }
  if (has_field) {
    field = field_from_json(cfg.passthrough("field"));
    family_id = "field";
  } else {
    Section fam = cfg.child("family");
    const std::string type = fam.choice("type", std::nullopt, {"thermal", "smooth"});
    const TorusGrid grid = read_grid(fam, "grid", {32, 32});
    if (type == "thermal") {
      const BlochModel model = read_model(fam);
      const double temperature = fam.number("temperature");
      if (!(temperature > 0.0)) fail(ErrorKind::Validation, fam.where("temperature") + ": must be positive");
      field = thermal_family(model, temperature, grid, common.threads);
      family_id = "thermal:" + model_label(fam.resolved["model"]) + ":T=" + format_number(temperature);
    } else {
      const long id = fam.integer("id", std::nullopt, 0, kSmoothFamilyCount - 1);
      field = smooth_family(static_cast<int>(id), grid);
      family_id = "smooth:" + std::to_string(id);
    }
    fam.finish();
    cfg.resolved["family"] = fam.resolved;
  }

  std::vector<std::string> names;
  if (cfg.has("invariants")) {
    const json& list = cfg.raw("invariants");
    if (!list.is_array() || list.empty()) {
      fail(ErrorKind::Validation, "config.invariants: expected a non-empty array of names");
    }
    for (const auto& n : list) {
      if (!n.is_string()) fail(ErrorKind::Validation, "config.invariants: expected strings");
      names.push_back(n.get<std::string>());
    }
  } else {
    names = {"mapping_degree"};
  }
  cfg.resolved["invariants"] = names;

  std::vector<InvariantRow> rows;
  json result = json::object();
  const std::string mesh = mesh_label(field.grid);
  for (const auto& name : names) {
    double raw = 0.0;
    if (name == "mapping_degree") {
      const DegreeResult d = mapping_degree(field, common.threads, common.tol);
      raw = d.raw;
    } else if (name == "uhlmann_chern_trace") {
      raw = uhlmann_chern_trace(field, common.threads, common.tol);
    } else if (name == "weighted_chern") {
      raw = weighted_chern(field, common.threads, common.tol);
    } else if (name == "winding_literal") {
      raw = winding_literal(field, common.threads, common.tol);
    } else {
      fail(ErrorKind::Validation, "config.invariants: unknown invariant \"" + name +
                                      "\" (mapping_degree, uhlmann_chern_trace, weighted_chern, "
                                      "winding_literal)");
    }
    const long rounded = std::lround(raw);
    const double residual = std::abs(raw - static_cast<double>(rounded));
    rows.push_back({family_id, mesh, name, raw, rounded, residual});
    result[name] = {{"raw", raw}, {"rounded", rounded}, {"residual", residual}};
  }

  Outcome out;
  out.result = result;
  std::ostringstream csv;
  write_invariant_csv(csv, rows);
  out.csv_name = "invariants.csv";
  out.csv = csv.str();
  return out;
}

// ---------------------------------------------------------------- evolve

Outcome evolve_command(Section& cfg, const Common& common) {
  const BlochModel base = read_model(cfg);
  const TorusGrid grid = read_grid(cfg, "grid", {16, 16});
  const double temperature = cfg.number("T");
  if (!(temperature > 0.0)) fail(ErrorKind::Validation, "config.T: must be positive");
  const std::string dissipation =
      cfg.choice("dissipation", "none", {"none", "band_projector", "depolarizing"});
  const double gamma = cfg.number("gamma", 0.0);
  if (gamma < 0.0) fail(ErrorKind::Validation, "config.gamma: must be non-negative");
  if (dissipation == "none" && gamma != 0.0) {
    fail(ErrorKind::Validation, "config.gamma: must be 0 when dissipation is \"none\"");
  }
  const std::vector<double> times = cfg.numbers("times");
  ExperimentOptions opt;
  opt.margin_threshold = cfg.number("margin_threshold", 1e-6);
  opt.threads = common.threads;

  BlochModel model = base;
  if (dissipation == "band_projector") model = with_jumps(base, band_projector_jumps(base, gamma));
  if (dissipation == "depolarizing") model = with_jumps(base, depolarizing_jumps(gamma));

  const FiberField field0 = thermal_family(base, temperature, grid, common.threads);
  const TrajectoryRecord rec = invariance_experiment(model, field0, times, opt);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"time", "row_kind", "node_i", "node_j", "min_eig", "dist_center", "degree",
                  "degree_residual"});
  json samples = json::array();
  std::size_t cursor = 0;
  for (const auto& s : rec.samples) {
    for (; cursor < rec.node_margins.size() && rec.node_margins[cursor].time == s.time; ++cursor) {
      const auto& m = rec.node_margins[cursor];
      rows.push_back({format_number(m.time), "node", std::to_string(m.i), std::to_string(m.j),
                      format_number(m.min_eig), format_number(m.dist_center), "", ""});
    }
    rows.push_back({format_number(s.time), "summary", "", "", format_number(s.min_eig),
                    format_number(s.min_dist_center), s.degree ? std::to_string(*s.degree) : "",
                    s.degree ? format_number(s.degree_residual) : ""});
    samples.push_back({{"time", s.time},
                       {"degree", s.degree ? json(*s.degree) : json(nullptr)},
                       {"degree_residual", s.degree_residual},
                       {"min_eig", s.min_eig},
                       {"min_dist_center", s.min_dist_center},
                       {"margins_ok", s.margins_ok},
                       {"transition_window", s.transition_window},
                       {"trace_error", s.worst.trace_error},
                       {"hermiticity", s.worst.hermiticity}});
  }
  json violations = json::array();
  for (const auto& [a, b] : rec.violations) violations.push_back({a, b});

  Outcome out;
  out.result = {{"samples", samples},
                {"violations", violations},
                {"invariant", rec.invariant()},
                {"first_crossing", rec.first_crossing ? json(*rec.first_crossing) : json(nullptr)},
                {"first_degree_change",
                 rec.first_degree_change ? json(*rec.first_degree_change) : json(nullptr)}};
  out.csv_name = "trajectory.csv";
  out.csv = table(rows);
  return out;
}

// ---------------------------------------------------------------- thermal-sweep

Outcome thermal_sweep_command(Section& cfg, const Common& common) {
  const TransportMethod method = read_method(cfg);
  const double theta = cfg.number("theta", kPi / 3.0);
  const double strength = cfg.number("strength", 0.5);
  const long steps = cfg.integer("steps", 2000, 3, 100000000);
  const std::vector<double> temps = cfg.numbers("temperatures", std::vector<double>{1.0, 0.5, 0.2, 0.1, 0.05});
  if (temps.empty()) fail(ErrorKind::Validation, "config.temperatures: must not be empty");
  for (double t : temps) {
    if (!(t > 0.0)) fail(ErrorKind::Validation, "config.temperatures: must be positive");
  }
  if (!(strength > 0.0)) fail(ErrorKind::Validation, "config.strength: must be positive");

  const double aa = aa_phase(ground_state_loop(theta, static_cast<int>(steps), strength)).phase;
  std::vector<double> uhl(temps.size());
  parallel_for(temps.size(), common.threads, [&](std::size_t i) {
    uhl[i] = uhlmann_transport(thermal_loop(theta, temps[i], static_cast<int>(steps), strength), method,
                               common.tol)
                 .phase;
  });

  std::vector<std::vector<std::string>> rows{
      {"T", "uhlmann_phase_rad", "aa_phase_ground_rad", "abs_difference_rad"}};
  json points = json::array();
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < temps.size(); ++i) {
    const double diff = std::abs(wrap_angle(uhl[i] - aa));
    if (!(diff < prev)) monotone = false;
    prev = diff;
    rows.push_back({format_number(temps[i]), format_number(uhl[i]), format_number(aa), format_number(diff)});
    points.push_back({{"T", temps[i]}, {"uhlmann_phase", uhl[i]}, {"abs_difference", diff}});
  }
  Outcome out;
  out.result = {{"aa_phase_ground", aa}, {"points", points}, {"strictly_decreasing", monotone}};
  out.csv_name = "thermal_sweep.csv";
  out.csv = table(rows);
  return out;
}

// ---------------------------------------------------------------- bloch-check

// Seeded fixture generator; only raw engine output is used so results are
// identical across standard libraries.
class Fixture {
 public:
  explicit Fixture(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * uniform());
  }
  Matrix ginibre(Eigen::Index n) {
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index k = 0; k < n; ++k) g(i, k) = cplx(normal(), normal());
    return g;
  }

 private:
  std::mt19937_64 engine_;
};

Outcome bloch_check_command(Section& cfg, const Common& common) {
  RingLattice lattice;
  const bool has_lattice = cfg.has("lattice");
  const bool has_random = cfg.has("random");
  if (has_lattice == has_random) {
    fail(ErrorKind::Validation, "config: exactly one of \"lattice\" and \"random\" is required");
  }
  if (has_lattice) {
    lattice = ring_from_json(cfg.passthrough("lattice"));
  } else {
    Section r = cfg.child("random");
    lattice.cells = static_cast<int>(r.integer("L", std::nullopt, 2, 4096));
    lattice.orbitals = static_cast<int>(r.integer("N", std::nullopt, 1, 64));
    lattice.period = r.number("a", 1.0);
    r.finish();
    cfg.resolved["random"] = r.resolved;
    Fixture fx(common.seed);
    const Matrix g = fx.ginibre(lattice.orbitals);
    lattice.intra = 0.5 * (g + g.adjoint());
    lattice.inter = fx.ginibre(lattice.orbitals);
  }
  lattice.validate();
  const double impurity = cfg.number("impurity", 0.0);

  Matrix h = lattice.hamiltonian();
  h(0, 0) += impurity;
  const RealVector full = eigh(h).values;
  const auto fibers = bloch_decompose(lattice);
  const RealVector fib = fiber_spectrum(fibers);
  const double commutator = translation_invariance_check(h, lattice.translation());

  std::vector<std::vector<std::string>> rows{{"index", "full_energy", "fiber_energy", "abs_difference"}};
  double worst = 0.0;
  for (Eigen::Index i = 0; i < full.size(); ++i) {
    const double d = std::abs(full[i] - fib[i]);
    worst = std::max(worst, d);
    rows.push_back({std::to_string(i), format_number(full[i]), format_number(fib[i]), format_number(d)});
  }
  Outcome out;
  out.result = {{"max_spectral_difference", worst},
                {"translation_commutator", commutator},
                {"fibers", fibers.size()},
                {"lattice", ring_to_json(lattice)}};
  out.csv_name = "spectrum.csv";
  out.csv = table(rows);
  return out;
}

using Handler = std::function<Outcome(Section&, const Common&)>;

struct CommandSpec {
  Handler run;
  std::vector<std::string> keys;  // besides command, threads, tol, seed
};

const std::map<std::string, CommandSpec>& handlers() {
  static const std::map<std::string, CommandSpec> table{
      {"aa-phase", {aa_phase_command, {"loop"}}},
      {"uhlmann", {uhlmann_command, {"loop", "method"}}},
      {"chern", {chern_command, {"model", "grid", "band"}}},
      {"degree", {degree_command, {"field", "family", "invariants"}}},
      {"evolve",
       {evolve_command, {"model", "grid", "T", "dissipation", "gamma", "times", "margin_threshold"}}},
      {"thermal-sweep",
       {thermal_sweep_command, {"method", "theta", "strength", "steps", "temperatures"}}},
      {"bloch-check", {bloch_check_command, {"lattice", "random", "impurity"}}}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

Outcome run_command(const json& config, const Overrides& overrides) {
  Section cfg(config, "config");
  const std::string command = cfg.choice("command", std::nullopt, command_names());
  const CommandSpec& spec = handlers().at(command);
  for (const auto& [key, value] : config.items()) {
    (void)value;
    const bool common_key = key == "command" || key == "threads" || key == "tol" || key == "seed";
    if (!common_key && std::find(spec.keys.begin(), spec.keys.end(), key) == spec.keys.end()) {
      fail(ErrorKind::Validation, "config." + key + ": unknown key for command \"" + command + "\"");
    }
  }
  const Common common = read_common(cfg, overrides);
  Outcome out = spec.run(cfg, common);
  cfg.finish();
  out.resolved = cfg.resolved;
  return out;
}

json make_report(const Outcome& outcome, const std::string& timestamp) {
  return {{"command", outcome.resolved.at("command")},
          {"config", outcome.resolved},
          {"library", {{"name", "qgeo"}, {"version", kVersion}}},
          {"result", outcome.result},
          {"csv", outcome.csv_name},
          {"metadata", {{"timestamp", timestamp}}}};
}

}  // namespace qgeo::cli
