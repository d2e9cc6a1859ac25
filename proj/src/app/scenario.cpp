#include "fracporo/app/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fracporo/app/toml_lite.hpp"
#include "fracporo/errors.hpp"
#include "fracporo/hash.hpp"

namespace fracporo {

namespace {

constexpr int kSchemaVersion = 1;

/// Tracks which keys were consumed so leftovers can be reported.
class Reader {
 public:
  explicit Reader(const TomlDocument& doc) : doc_(doc) {}

  const TomlValue* get(const std::string& key) {
    used_.insert(key);
    return doc_.find(key);
  }
  const TomlValue& require(const std::string& key) {
    const TomlValue* v = get(key);
    if (!v) throw ValidationError("missing key '" + key + "'");
    return *v;
  }
  double number(const std::string& key, double fallback) {
    const TomlValue* v = get(key);
    return v ? v->as_number(key) : fallback;
  }
  std::optional<double> optional_number(const std::string& key) {
    const TomlValue* v = get(key);
    if (!v) return std::nullopt;
    return v->as_number(key);
  }
  std::string string(const std::string& key, const std::string& fallback) {
    const TomlValue* v = get(key);
    return v ? v->as_string(key) : fallback;
  }
  std::vector<double> numbers(const std::string& key) {
    std::vector<double> out;
    if (const TomlValue* v = get(key))
      for (const auto& item : v->as_array(key)) out.push_back(item.as_number(key));
    return out;
  }
  std::vector<int> integers(const std::string& key, std::vector<int> fallback) {
    const TomlValue* v = get(key);
    if (!v) return fallback;
    std::vector<int> out;
    for (const auto& item : v->as_array(key)) out.push_back(static_cast<int>(item.as_integer(key)));
    return out;
  }

  /// Names of the subtables `prefix.<name>.*`, in order of first appearance.
  std::vector<std::string> subtables(const std::string& prefix) const {
    std::vector<std::string> out;
    auto consider = [&](const std::string& key) {
      if (key.rfind(prefix + ".", 0) != 0) return;
      std::string rest = key.substr(prefix.size() + 1);
      rest = rest.substr(0, rest.find('.'));
      if (std::find(out.begin(), out.end(), rest) == out.end()) out.push_back(rest);
    };
    for (const auto& t : doc_.tables()) consider(t + ".");
    for (const auto& k : doc_.keys()) consider(k);
    out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
    return out;
  }

  void reject_unused() const {
    for (const auto& key : doc_.keys())
      if (!used_.count(key)) throw ValidationError("unknown key '" + key + "'");
  }

 private:
  const TomlDocument& doc_;
  std::set<std::string> used_;
};

double check_order(double v, const std::string& key) {
  if (!(v > 0.0 && v <= 1.0)) throw ValidationError("'" + key + "' must lie in (0, 1]");
  return v;
}

std::filesystem::path resolve_path(const std::filesystem::path& base, const std::string& p, const std::string& key) {
  std::filesystem::path path(p);
  if (path.is_relative()) path = base / path;
  if (!std::filesystem::exists(path)) throw ConfigError("'" + key + "' refers to missing file " + path.string());
  return path.lexically_normal();
}

FieldSource read_field(Reader& r, const std::string& key, const std::filesystem::path& base) {
  FieldSource f;
  const TomlValue& v = r.require(key);
  if (v.is_number()) {
    f.kind = FieldSource::Kind::kConstant;
    f.value = v.as_number(key);
  } else if (v.is_array()) {
    f.kind = FieldSource::Kind::kRegions;
    for (const auto& item : v.as_array(key)) f.regions.push_back(item.as_number(key));
    if (f.regions.empty()) throw ValidationError("'" + key + "' region list is empty");
  } else {
    const std::string& s = v.as_string(key);
    if (s == "synthetic") {
      f.kind = FieldSource::Kind::kSynthetic;
      f.style = parse_field_style(r.string(key + "_style", "lognormal-blobs"));
      f.contrast = r.number(key + "_contrast", 1.0);
      f.scale = r.number(key + "_scale", 1.0);
      if (!(f.contrast >= 1.0)) throw ValidationError("'" + key + "_contrast' must be >= 1");
      if (!(f.scale > 0.0)) throw ValidationError("'" + key + "_scale' must be positive");
      return f;
    }
    if (s.rfind("file:", 0) == 0) {
      f.kind = FieldSource::Kind::kFile;
      f.file = resolve_path(base, s.substr(5), key);
      return f;
    }
    throw ValidationError("'" + key + "' must be a number, an array, \"synthetic\" or \"file:<path>\"");
  }
  return f;
}

std::uint8_t parse_sides(const std::string& letters, const std::string& key) {
  std::uint8_t sides = 0;
  for (char c : letters) {
    const BoundarySide s = parse_side(std::string(1, c));
    if (s == kNoSide) throw ValidationError("'" + key + "' has unknown side '" + std::string(1, c) + "'");
    sides |= s;
  }
  return sides;
}

std::vector<double> read_indexed_file(const std::filesystem::path& path, int count) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::vector<double> values(count, 0.0);
  std::vector<char> seen(count, 0);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long id = 0;
    double value = 0.0;
    if (!(ls >> id)) continue;
    std::string extra;
    if (!(ls >> value) || (ls >> extra))
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected '<id> <value>'");
    if (id < 0 || id >= count || seen[id])
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": bad or repeated id " + std::to_string(id));
    seen[id] = 1;
    values[id] = value;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw ParseError(path.string() + ": missing values (expected " + std::to_string(count) + ")");
  return values;
}

}  // namespace

int Scenario::continuum_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(continua.size()); ++i)
    if (continua[i].name == name) return i;
  return -1;
}

std::uint64_t field_seed(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hash_combine(seed, h);
}

Scenario parse_scenario(std::istream& in, const std::filesystem::path& base_dir, const std::string& source) {
  const TomlDocument doc = TomlDocument::parse(in, source);
  Reader r(doc);
  Scenario s;

  const TomlValue& version = r.require("schema_version");
  s.schema_version = static_cast<int>(version.as_integer("schema_version"));
  if (s.schema_version != kSchemaVersion)
    throw ValidationError("unsupported schema_version " + std::to_string(s.schema_version));
  if (const TomlValue* v = r.get("seed")) {
    const auto seed = v->as_integer("seed");
    if (seed < 0) throw ValidationError("'seed' must be non-negative");
    s.seed = static_cast<std::uint64_t>(seed);
  }

  s.mesh_path = resolve_path(base_dir, r.require("mesh.path").as_string("mesh.path"), "mesh.path");
  s.coarse_nx = static_cast<int>(r.require("coarse.nx").as_integer("coarse.nx"));
  s.coarse_ny = static_cast<int>(r.require("coarse.ny").as_integer("coarse.ny"));
  if (s.coarse_nx < 1 || s.coarse_ny < 1) throw ValidationError("coarse grid counts must be >= 1");

  s.final_time = r.require("time.final_time").as_number("time.final_time");
  s.steps = static_cast<int>(r.require("time.steps").as_integer("time.steps"));
  if (!(s.final_time > 0.0) || s.steps < 1) throw ValidationError("time: need final_time > 0 and steps >= 1");

  s.youngs = read_field(r, "elasticity.youngs", base_dir);
  s.poisson = r.number("elasticity.poisson", 0.3);
  if (!(s.poisson > 0.0 && s.poisson < 0.5)) throw ValidationError("'elasticity.poisson' must lie in (0, 0.5)");

  s.alpha = check_order(r.number("fractional.alpha", 1.0), "fractional.alpha");
  s.beta = check_order(r.number("fractional.beta", 1.0), "fractional.beta");
  s.alpha_sweep = r.numbers("fractional.alpha_sweep");
  for (double a : s.alpha_sweep) check_order(a, "fractional.alpha_sweep");

  const auto names = r.subtables("continuum");
  if (names.empty()) throw ValidationError("at least one [continuum.<name>] table is required");
  for (const auto& name : names) {
    const std::string p = "continuum." + name + ".";
    ContinuumConfig c;
    c.name = name;
    const std::string kind = r.string(p + "kind", "bulk");
    if (kind == "fracture") {
      c.support = Support::kFracture;
    } else if (kind != "bulk") {
      throw ValidationError("'" + p + "kind' must be bulk or fracture");
    }
    const auto modulus = r.optional_number(p + "biot_modulus");
    const auto storage = r.optional_number(p + "storage");
    if (modulus.has_value() == storage.has_value())
      throw ValidationError("continuum '" + name + "' needs exactly one of biot_modulus and storage");
    if (modulus) {
      if (!(*modulus > 0.0)) throw ValidationError("'" + p + "biot_modulus' must be positive");
      c.storage = 1.0 / *modulus;
    } else {
      c.storage = *storage;
      if (!(c.storage >= 0.0)) throw ValidationError("'" + p + "storage' must be >= 0");
    }
    c.permeability = read_field(r, p + "permeability", base_dir);
    c.biot = r.number(p + "biot_coefficient", 0.0);
    if (c.support == Support::kFracture && c.biot != 0.0)
      throw ValidationError("fracture continuum '" + name + "' must have biot_coefficient = 0");
    if (c.support == Support::kFracture && (c.permeability.kind == FieldSource::Kind::kSynthetic ||
                                            c.permeability.kind == FieldSource::Kind::kRegions))
      throw ValidationError("fracture permeability must be a constant or a file");
    if (auto a = r.optional_number(p + "alpha")) c.alpha = check_order(*a, p + "alpha");
    if (auto b = r.optional_number(p + "beta")) c.beta = check_order(*b, p + "beta");
    c.initial_pressure = r.optional_number(p + "initial_pressure");
    s.continua.push_back(std::move(c));
  }
  int fractures = 0;
  for (const auto& c : s.continua) fractures += c.support == Support::kFracture;
  if (fractures > 1) throw ValidationError("at most one fracture continuum is supported");

  for (const auto& pair : r.subtables("exchange")) {
    const auto dash = pair.find('-');
    if (dash == std::string::npos) throw ValidationError("exchange table must be named <first>-<second>");
    ExchangeConfig e;
    e.first = pair.substr(0, dash);
    e.second = pair.substr(dash + 1);
    for (const auto& n : {e.first, e.second})
      if (s.continuum_index(n) < 0) throw ValidationError("exchange '" + pair + "' names unknown continuum '" + n + "'");
    if (e.first == e.second) throw ValidationError("exchange '" + pair + "' couples a continuum with itself");
    const std::string key = "exchange." + pair + ".eta";
    const TomlValue& v = r.require(key);
    if (v.is_number()) {
      e.value = v.as_number(key);
      if (!(e.value >= 0.0)) throw ValidationError("'" + key + "' must be >= 0");
    } else {
      // "<multiplier>*k<name>"
      const std::string& text = v.as_string(key);
      const auto star = text.find("*k");
      if (star == std::string::npos) throw ValidationError("'" + key + "' must be a number or '<factor>*k<continuum>'");
      std::size_t used = 0;
      double factor = 0.0;
      try {
        factor = std::stod(text.substr(0, star), &used);
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (used != star || !(factor >= 0.0)) throw ValidationError("'" + key + "' has a bad factor");
      e.multiplier = factor;
      e.reference = text.substr(star + 2);
      const int ref = s.continuum_index(e.reference);
      if (ref < 0 || s.continua[ref].support != Support::kBulk)
        throw ValidationError("'" + key + "' must reference a bulk continuum");
      for (const auto& n : {e.first, e.second})
        if (s.continua[s.continuum_index(n)].support != Support::kBulk)
          throw ValidationError("'" + key + "': permeability-scaled exchange needs two bulk continua");
    }
    s.exchanges.push_back(std::move(e));
  }

  s.pressure_sides = parse_sides(r.string("boundary.pressure_sides", ""), "boundary.pressure_sides");
  s.pressure_value = r.number("boundary.pressure_value", 0.0);
  if (const TomlValue* v = r.get("boundary.pressure_continua"))
    for (const auto& item : v->as_array("boundary.pressure_continua")) {
      const std::string& n = item.as_string("boundary.pressure_continua");
      if (s.continuum_index(n) < 0) throw ValidationError("boundary.pressure_continua names unknown continuum '" + n + "'");
      s.pressure_continua.push_back(n);
    }
  s.displacement_condition = r.string("boundary.displacement", "rollers");
  if (s.displacement_condition != "rollers" && s.displacement_condition != "clamped")
    throw ValidationError("'boundary.displacement' must be rollers or clamped");
  s.initial_pressure = r.number("initial.pressure", 1.0);

  s.basis_sweep = r.integers("multiscale.sweep", s.basis_sweep);
  if (s.basis_sweep.empty()) throw ValidationError("'multiscale.sweep' must not be empty");
  for (std::size_t k = 0; k < s.basis_sweep.size(); ++k)
    if (s.basis_sweep[k] < 1 || (k > 0 && s.basis_sweep[k] <= s.basis_sweep[k - 1]))
      throw ValidationError("'multiscale.sweep' must be positive and strictly ascending");

  s.vtk_steps = r.integers("output.vtk_steps", {});
  for (int n : s.vtk_steps)
    if (n < 0 || n > s.steps) throw ValidationError("'output.vtk_steps' entries must lie in [0, steps]");
  if (const TomlValue* v = r.get("output.vtk_basis")) {
    s.vtk_basis = static_cast<int>(v->as_integer("output.vtk_basis"));
    if (std::find(s.basis_sweep.begin(), s.basis_sweep.end(), *s.vtk_basis) == s.basis_sweep.end())
      throw ValidationError("'output.vtk_basis' must be one of the sweep values");
  }

  r.reject_unused();
  return s;
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario " + path.string());
  return parse_scenario(in, path.parent_path(), path.string());
}

std::vector<double> resolve_field(const FieldSource& source, const FineMesh& mesh, Support support,
                                  std::uint64_t seed) {
  const int count = support == Support::kFracture ? mesh.num_fracture_edges() : mesh.num_triangles();
  switch (source.kind) {
    case FieldSource::Kind::kConstant:
      return std::vector<double>(count, source.value);
    case FieldSource::Kind::kRegions: {
      std::vector<double> out(count);
      for (int t = 0; t < count; ++t) {
        const int region = mesh.regions()[t];
        if (region < 0 || region >= static_cast<int>(source.regions.size()))
          throw DataError("no coefficient given for region " + std::to_string(region));
        out[t] = source.regions[region];
      }
      return out;
    }
    case FieldSource::Kind::kSynthetic: {
      std::vector<double> out = generate_synthetic_field(seed, mesh, source.contrast, source.style);
      for (double& v : out) v *= source.scale;
      return out;
    }
    case FieldSource::Kind::kFile:
      return read_indexed_file(source.file, count);
  }
  throw ContractError("unknown field kind");
}

PoroModel build_model(const Scenario& s, const FineMesh& mesh, std::optional<double> order) {
  PoroModel model;
  for (const auto& c : s.continua) {
    ContinuumSpec spec;
    spec.name = c.name;
    spec.support = c.support;
    const int count = c.support == Support::kFracture ? mesh.num_fracture_edges() : mesh.num_triangles();
    spec.storage.assign(count, c.storage);
    spec.permeability = resolve_field(c.permeability, mesh, c.support, field_seed(s.seed, "permeability." + c.name));
    spec.biot = c.biot;
    spec.alpha = order.value_or(c.alpha.value_or(s.alpha));
    spec.beta = order.value_or(c.beta.value_or(s.beta));
    model.continua.push_back(std::move(spec));
  }
  for (const auto& e : s.exchanges) {
    ExchangeSpec spec;
    spec.first = s.continuum_index(e.first);
    spec.second = s.continuum_index(e.second);
    const bool along_fractures = model.continua[spec.first].is_fracture() || model.continua[spec.second].is_fracture();
    const int count = along_fractures ? mesh.num_fracture_edges() : mesh.num_triangles();
    if (e.multiplier) {
      spec.eta = model.continua[s.continuum_index(e.reference)].permeability;
      for (double& v : spec.eta) v *= *e.multiplier;
    } else {
      spec.eta.assign(count, e.value);
    }
    model.exchanges.push_back(std::move(spec));
  }
  model.elasticity.youngs = resolve_field(s.youngs, mesh, Support::kBulk, field_seed(s.seed, "youngs"));
  model.elasticity.poisson = s.poisson;
  model.validate(mesh);
  return model;
}

BoundaryConditions build_boundary_conditions(const Scenario& s) {
  BoundaryConditions bc;
  if (s.pressure_sides != 0) {
    for (int i = 0; i < static_cast<int>(s.continua.size()); ++i) {
      const bool selected = s.pressure_continua.empty() ||
                            std::find(s.pressure_continua.begin(), s.pressure_continua.end(), s.continua[i].name) !=
                                s.pressure_continua.end();
      if (selected) bc.pressure.push_back({i, s.pressure_sides, s.pressure_value});
    }
  }
  if (s.displacement_condition == "rollers") {
    bc.displacement = BoundaryConditions::rollers();
  } else {
    const auto all = static_cast<std::uint8_t>(kLeft | kRight | kTop | kBottom);
    bc.displacement = {{0, all, 0.0}, {1, all, 0.0}};
  }
  return bc;
}

FineProblem build_fine_problem(const Scenario& s, const FineMesh& mesh, std::optional<double> order) {
  FineProblem p;
  p.model = build_model(s, mesh, order);
  p.bc = build_boundary_conditions(s);
  p.final_time = s.final_time;
  p.steps = s.steps;
  for (const auto& c : s.continua) p.initial_pressure.push_back(c.initial_pressure.value_or(s.initial_pressure));
  return p;
}

}  // namespace fracporo
