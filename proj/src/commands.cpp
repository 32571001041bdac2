#include "behrend/commands.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <span>
#include <sstream>

#include <json.hpp>

#include "behrend/errors.hpp"
#include "behrend/expr.hpp"
#include "behrend/newton.hpp"
#include "behrend/nu.hpp"
#include "behrend/oracle.hpp"

namespace behrend {

using json = nlohmann::ordered_json;

namespace {

json jint(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json jpoint(const Exponent& e) { return json::array({jint(e.a), jint(e.b)}); }
json jvec(const LatticeVector& v) { return json::array({jint(v.x), jint(v.y)}); }

json envelope(const std::string& command, const std::string& input) {
  json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = input;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string point_text(const Exponent& e) {
  return "(" + to_string(e.a) + "," + to_string(e.b) + ")";
}
std::string vec_text(const LatticeVector& v) {
  return "(" + to_string(v.x) + "," + to_string(v.y) + ")";
}

// Simple left-aligned table.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// tower products

struct TowerRun {
  ProductSummary summary;
  std::optional<Int> length;
};

TowerRun run_towers(const FactorProduct& p) {
  bool unit_powers = std::all_of(p.parts.begin(), p.parts.end(),
                                 [](const TowerPart& t) { return t.power == 1; });
  std::vector<Tower> towers;
  for (const auto& part : p.parts) towers.push_back(part.tower);
  TowerRun r;
  bool done = false;
  if (unit_powers) {
    try {
      r.summary = noncomplete_product_nu(make_tower_product(towers));
      done = true;
    } catch (const UnsupportedError&) {
      // overlapping exponents on one curve: fall back to raw factors
    }
  }
  if (!done) r.summary = factors_nu(p.factors());
  if (unit_powers && towers.size() == 1) r.length = tower_length(towers[0]);
  if (unit_powers && towers.size() == 2 && towers[0].is_complete() && towers[1].is_complete() &&
      shared_levels(towers[0], towers[1]) == 1)
    r.length = two_tower_length(towers[0], towers[1]);
  return r;
}

json diagram_json(const DynkinDiagram& D) {
  json nodes = json::array();
  for (std::size_t i = 0; i < D.nodes.size(); ++i) {
    const auto& n = D.nodes[i];
    json labels = json::array();
    for (auto f : n.factors) {
      const auto& tf = D.factors[f];
      json l;
      l["factor"] = factor_label(tf.branch, tf.tangent, tf.exponent);
      l["count"] = jint(tf.count);
      if (tf.tower) l["tower"] = *tf.tower;
      labels.push_back(l);
    }
    json jn;
    jn["id"] = i;
    jn["level"] = n.level;
    jn["ideal"] = factor_label(n.branch, n.key, Int(n.level));
    jn["self_intersection"] = n.self_intersection;
    jn["multiplicity"] = jint(n.multiplicity);
    jn["surviving"] = n.surviving;
    jn["parent"] = n.parent ? json(*n.parent) : json(nullptr);
    jn["factors"] = labels;
    nodes.push_back(jn);
  }
  json edges = json::array();
  for (const auto& [a, b] : D.edges()) edges.push_back(json::array({a, b}));
  json j;
  j["nodes"] = nodes;
  j["edges"] = edges;
  return j;
}

std::string diagram_table(const DynkinDiagram& D) {
  std::vector<std::vector<std::string>> rows{
      {"node", "level", "ideal", "self-int", "mult", "surviving"}};
  for (std::size_t i = 0; i < D.nodes.size(); ++i) {
    const auto& n = D.nodes[i];
    rows.push_back({std::to_string(i), std::to_string(n.level),
                    factor_label(n.branch, n.key, Int(n.level)),
                    std::to_string(n.self_intersection), to_string(n.multiplicity),
                    n.surviving ? "yes" : "no"});
  }
  return table(rows);
}

// ---------------------------------------------------------------------------
// commands

RunResult cmd_length(const Value& v, const RunOptions& o) {
  std::string input = to_string(v);
  Int length;
  auto* p = std::get_if<FactorProduct>(&v);
  if (p && !p->is_monomial()) {
    auto r = run_towers(*p);
    if (!r.length)
      throw UnsupportedError("no closed form for the length of " + input +
                             " (single towers and pairs of complete towers with distinct "
                             "tangent lines are covered)");
    length = *r.length;
  } else {
    MonomialIdeal I = monomial_ideal(v);
    require_fat_point(I);
    length = colength(I);
  }
  if (o.format == Format::Json) {
    json j = envelope("length", input);
    j["length"] = jint(length);
    return {dump(j), {}};
  }
  return {"length = " + to_string(length) + "\n", {}};
}

RunResult cmd_nu(const Value& v, const RunOptions& o) {
  std::string input = to_string(v);
  auto* p = std::get_if<FactorProduct>(&v);
  if (p && !p->is_monomial()) {
    TowerRun r = run_towers(*p);
    if (o.format == Format::Json) {
      json j = envelope("nu", input);
      j["engine"] = "towers";
      j["nu"] = jint(r.summary.nu);
      j["length"] = r.length ? jint(*r.length) : json(nullptr);
      j["diagram"] = diagram_json(r.summary.diagram);
      return {dump(j), {}};
    }
    std::string out = "nu = " + to_string(r.summary.nu) + ", length = " +
                      (r.length ? to_string(*r.length) : std::string("unavailable")) + "\n";
    return {out + diagram_table(r.summary.diagram), {}};
  }

  MonomialIdeal I = monomial_ideal(v);
  BehrendReport rep = nu_monomial(I);
  if (o.format == Format::Json) {
    json j = envelope("nu", input);
    j["engine"] = "newton";
    j["nu"] = jint(rep.nu);
    j["length"] = jint(rep.length);
    j["normal"] = rep.normal;
    json comps = json::array();
    for (const auto& c : rep.components) {
      json jc;
      jc["start"] = jpoint(c.edge.start);
      jc["end"] = jpoint(c.edge.end);
      jc["ray"] = jvec(c.edge.inward_ray);
      jc["lattice_length"] = jint(c.edge.lattice_length);
      jc["e"] = jint(c.e);
      jc["d"] = jint(c.d);
      jc["contribution"] = jint(c.contribution);
      comps.push_back(jc);
    }
    j["components"] = comps;
    if (!rep.normal)
      j["note"] = "not normal: distinct edges may map to one exceptional component";
    return {dump(j), {}};
  }
  std::vector<std::vector<std::string>> rows{{"edge", "ray", "e", "d", "d*e"}};
  for (const auto& c : rep.components) {
    rows.push_back({point_text(c.edge.start) + "-" + point_text(c.edge.end),
                    vec_text(c.edge.inward_ray), to_string(c.e), to_string(c.d),
                    to_string(c.contribution)});
  }
  std::string out = "nu = " + to_string(rep.nu) + ", length = " + to_string(rep.length) + "\n";
  out += table(rows);
  if (!rep.normal) out += "not normal: distinct edges may map to one exceptional component\n";
  return {out, {}};
}

RunResult cmd_normalize(const Value& v, const RunOptions& o) {
  MonomialIdeal I = monomial_ideal(v);
  require_fat_point(I);
  MonomialIdeal J = integral_closure(I);
  if (o.format == Format::Json) {
    json j = envelope("normalize", to_string(v));
    j["closure"] = to_string(J);
    json gens = json::array();
    for (auto it = J.generators().rbegin(); it != J.generators().rend(); ++it)
      gens.push_back(jpoint(*it));
    j["generators"] = gens;
    return {dump(j), {}};
  }
  return {to_string(J) + "\n", {}};
}

RunResult cmd_is_normal(const Value& v, const RunOptions& o) {
  MonomialIdeal I = monomial_ideal(v);
  ComponentCount c = component_count(I);
  if (o.format == Format::Json) {
    json j = envelope("normal?", to_string(v));
    j["normal"] = c.exact;
    j["components"] = {{"t", c.t}, {"exact", c.exact}};
    return {dump(j), {}};
  }
  std::string out = c.exact ? "normal\n" : "not normal\n";
  out += "exceptional components " + std::string(c.exact ? "= " : "<= ") + std::to_string(c.t) +
         "\n";
  return {out, {}};
}

RunResult cmd_factor(const Value& v, const RunOptions& o) {
  MonomialIdeal I = monomial_ideal(v);
  auto factors = factor_normal(I);
  if (o.format == Format::Json) {
    json j = envelope("factor", to_string(v));
    json fs = json::array();
    for (const auto& f : factors)
      fs.push_back({{"alpha", jint(f.alpha)}, {"beta", jint(f.beta)}, {"delta", jint(f.delta)}});
    j["factors"] = fs;
    j["text"] = to_string(std::span<const NabFactor>(factors));
    return {dump(j), {}};
  }
  return {to_string(std::span<const NabFactor>(factors)) + "\n", {}};
}

RunResult cmd_fan(const Value& v, const RunOptions& o) {
  MonomialIdeal I = monomial_ideal(v);
  Fan F = fan_of(I);
  RunResult r;
  if (o.svg) r.svg = fan_svg(F);
  if (o.format == Format::Json) {
    json j = envelope("fan", to_string(v));
    json rays = json::array();
    for (const auto& ray : F.rays) rays.push_back(jvec(ray));
    json cones = json::array();
    for (const auto& c : F.cones)
      cones.push_back({{"rays", json::array({jvec(c.first), jvec(c.second)})},
                       {"index", jint(c.index)},
                       {"label", c.label}});
    j["rays"] = rays;
    j["cones"] = cones;
    r.output = dump(j);
    return r;
  }
  std::vector<std::vector<std::string>> rows{{"cone", "index", "label"}};
  for (const auto& c : F.cones)
    rows.push_back({"<" + vec_text(c.first) + ", " + vec_text(c.second) + ">",
                    to_string(c.index), c.label});
  std::string out = "rays:";
  for (const auto& ray : F.rays) out += " " + vec_text(ray);
  r.output = out + "\n" + table(rows);
  return r;
}

RunResult cmd_dynkin(const Value& v, const RunOptions& o) {
  auto* p = std::get_if<FactorProduct>(&v);
  if (!p)
    throw UnsupportedError(to_string(v) +
                           " is not written as a product of towers; use tower(...), m or "
                           "(x, y^k) factors");
  TowerRun tr = run_towers(*p);
  RunResult r;
  if (o.svg) r.svg = dynkin_svg(tr.summary.diagram);
  if (o.format == Format::Json) {
    json j = envelope("dynkin", to_string(v));
    json d = diagram_json(tr.summary.diagram);
    j["nodes"] = d["nodes"];
    j["edges"] = d["edges"];
    j["nu"] = jint(tr.summary.nu);
    r.output = dump(j);
    return r;
  }
  r.output = to_dot(tr.summary.diagram);
  return r;
}

RunResult cmd_ferrers(const Value& v, const RunOptions& o) {
  MonomialIdeal I = monomial_ideal(v);
  require_finite_colength(I);
  FerrersDiagram F = ferrers(I);
  RunResult r;
  if (o.svg) r.svg = ferrers_svg(F);
  if (o.format == Format::Json) {
    json j = envelope("ferrers", to_string(v));
    json cols = json::array();
    for (const auto& h : F.column_heights) cols.push_back(jint(h));
    j["column_heights"] = cols;
    j["size"] = jint(F.size());
    r.output = dump(j);
    return r;
  }
  std::string cols;
  for (const auto& h : F.column_heights) cols += (cols.empty() ? "" : ", ") + to_string(h);
  r.output = ferrers_grid(F) + "columns = [" + cols + "], size = " + to_string(F.size()) + "\n";
  return r;
}

RunResult cmd_verify(const RunOptions& o) {
  Bounds b = bounds_preset(o.bounds);
  if (o.p_max) {
    if (*o.p_max == 0) throw DomainError("p_max must be positive");
    b.p_max = *o.p_max;
  }
  VerifyReport rep = verify_all(b, o.seed);
  if (o.format == Format::Json) {
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "verify";
    j["seed"] = rep.seed;
    j["bounds"] = b.preset;
    j["p_max"] = b.p_max;
    j["summary"] = {{"pass", rep.passed}, {"fail", rep.failed}, {"inconclusive", rep.inconclusive}};
    json results = json::array();
    for (const auto& r : rep.results)
      results.push_back({{"name", r.name},
                         {"instance", r.instance},
                         {"expected", r.expected},
                         {"actual", r.actual},
                         {"status", status_name(r.status)}});
    j["results"] = results;
    return {dump(j), {}, rep.failed > 0};
  }
  std::map<std::string, std::array<std::size_t, 3>> by_name;
  for (const auto& r : rep.results) ++by_name[r.name][static_cast<int>(r.status)];
  std::vector<std::vector<std::string>> rows{{"check", "pass", "fail", "inconclusive"}};
  for (const auto& [name, c] : by_name)
    rows.push_back({name, std::to_string(c[0]), std::to_string(c[1]), std::to_string(c[2])});
  std::string out = "seed = " + std::to_string(rep.seed) + ", bounds = " + b.preset +
                    ", p_max = " + std::to_string(b.p_max) + "\n";
  out += table(rows);
  out += "total: " + std::to_string(rep.passed) + " pass, " + std::to_string(rep.failed) +
         " fail, " + std::to_string(rep.inconclusive) + " inconclusive\n";
  for (const auto& r : rep.results) {
    if (r.status == CheckStatus::Pass) continue;
    out += std::string(status_name(r.status)) + ": " + r.name + " " + r.instance +
           "\n  expected " + r.expected + "\n  actual   " + r.actual + "\n";
  }
  return {out, {}, rep.failed > 0};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"length", "nu",     "normalize", "normal?", "factor",
                                              "fan",    "dynkin", "ferrers",   "verify"};
  return names;
}

RunResult run(const std::string& command, const std::string& expr, const RunOptions& options) {
  if (command == "verify") return cmd_verify(options);
  const bool known = std::find(command_names().begin(), command_names().end(), command) !=
                         command_names().end() ||
                     command == "is-normal";
  if (!known) throw UnsupportedError("unknown command '" + command + "'");
  if (options.svg && command != "fan" && command != "dynkin" && command != "ferrers")
    throw UnsupportedError("--svg is available for fan, dynkin and ferrers");
  Value v = evaluate(expr);
  if (command == "length") return cmd_length(v, options);
  if (command == "nu") return cmd_nu(v, options);
  if (command == "normalize") return cmd_normalize(v, options);
  if (command == "normal?" || command == "is-normal") return cmd_is_normal(v, options);
  if (command == "factor") return cmd_factor(v, options);
  if (command == "fan") return cmd_fan(v, options);
  if (command == "dynkin") return cmd_dynkin(v, options);
  return cmd_ferrers(v, options);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 1;
  if (dynamic_cast<const DomainError*>(&e)) return 2;
  if (dynamic_cast<const UnsupportedError*>(&e)) return 3;
  return 4;
}

}  // namespace behrend
