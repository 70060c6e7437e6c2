#ifndef W0H1_SCENARIO_HPP
#define W0H1_SCENARIO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "w0h1/covers.hpp"
#include "w0h1/kunneth.hpp"
#include "w0h1/spectrum.hpp"
#include "w0h1/strata.hpp"
#include "w0h1/weights.hpp"

namespace w0h1 {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

struct SpectrumParams {
  std::size_t a = 2, b = 2, c = 2;
};

struct KunnethScenario {
  CyclicAction x;
  CyclicAction z;
  bool e_equals_m = false;
  bool z_prime_smooth = false;
};

struct Scenario {
  std::string kind;
  std::string name;
  std::variant<StratifiedBranchData, CoveringSpec, SpectrumParams,
               KunnethScenario, CurveDualGraph>
      payload;
};

namespace detail {

inline const json& require_field(const json& j, const char* field,
                                 const std::string& path) {
  if (!j.is_object())
    throw validation_error(path + ": expected an object");
  auto it = j.find(field);
  if (it == j.end())
    throw validation_error(path + ": missing field '" + field + "'");
  return *it;
}

inline std::size_t get_count(const json& j, const char* field,
                             const std::string& path) {
  const json& v = require_field(j, field, path);
  if (!v.is_number_unsigned())
    throw validation_error(path + "." + field + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

inline std::string get_string(const json& j, const char* field,
                              const std::string& path) {
  const json& v = require_field(j, field, path);
  if (!v.is_string())
    throw validation_error(path + "." + field + ": expected a string");
  return v.get<std::string>();
}

inline bool get_bool_or(const json& j, const char* field, bool fallback,
                        const std::string& path) {
  if (!j.is_object() || !j.contains(field)) return fallback;
  if (!j[field].is_boolean())
    throw validation_error(path + "." + field + ": expected a boolean");
  return j[field].get<bool>();
}

inline std::vector<std::size_t> get_index_array(const json& v,
                                                const std::string& path) {
  if (!v.is_array())
    throw validation_error(path + ": expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_unsigned())
      throw validation_error(path + "[" + std::to_string(i) +
                             "]: expected a nonnegative integer");
    out.push_back(v[i].get<std::size_t>());
  }
  return out;
}

inline QMatrix parse_matrix(const json& v, const std::string& path) {
  if (!v.is_array())
    throw validation_error(path + ": expected an array of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!v[0].is_array())
      throw validation_error(path + "[0]: expected an array of rational strings");
    cols = v[0].size();
  }
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rpath = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != cols)
      throw validation_error(rpath + ": ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!v[i][j].is_string())
        throw validation_error(rpath + "[" + std::to_string(j) +
                               "]: matrix entries are rational strings \"p/q\"");
      m.at(i, j) = parse_rational(v[i][j].get<std::string>());
    }
  }
  return m;
}

inline StratifiedBranchData parse_stratified(const json& j) {
  StratifiedBranchData d;
  const json& strata = require_field(j, "strata", "scenario");
  if (!strata.is_array()) throw validation_error("strata: expected an array");
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string path = "strata[" + std::to_string(i) + "]";
    Stratum s;
    s.id = get_string(strata[i], "id", path);
    s.branches = get_count(strata[i], "branches", path);
    s.closed = get_bool_or(strata[i], "closed", false, path);
    if (strata[i].contains("monodromy")) {
      const json& mon = strata[i]["monodromy"];
      if (!mon.is_array())
        throw validation_error(path + ".monodromy: expected an array");
      for (std::size_t g = 0; g < mon.size(); ++g) {
        const std::string gpath =
            path + ".monodromy[" + std::to_string(g) + "]";
        try {
          s.monodromy.emplace_back(get_index_array(mon[g], gpath));
        } catch (const validation_error& e) {
          throw validation_error(gpath + ": " + e.what());
        }
      }
    }
    d.strata.push_back(std::move(s));
  }
  if (j.contains("adjacencies")) {
    const json& adj = j["adjacencies"];
    if (!adj.is_array()) throw validation_error("adjacencies: expected an array");
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const std::string path = "adjacencies[" + std::to_string(i) + "]";
      Adjacency a;
      a.deep = get_string(adj[i], "deep", path);
      a.generic = get_string(adj[i], "generic", path);
      a.branch_map =
          get_index_array(require_field(adj[i], "branch_map", path),
                          path + ".branch_map");
      d.adjacencies.push_back(std::move(a));
    }
  }
  d.validate();
  return d;
}

inline CoveringSpec parse_covering(const json& j) {
  CoveringSpec spec;
  spec.degree = get_count(j, "degree", "scenario");
  const json& comps = require_field(j, "components", "scenario");
  if (!comps.is_array()) throw validation_error("components: expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "components[" + std::to_string(i) + "]";
    CoveringComponent c;
    c.id = get_string(comps[i], "id", path);
    c.multiplicity = get_count(comps[i], "multiplicity", path);
    c.h1_is_zero = get_bool_or(comps[i], "h1_is_zero", true, path);
    if (comps[i].contains("explicit_shifts"))
      c.explicit_shifts = get_index_array(comps[i]["explicit_shifts"],
                                          path + ".explicit_shifts");
    spec.components.push_back(std::move(c));
  }
  if (j.contains("special_points")) {
    const json& pts = j["special_points"];
    if (!pts.is_array())
      throw validation_error("special_points: expected an array");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string path = "special_points[" + std::to_string(i) + "]";
      SpecialPoint p;
      p.id = get_string(pts[i], "id", path);
      p.deleted = get_bool_or(pts[i], "deleted", false, path);
      const json& brs = require_field(pts[i], "branches", path);
      if (!brs.is_array())
        throw validation_error(path + ".branches: expected an array");
      for (std::size_t k = 0; k < brs.size(); ++k) {
        const std::string bpath = path + ".branches[" + std::to_string(k) + "]";
        p.branches.push_back({get_string(brs[k], "component", bpath),
                              get_string(brs[k], "branch", bpath)});
      }
      spec.special_points.push_back(std::move(p));
    }
  }
  if (j.contains("intersections")) {
    const json& ints = j["intersections"];
    if (!ints.is_array())
      throw validation_error("intersections: expected an array");
    for (std::size_t i = 0; i < ints.size(); ++i) {
      const std::string path = "intersections[" + std::to_string(i) + "]";
      IntersectionEntry e;
      e.point = get_string(ints[i], "point", path);
      e.component = get_string(ints[i], "component", path);
      e.branch = get_string(ints[i], "branch", path);
      e.other = get_string(ints[i], "other", path);
      e.value = get_count(ints[i], "value", path);
      spec.intersections.push_back(std::move(e));
    }
  }
  spec.validate();
  return spec;
}

inline CyclicAction parse_action(const json& j, std::size_t order,
                                 const std::string& path) {
  CyclicAction a;
  a.order = order;
  a.generator = parse_matrix(require_field(j, "generator", path),
                             path + ".generator");
  a.validate();
  return a;
}

inline KunnethScenario parse_kunneth(const json& j) {
  KunnethScenario k;
  const std::size_t order = get_count(j, "order", "scenario");
  k.x = parse_action(require_field(j, "x", "scenario"), order, "x");
  k.z = parse_action(require_field(j, "z", "scenario"), order, "z");
  k.e_equals_m = get_bool_or(j, "e_equals_m", false, "scenario");
  k.z_prime_smooth = get_bool_or(j, "z_prime_smooth", false, "scenario");
  return k;
}

inline CurveDualGraph parse_curve_graph(const json& j) {
  CurveDualGraph g;
  const json& verts = require_field(j, "vertices", "scenario");
  if (!verts.is_array()) throw validation_error("vertices: expected an array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!verts[i].is_string())
      throw validation_error("vertices[" + std::to_string(i) +
                             "]: expected a string");
    g.vertices.push_back(verts[i].get<std::string>());
  }
  if (j.contains("edges")) {
    const json& edges = j["edges"];
    if (!edges.is_array()) throw validation_error("edges: expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string path = "edges[" + std::to_string(i) + "]";
      if (!edges[i].is_array() || edges[i].size() != 2 ||
          !edges[i][0].is_string() || !edges[i][1].is_string())
        throw validation_error(path + ": expected a pair of vertex ids");
      g.edges.emplace_back(edges[i][0].get<std::string>(),
                           edges[i][1].get<std::string>());
    }
  }
  g.validate();
  return g;
}

}  // namespace detail

inline Scenario parse_scenario(const json& j, const std::string& fallback_name) {
  Scenario s;
  s.kind = detail::get_string(j, "kind", "scenario");
  s.name = j.contains("name") && j["name"].is_string()
               ? j["name"].get<std::string>()
               : fallback_name;
  if (s.kind == "stratified")
    s.payload = detail::parse_stratified(j);
  else if (s.kind == "covering")
    s.payload = detail::parse_covering(j);
  else if (s.kind == "spectrum")
    s.payload = SpectrumParams{detail::get_count(j, "a", "scenario"),
                               detail::get_count(j, "b", "scenario"),
                               detail::get_count(j, "c", "scenario")};
  else if (s.kind == "kunneth")
    s.payload = detail::parse_kunneth(j);
  else if (s.kind == "curve_graph")
    s.payload = detail::parse_curve_graph(j);
  else
    throw validation_error(
        "scenario.kind must be one of stratified, covering, spectrum, "
        "kunneth, curve_graph; got '" + s.kind + "'");
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open scenario file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw validation_error("JSON parse error in " + path + ": " + e.what());
  }
  return parse_scenario(j, path);
}

struct RunResult {
  std::string text;
  ojson report;
};

namespace detail {

// Component count by depth-first search; independent of the union-find route.
inline std::size_t dfs_components(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (auto v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
  }
  return comps;
}

inline void oracle_check(bool ok, const std::string& what) {
  if (!ok) throw computation_error("oracle mismatch: " + what);
}

/// Brute-force cross-checks on a branch-data model.
inline void run_branch_data_oracles(const StratifiedBranchData& d,
                                    const WeightReport& r) {
  oracle_check(r.identity_holds(), "weight report rank identity");
  oracle_check(r.dim_w0_h1 <= r.dim_h0_F, "W0 H^1 exceeds dim H^0(F)");

  std::size_t invariant_sum = 0;
  for (const auto& s : d.strata) invariant_sum += stalk_invariant_dim(s);
  oracle_check(r.dim_h0_F <= invariant_sum,
               "global sections exceed the sum of stalk invariants");

  // b0 of the space by DFS.
  std::vector<std::pair<std::size_t, std::size_t>> space_edges;
  for (const auto& a : d.adjacencies)
    space_edges.emplace_back(d.stratum_index(a.deep), d.stratum_index(a.generic));
  oracle_check(dfs_components(d.strata.size(), space_edges) == r.b0_X,
               "b0 of the space (DFS route)");

  // b0 of the normalization by DFS on the branch incidence graph.
  std::vector<std::size_t> offset(d.strata.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < d.strata.size(); ++i) {
    offset[i] = total;
    total += d.strata[i].branches;
  }
  std::vector<std::pair<std::size_t, std::size_t>> norm_edges;
  for (std::size_t i = 0; i < d.strata.size(); ++i)
    for (const auto& g : d.strata[i].monodromy)
      for (std::size_t b = 0; b < d.strata[i].branches; ++b)
        norm_edges.emplace_back(offset[i] + b, offset[i] + g(b));
  for (const auto& a : d.adjacencies) {
    const std::size_t di = d.stratum_index(a.deep);
    const std::size_t gi = d.stratum_index(a.generic);
    for (std::size_t b = 0; b < a.branch_map.size(); ++b)
      norm_edges.emplace_back(offset[gi] + b, offset[di] + a.branch_map[b]);
  }
  oracle_check(dfs_components(total, norm_edges) == r.b0_norm,
               "b0 of the normalization (DFS route)");
}

inline std::string render_report(const std::string& name, const std::string& kind,
                                 const WeightReport& r) {
  std::ostringstream os;
  os << "scenario: " << name << " (" << kind << ")\n"
     << "  b0(space)               " << r.b0_X << "\n"
     << "  b0(normalization)       " << r.b0_norm << "\n"
     << "  dim H^0(F)              " << r.dim_h0_F << "\n"
     << "  dim W0 H^1              " << r.dim_w0_h1 << "\n";
  return os.str();
}

inline ojson report_json(const std::string& name, const std::string& kind,
                         const WeightReport& r) {
  ojson j;
  j["name"] = name;
  j["kind"] = kind;
  j["b0_X"] = r.b0_X;
  j["b0_norm"] = r.b0_norm;
  j["dim_h0_F"] = r.dim_h0_F;
  j["dim_w0_h1"] = r.dim_w0_h1;
  return j;
}

}  // namespace detail

inline RunResult run(const Scenario& s, bool run_oracles = false) {
  RunResult out;
  if (const auto* d = std::get_if<StratifiedBranchData>(&s.payload)) {
    const WeightReport r = full_pipeline(*d, run_oracles);
    if (run_oracles) detail::run_branch_data_oracles(*d, r);
    out.text = detail::render_report(s.name, s.kind, r);
    out.report = detail::report_json(s.name, s.kind, r);
  } else if (const auto* spec = std::get_if<CoveringSpec>(&s.payload)) {
    const StratifiedBranchData d = compile(*spec);
    const WeightReport r = full_pipeline(d, run_oracles);
    if (run_oracles) detail::run_branch_data_oracles(d, r);
    const bool irr = irreducibility_hint(*spec);
    out.text = detail::render_report(s.name, s.kind, r) +
               "  irreducible (sufficient test only): " + (irr ? "yes" : "unknown") +
               "\n";
    out.report = detail::report_json(s.name, s.kind, r);
    out.report["irreducibility_hint"] = irr;
  } else if (const auto* sp = std::get_if<SpectrumParams>(&s.payload)) {
    const SpectrumPoly poly = bp_spectrum(sp->a, sp->b, sp->c);
    const std::size_t mu = milnor_number(sp->a, sp->b, sp->c);
    const std::size_t h1 = unipotent_h1_dim(sp->a, sp->b, sp->c);
    if (run_oracles) {
      detail::oracle_check(poly.total_mass() == mu, "spectrum total mass");
      // Independent lattice count over the integers.
      std::size_t at_one = 0;
      for (std::size_t i = 1; i < sp->a; ++i)
        for (std::size_t j = 1; j < sp->b; ++j)
          for (std::size_t k = 1; k < sp->c; ++k)
            if (i * sp->b * sp->c + j * sp->a * sp->c + k * sp->a * sp->b ==
                sp->a * sp->b * sp->c)
              ++at_one;
      detail::oracle_check(h1 == 2 * at_one, "lattice count at exponent 1");
      for (const auto& [e, k] : poly.terms) {
        detail::oracle_check(e > 0 && e < 3, "spectrum support in (0,3)");
        detail::oracle_check(poly.multiplicity(Rational(3) - e) == k,
                             "spectrum symmetry");
      }
    }
    std::ostringstream os;
    os << "scenario: " << s.name << " (spectrum)\n"
       << "  exponents (a,b,c)       (" << sp->a << "," << sp->b << "," << sp->c
       << ")\n"
       << "  milnor number           " << mu << "\n"
       << "  dim H^1 (unipotent)     " << h1 << "\n"
       << "  spectrum               ";
    for (const auto& [e, k] : poly.terms) os << " " << to_string(e) << ":" << k;
    os << "\n";
    out.text = os.str();
    out.report["name"] = s.name;
    out.report["kind"] = s.kind;
    out.report["a"] = sp->a;
    out.report["b"] = sp->b;
    out.report["c"] = sp->c;
    out.report["milnor_number"] = mu;
    out.report["unipotent_h1_dim"] = h1;
    ojson terms = ojson::object();
    for (const auto& [e, k] : poly.terms) terms[to_string(e)] = k;
    out.report["spectrum"] = terms;
  } else if (const auto* k = std::get_if<KunnethScenario>(&s.payload)) {
    const std::size_t inv_x = invariant_dim(k->x);
    const std::size_t inv_z = invariant_dim(k->z);
    const std::size_t h1 = quotient_h1_dim(k->x, k->z);
    if (run_oracles) {
      detail::oracle_check(averaging_projector_rank(k->x) == inv_x,
                           "averaging projector rank (x factor)");
      detail::oracle_check(averaging_projector_rank(k->z) == inv_z,
                           "averaging projector rank (z factor)");
    }
    const bool w0_vanishes = k->e_equals_m && k->z_prime_smooth;
    std::ostringstream os;
    os << "scenario: " << s.name << " (kunneth)\n"
       << "  order                   " << k->x.order << "\n"
       << "  invariant dim (x)       " << inv_x << "\n"
       << "  invariant dim (z)       " << inv_z << "\n"
       << "  dim H^1(quotient)       " << h1 << "\n";
    if (w0_vanishes)
      os << "  dim W0 H^1              0 (full-order action over a smooth "
            "quotient)\n";
    out.text = os.str();
    out.report["name"] = s.name;
    out.report["kind"] = s.kind;
    out.report["order"] = k->x.order;
    out.report["invariant_dim_x"] = inv_x;
    out.report["invariant_dim_z"] = inv_z;
    out.report["quotient_h1_dim"] = h1;
    if (w0_vanishes) out.report["dim_w0_h1"] = 0;
  } else if (const auto* g = std::get_if<CurveDualGraph>(&s.payload)) {
    const std::size_t w0 = curve_w0_from_graph(*g);
    const StratifiedBranchData d = curve_graph_to_branch_data(*g);
    const WeightReport r = full_pipeline(d);
    if (r.dim_w0_h1 != w0)
      throw computation_error(
          "curve pipeline and dual-graph Betti number disagree");
    if (run_oracles) detail::run_branch_data_oracles(d, r);
    out.text = detail::render_report(s.name, s.kind, r) +
               "  dual-graph Betti        " + std::to_string(w0) + "\n";
    out.report = detail::report_json(s.name, s.kind, r);
  }
  return out;
}

}  // namespace w0h1

#endif  // W0H1_SCENARIO_HPP
