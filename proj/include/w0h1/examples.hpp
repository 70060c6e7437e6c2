#ifndef W0H1_EXAMPLES_HPP
#define W0H1_EXAMPLES_HPP

#include <map>
#include <string>
#include <vector>

#include "w0h1/scenario.hpp"

namespace w0h1 {

struct ExampleInfo {
  std::string name;
  std::string kind;
  std::string description;
  std::string reference;
  std::string params;  // accepted --param keys, empty if none
};

inline const std::vector<ExampleInfo>& list_examples() {
  static const std::vector<ExampleInfo> table = {
      {"ex_cone", "covering",
       "cone point kept: cyclic cover of the plane branched along b*{x=0} + "
       "{x^a+z^c=0}",
       "y^b = x^b (x^a + z^c) in C^3", "a,b,c"},
      {"ex_punctured_cone", "covering",
       "cone point removed: same cover with the origin deleted",
       "y^b = x^b (x^a + z^c) in C^3, minus the origin", "a,b,c"},
      {"ex_nodal", "stratified", "nodal cubic: one component, one node",
       "irreducible curve with a single ordinary double point", ""},
      {"ex_two_lines", "stratified",
       "two lines through a point: two components, one node",
       "union of two concurrent lines in the plane", ""},
      {"ex_bp_632", "spectrum",
       "Brieskorn-Pham spectrum with exponents (6,3,2)", "v^6 - x^3 - z^2", ""},
      {"ex_kunneth_quotient", "kunneth",
       "diagonal order-2 quotient of (two lines) x (elliptic curve)",
       "(X x E) / mu_2 with the swap on X and a translation on E", ""},
  };
  return table;
}

namespace detail {

inline std::size_t example_param(const std::map<std::string, std::string>& params,
                                 const std::string& key, std::size_t fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    const long v = std::stol(it->second);
    if (v < 0) throw std::out_of_range("negative");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw validation_error("parameter " + key + ": expected a nonnegative integer, got '" +
                           it->second + "'");
  }
}

inline CoveringSpec cone_cover(std::size_t b, std::size_t c, bool delete_origin) {
  CoveringSpec spec;
  spec.degree = b;
  spec.components = {{"D1", b, true, {}}, {"D2", 1, true, {}}};
  spec.special_points = {
      {"O", delete_origin, {{"D1", "br0"}, {"D2", "br0"}}}};
  spec.intersections = {{"O", "D1", "br0", "D2", c},
                        {"O", "D2", "br0", "D1", c}};
  return spec;
}

}  // namespace detail

inline Scenario make_example(const std::string& name,
                             const std::map<std::string, std::string>& params = {}) {
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& e : list_examples())
      if (e.name == name && e.params.find(key) != std::string::npos) known = true;
    if (!known)
      throw validation_error("example " + name + " does not take parameter '" +
                             key + "'");
  }

  Scenario s;
  s.name = name;
  if (name == "ex_cone" || name == "ex_punctured_cone") {
    const std::size_t b = detail::example_param(params, "b", 2);
    const std::size_t c = detail::example_param(params, "c", 2);
    detail::example_param(params, "a", 2);  // validated; absent from the model
    s.kind = "covering";
    s.payload = detail::cone_cover(b, c, name == "ex_punctured_cone");
  } else if (name == "ex_nodal") {
    s.kind = "stratified";
    StratifiedBranchData d;
    d.strata = {{"N", 2, {}, true}, {"U", 1, {}, false}};
    d.adjacencies = {{"N", "U", {0}}, {"N", "U", {1}}};
    s.payload = std::move(d);
  } else if (name == "ex_two_lines") {
    s.kind = "stratified";
    StratifiedBranchData d;
    d.strata = {{"P", 2, {}, true}, {"L1", 1, {}, false}, {"L2", 1, {}, false}};
    d.adjacencies = {{"P", "L1", {0}}, {"P", "L2", {1}}};
    s.payload = std::move(d);
  } else if (name == "ex_bp_632") {
    s.kind = "spectrum";
    s.payload = SpectrumParams{6, 3, 2};
  } else if (name == "ex_kunneth_quotient") {
    s.kind = "kunneth";
    KunnethScenario k;
    k.x.order = 2;
    k.x.generator = QMatrix(0, 0);  // H^1 of two lines vanishes
    k.z.order = 2;
    k.z.generator = QMatrix::identity(2);  // translation acts trivially on H^1
    k.e_equals_m = true;
    k.z_prime_smooth = true;
    s.payload = std::move(k);
  } else {
    throw validation_error("unknown example: " + name);
  }
  return s;
}

}  // namespace w0h1

#endif  // W0H1_EXAMPLES_HPP
