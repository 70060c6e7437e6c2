#ifndef W0H1_WEIGHTS_HPP
#define W0H1_WEIGHTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "w0h1/strata.hpp"

namespace w0h1 {

/// The four terms of the weight-zero rank bookkeeping:
/// dim_w0_h1 = dim_h0_F - b0_norm + b0_X.
struct WeightReport {
  std::size_t b0_X = 0;
  std::size_t b0_norm = 0;
  std::size_t dim_h0_F = 0;
  std::size_t dim_w0_h1 = 0;

  /// Rank identity of the defining exact sequence; holds for every report.
  bool identity_holds() const {
    return b0_X + dim_h0_F == b0_norm + dim_w0_h1;
  }
};

/// dim W0 H^1 = dim H^0(F) - b0(normalization) + b0(space). A negative value
/// cannot arise from a geometric configuration and is rejected.
inline std::size_t w0_h1(std::size_t dim_h0_F, std::size_t b0_norm,
                         std::size_t b0_X) {
  if (dim_h0_F + b0_X < b0_norm)
    throw computation_error(
        "w0_h1: inconsistent input data (negative weight-zero dimension)");
  return dim_h0_F + b0_X - b0_norm;
}

inline WeightReport full_pipeline(const StratifiedBranchData& d,
                                  bool validate_composition = false) {
  WeightReport r;
  r.dim_h0_F = global_sections_dim(d, validate_composition);
  r.b0_X = b0_space(d);
  r.b0_norm = b0_normalization(d);
  r.dim_w0_h1 = w0_h1(r.dim_h0_F, r.b0_norm, r.b0_X);
  return r;
}

/// Dual graph of a curve: a vertex per normalization component, an edge per
/// identified branch pair. Loops and parallel edges allowed.
struct CurveDualGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  std::size_t vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == id) return i;
    throw validation_error("unknown dual-graph vertex: " + id);
  }

  void validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
      if (!seen.insert(v).second)
        throw validation_error("duplicate dual-graph vertex: " + v);
    for (const auto& [u, v] : edges) {
      vertex_index(u);
      vertex_index(v);
    }
  }
};

/// First Betti number of the dual graph: E - V + C.
inline std::size_t curve_w0_from_graph(const CurveDualGraph& g) {
  g.validate();
  UnionFind uf(g.vertices.size());
  for (const auto& [u, v] : g.edges) uf.unite(g.vertex_index(u), g.vertex_index(v));
  return g.edges.size() + uf.components() - g.vertices.size();
}

/// Deterministic translation of a curve dual graph into branch data: one
/// open unibranch stratum per component, one closed two-branch stratum per
/// node, with one adjacency arc per incident branch.
inline StratifiedBranchData curve_graph_to_branch_data(const CurveDualGraph& g) {
  g.validate();
  StratifiedBranchData d;
  for (const auto& v : g.vertices) d.strata.push_back({"comp:" + v, 1, {}, false});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::string node = "node:" + std::to_string(e);
    d.strata.push_back({node, 2, {}, true});
    d.adjacencies.push_back({node, "comp:" + g.edges[e].first, {0}});
    d.adjacencies.push_back({node, "comp:" + g.edges[e].second, {1}});
  }
  return d;
}

}  // namespace w0h1

#endif  // W0H1_WEIGHTS_HPP
