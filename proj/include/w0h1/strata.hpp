#ifndef W0H1_STRATA_HPP
#define W0H1_STRATA_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "w0h1/exactlin.hpp"

namespace w0h1 {

/// A stratum carrying its local-branch data: the number of local branches r
/// at a basepoint and the monodromy permutations of chosen generators of the
/// stratum's fundamental group acting on the branch set.
struct Stratum {
  std::string id;
  std::size_t branches = 1;  // r >= 1
  std::vector<Permutation> monodromy;
  bool closed = false;
};

/// deep ⊂ closure(generic). branch_map sends each branch at the generic
/// basepoint to the deep branch containing it, transported along one chosen
/// path; several adjacencies between the same pair encode several arcs.
struct Adjacency {
  std::string deep;
  std::string generic;
  std::vector<std::size_t> branch_map;  // size = r(generic), values < r(deep)
};

struct StratifiedBranchData {
  std::vector<Stratum> strata;
  std::vector<Adjacency> adjacencies;

  const Stratum& stratum(const std::string& id) const {
    for (const auto& s : strata)
      if (s.id == id) return s;
    throw validation_error("unknown stratum id: " + id);
  }

  std::size_t stratum_index(const std::string& id) const {
    for (std::size_t i = 0; i < strata.size(); ++i)
      if (strata[i].id == id) return i;
    throw validation_error("unknown stratum id: " + id);
  }

  void validate() const {
    std::set<std::string> ids;
    for (const auto& s : strata) {
      if (!ids.insert(s.id).second)
        throw validation_error("duplicate stratum id: " + s.id);
      if (s.branches < 1)
        throw validation_error("stratum " + s.id + ": branch count must be >= 1");
      for (const auto& g : s.monodromy)
        if (g.size() != s.branches)
          throw validation_error("stratum " + s.id +
                                 ": monodromy permutation size != branch count");
    }
    for (const auto& a : adjacencies) {
      const Stratum& d = stratum(a.deep);
      const Stratum& g = stratum(a.generic);
      if (a.deep == a.generic)
        throw validation_error("adjacency " + a.deep + " -> " + a.generic +
                               ": a stratum cannot bound itself");
      if (a.branch_map.size() != g.branches)
        throw validation_error("adjacency " + a.deep + " -> " + a.generic +
                               ": branch_map must cover every generic branch");
      for (auto v : a.branch_map)
        if (v >= d.branches)
          throw validation_error("adjacency " + a.deep + " -> " + a.generic +
                                 ": branch_map value out of range");
    }
    check_acyclic();
  }

 private:
  // deep ≺ generic must be a strict partial order: no cycles.
  void check_acyclic() const {
    std::map<std::string, std::vector<std::string>> succ;
    for (const auto& a : adjacencies) succ[a.deep].push_back(a.generic);
    std::map<std::string, int> state;  // 0 new, 1 active, 2 done
    for (const auto& s : strata) {
      std::vector<std::pair<std::string, std::size_t>> stack{{s.id, 0}};
      while (!stack.empty()) {
        auto& [id, next] = stack.back();
        if (next == 0) {
          if (state[id] == 2) {
            stack.pop_back();
            continue;
          }
          state[id] = 1;
        }
        auto it = succ.find(id);
        if (it == succ.end() || next >= it->second.size()) {
          state[id] = 2;
          stack.pop_back();
          continue;
        }
        const std::string& nxt = it->second[next++];
        if (state[nxt] == 1)
          throw validation_error("adjacency relation has a cycle through " + nxt);
        if (state[nxt] == 0) stack.emplace_back(nxt, 0);
      }
    }
  }
};

/// Stalk dimension of the branch cokernel: r - 1.
inline std::size_t stalk_dim(std::size_t r) {
  if (r == 0) throw validation_error("stalk_dim: branch count must be >= 1");
  return r - 1;
}

namespace detail {

/// Permutation action on the cokernel of the diagonal in Q^r, written in the
/// coordinates w_a = v_a - v_0 (a = 1..r-1).
inline QMatrix coker_action(const Permutation& g) {
  const std::size_t r = g.size();
  const Permutation ginv = g.inverse();
  QMatrix m(r - 1, r - 1);
  for (std::size_t a = 1; a < r; ++a) {
    const std::size_t src = ginv(a);    // (g·w)_a = w_{g^{-1}(a)} - w_{g^{-1}(0)}
    const std::size_t base = ginv(0);
    if (src != 0) m.at(a - 1, src - 1) += 1;
    if (base != 0) m.at(a - 1, base - 1) -= 1;
  }
  return m;
}

}  // namespace detail

/// dim of the monodromy-invariant part of the stalk cokernel. Computed both
/// as orbit_count - 1 and as the fixed subspace of the quotient
/// representation; the two routes must agree.
inline std::size_t stalk_invariant_dim(const Stratum& s) {
  const std::size_t via_orbits = orbit_count(s.branches, s.monodromy) - 1;
  if (s.branches > 1) {
    std::vector<QMatrix> gens;
    gens.reserve(s.monodromy.size());
    for (const auto& g : s.monodromy) gens.push_back(detail::coker_action(g));
    const std::size_t via_kernel = fixed_subspace_dim(gens, s.branches - 1);
    if (via_kernel != via_orbits)
      throw computation_error("stalk_invariant_dim: orbit and kernel routes disagree");
  }
  return via_orbits;
}

struct CompositionReport {
  bool ok = true;
  std::vector<std::string> warnings;
  std::vector<std::string> violations;
};

namespace detail {

inline constexpr std::size_t kGroupCap = 10000;

/// Breadth-first closure of the generated permutation group; empty result
/// means the cap was exceeded.
inline std::set<Permutation> group_closure(std::size_t n,
                                           const std::vector<Permutation>& gens,
                                           std::size_t cap = kGroupCap) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = g.compose(p);
        if (seen.insert(q).second) {
          if (seen.size() > cap) return {};
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace detail

/// Validates closure-transitivity of recorded adjacencies: for every chain
/// S_i ≺ S_j ≺ S_k with all three adjacencies recorded, the composite branch
/// map must agree with some direct map up to the monodromy of S_k.
inline CompositionReport check_composition(const StratifiedBranchData& d) {
  CompositionReport report;
  for (const auto& a1 : d.adjacencies) {          // S_i ≺ S_j
    for (const auto& a2 : d.adjacencies) {        // S_j ≺ S_k
      if (a2.deep != a1.generic) continue;
      std::vector<const Adjacency*> direct;       // S_i ≺ S_k
      for (const auto& a3 : d.adjacencies)
        if (a3.deep == a1.deep && a3.generic == a2.generic) direct.push_back(&a3);
      if (direct.empty()) continue;

      const Stratum& sk = d.stratum(a2.generic);
      const auto group = detail::group_closure(sk.branches, sk.monodromy);
      const std::string chain = a1.deep + " < " + a1.generic + " < " + a2.generic;
      if (group.empty()) {
        report.warnings.push_back("chain " + chain +
                                  ": group too large to verify; skipped");
        continue;
      }
      bool matched = false;
      for (const Adjacency* a3 : direct) {
        for (const auto& g : group) {
          bool eq = true;
          for (std::size_t b = 0; b < sk.branches && eq; ++b)
            eq = a1.branch_map[a2.branch_map[g(b)]] == a3->branch_map[b];
          if (eq) {
            matched = true;
            break;
          }
        }
        if (matched) break;
      }
      if (!matched) {
        report.ok = false;
        report.violations.push_back(
            "chain " + chain +
            ": composite branch map differs from every direct map, even up to "
            "the monodromy of " + a2.generic);
      }
    }
  }
  return report;
}

/// dim of the space of global sections: tuples of monodromy-invariant stalk
/// classes matching under every specialization map. Assembled as the kernel
/// of one exact linear system whose unknowns are orbit-indicator coordinates
/// of each stalk's invariant part.
inline std::size_t global_sections_dim(const StratifiedBranchData& d,
                                       bool validate_composition = false) {
  d.validate();
  if (validate_composition) {
    const auto rep = check_composition(d);
    if (!rep.ok)
      throw computation_error("composition inconsistency: " + rep.violations.front());
  }

  // Per stratum: orbit labels on branches and the column range of its
  // unknowns. Invariant classes are spanned by orbit indicators; one orbit
  // (label 0) is dropped since indicators sum to the diagonal class.
  struct StalkInfo {
    std::vector<std::size_t> labels;
    std::size_t first_col = 0;
    std::size_t ncols = 0;  // orbit count - 1
  };
  std::vector<StalkInfo> info(d.strata.size());
  std::size_t ncols = 0;
  for (std::size_t i = 0; i < d.strata.size(); ++i) {
    const Stratum& s = d.strata[i];
    info[i].labels = orbit_labels(s.branches, s.monodromy);
    std::size_t orbits = 0;
    for (auto l : info[i].labels) orbits = std::max(orbits, l + 1);
    info[i].first_col = ncols;
    info[i].ncols = orbits - 1;
    ncols += info[i].ncols;
  }

  // Lifted stalk value at a branch: coefficient row over the unknowns.
  auto value_at = [&](std::size_t stratum, std::size_t branch,
                      QMatrix& m, std::size_t row, const Rational& sign) {
    const StalkInfo& si = info[stratum];
    const std::size_t label = si.labels[branch];
    if (label > 0) m.at(row, si.first_col + label - 1) += sign;
  };

  std::size_t nrows = 0;
  for (const auto& a : d.adjacencies) nrows += d.stratum(a.generic).branches - 1;

  QMatrix sys(nrows, ncols);
  std::size_t row = 0;
  for (const auto& a : d.adjacencies) {
    const std::size_t di = d.stratum_index(a.deep);
    const std::size_t gi = d.stratum_index(a.generic);
    const std::size_t rg = d.strata[gi].branches;
    // Class equality in the generic cokernel: compare coordinates relative
    // to branch 0.
    for (std::size_t b = 1; b < rg; ++b, ++row) {
      value_at(di, a.branch_map[b], sys, row, 1);
      value_at(di, a.branch_map[0], sys, row, -1);
      value_at(gi, b, sys, row, -1);
      value_at(gi, 0, sys, row, 1);
    }
  }
  return nullity(sys);
}

/// Connected components of the space: strata joined along adjacencies.
inline std::size_t b0_space(const StratifiedBranchData& d) {
  d.validate();
  UnionFind uf(d.strata.size());
  for (const auto& a : d.adjacencies)
    uf.unite(d.stratum_index(a.deep), d.stratum_index(a.generic));
  return uf.components();
}

/// Connected components of the normalization, computed on the incidence
/// graph of all branch elements: monodromy edges within a stratum, and
/// branch_map edges along every adjacency arc.
inline std::size_t b0_normalization(const StratifiedBranchData& d) {
  d.validate();
  std::vector<std::size_t> offset(d.strata.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < d.strata.size(); ++i) {
    offset[i] = total;
    total += d.strata[i].branches;
  }
  UnionFind uf(total);
  for (std::size_t i = 0; i < d.strata.size(); ++i)
    for (const auto& g : d.strata[i].monodromy)
      for (std::size_t b = 0; b < d.strata[i].branches; ++b)
        uf.unite(offset[i] + b, offset[i] + g(b));
  for (const auto& a : d.adjacencies) {
    const std::size_t di = d.stratum_index(a.deep);
    const std::size_t gi = d.stratum_index(a.generic);
    for (std::size_t b = 0; b < a.branch_map.size(); ++b)
      uf.unite(offset[gi] + b, offset[di] + a.branch_map[b]);
  }
  return uf.components();
}

}  // namespace w0h1

#endif  // W0H1_STRATA_HPP
