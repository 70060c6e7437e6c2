#ifndef W0H1_COVERS_HPP
#define W0H1_COVERS_HPP

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "w0h1/germ.hpp"
#include "w0h1/strata.hpp"

namespace w0h1 {

/// One irreducible component of the branch divisor.
struct CoveringComponent {
  std::string id;
  std::size_t multiplicity = 1;  // a_i >= 1
  bool h1_is_zero = true;
  /// Extra monodromy shifts (mod the local torsor size) for components whose
  /// global monodromy is not determined by the local data.
  std::vector<std::size_t> explicit_shifts;
};

struct IncidentBranch {
  std::string component;
  std::string branch;  // branch of the component's normalization at the point
};

/// A point of the base where several divisor branches meet. A deleted point
/// is removed from the space but still punctures the incident components, so
/// it contributes monodromy and no stratum.
struct SpecialPoint {
  std::string id;
  bool deleted = false;
  std::vector<IncidentBranch> branches;
};

/// Local intersection number of a branch of one component against another
/// component at a special point.
struct IntersectionEntry {
  std::string point;
  std::string component;
  std::string branch;
  std::string other;
  std::size_t value = 1;
};

struct CoveringSpec {
  std::size_t degree = 2;  // m
  std::vector<CoveringComponent> components;
  std::vector<SpecialPoint> special_points;
  std::vector<IntersectionEntry> intersections;

  const CoveringComponent& component(const std::string& id) const {
    for (const auto& c : components)
      if (c.id == id) return c;
    throw validation_error("unknown component id: " + id);
  }

  const std::size_t* intersection(const std::string& point,
                                  const std::string& component,
                                  const std::string& branch,
                                  const std::string& other) const {
    for (const auto& e : intersections)
      if (e.point == point && e.component == component && e.branch == branch &&
          e.other == other)
        return &e.value;
    return nullptr;
  }

  void validate() const {
    if (degree < 2) throw validation_error("covering degree must be >= 2");
    std::set<std::string> ids;
    for (const auto& c : components) {
      if (!ids.insert(c.id).second)
        throw validation_error("duplicate component id: " + c.id);
      if (c.multiplicity < 1)
        throw validation_error("component " + c.id + ": multiplicity must be >= 1");
    }
    std::set<std::string> pids;
    for (const auto& p : special_points) {
      if (!pids.insert(p.id).second)
        throw validation_error("duplicate special point id: " + p.id);
      if (p.branches.empty())
        throw validation_error("special point " + p.id +
                               " lists no incident branch");
      for (const auto& b : p.branches) component(b.component);
    }
    for (const auto& e : intersections) {
      component(e.component);
      component(e.other);
      if (!pids.count(e.point))
        throw validation_error("intersection entry references unknown point: " +
                               e.point);
      if (e.value < 1)
        throw validation_error("intersection numbers must be >= 1");
    }
    // Completeness: every branch needs its pairing against every other
    // component incident at the same point.
    for (const auto& p : special_points) {
      std::set<std::string> incident;
      for (const auto& b : p.branches) incident.insert(b.component);
      for (const auto& b : p.branches)
        for (const auto& other : incident) {
          if (other == b.component) continue;
          if (!intersection(p.id, b.component, b.branch, other))
            throw validation_error("missing intersection entry for component " +
                                   b.component + " (branch " + b.branch +
                                   ") against " + other + " at point " + p.id);
        }
    }
  }
};

namespace detail {

inline std::size_t gcd_with_all(std::size_t m, const std::vector<std::size_t>& xs) {
  std::size_t g = m;
  for (auto x : xs) g = std::gcd(g, x);
  return g;
}

}  // namespace detail

/// Number of local branches of the covering over a point of the divisor:
/// GCD of the degree and the multiplicities present there.
inline std::size_t branch_count(std::size_t m, const std::vector<std::size_t>& mults) {
  if (m < 2) throw validation_error("branch_count: degree must be >= 2");
  if (mults.empty())
    throw validation_error(
        "branch_count: point not on the divisor (empty multiplicity set)");
  return detail::gcd_with_all(m, mults);
}

/// Size of the branch torsor over a stratum: same GCD formula as
/// branch_count, in its torsor role.
inline std::size_t local_group_order(std::size_t m,
                                     const std::vector<std::size_t>& mults) {
  return branch_count(m, mults);
}

/// Local monodromy around a puncture as a translation on the torsor.
/// The generator convention is fixed so the stored shift is +m_k.
inline std::size_t monodromy_shift(std::size_t e, std::size_t m_k) {
  if (e == 0) throw validation_error("monodromy_shift: torsor size must be >= 1");
  return m_k % e;
}

/// Weighted intersection sum over the other components at the point:
/// sum over j != i of a_j * (branch of D_i, D_j) at y.
inline std::size_t surface_multiplicity(const CoveringSpec& spec,
                                        const std::string& component_id,
                                        const std::string& point_id,
                                        const std::string& branch_id) {
  const SpecialPoint* point = nullptr;
  for (const auto& p : spec.special_points)
    if (p.id == point_id) point = &p;
  if (!point) throw validation_error("unknown special point: " + point_id);

  std::set<std::string> incident;
  for (const auto& b : point->branches) incident.insert(b.component);

  std::size_t total = 0;
  for (const auto& other : incident) {
    if (other == component_id) continue;
    const std::size_t* v =
        spec.intersection(point_id, component_id, branch_id, other);
    if (!v)
      throw validation_error("missing intersection entry for component " +
                             component_id + " (branch " + branch_id +
                             ") against " + other + " at point " + point_id);
    total += spec.component(other).multiplicity * *v;
  }
  return total;
}

/// Sufficient irreducibility test: GCD of the degree and all multiplicities
/// is 1. The converse can fail, so this is a hint only.
inline bool irreducibility_hint(const CoveringSpec& spec) {
  std::vector<std::size_t> mults;
  for (const auto& c : spec.components) mults.push_back(c.multiplicity);
  return detail::gcd_with_all(spec.degree, mults) == 1;
}

/// Compiles the covering into branch data:
///   - one unibranch stratum per connected sheet of the covering away from
///     the divisor (their count is the GCD of the degree with every
///     multiplicity),
///   - one open stratum per divisor component, a torsor of size
///     GCD(degree, multiplicity) with translation monodromy from each
///     puncture's surface multiplicity,
///   - one closed point stratum per non-deleted special point,
/// with branch maps given by residue reduction along the canonical sheet
/// labels.
inline StratifiedBranchData compile(const CoveringSpec& spec) {
  spec.validate();
  for (const auto& c : spec.components)
    if (!c.h1_is_zero && c.explicit_shifts.empty())
      throw validation_error(
          "component " + c.id +
          ": global monodromy is underdetermined; set h1_is_zero or supply "
          "explicit_shifts");

  const std::size_t m = spec.degree;
  std::vector<std::size_t> all_mults;
  for (const auto& c : spec.components) all_mults.push_back(c.multiplicity);
  const std::size_t sheets = detail::gcd_with_all(m, all_mults);

  StratifiedBranchData d;
  for (std::size_t o = 0; o < sheets; ++o)
    d.strata.push_back({"sheet:" + std::to_string(o), 1, {}, false});

  for (const auto& c : spec.components) {
    const std::size_t e = local_group_order(m, {c.multiplicity});
    Stratum s{"comp:" + c.id, e, {}, true};
    for (const auto& p : spec.special_points)
      for (const auto& b : p.branches) {
        if (b.component != c.id) continue;
        const std::size_t mk = surface_multiplicity(spec, c.id, p.id, b.branch);
        s.monodromy.push_back(Permutation::shift(e, monodromy_shift(e, mk)));
        if (!p.deleted) s.closed = false;
      }
    for (auto shift : c.explicit_shifts)
      s.monodromy.push_back(Permutation::shift(e, shift % e));
    d.strata.push_back(std::move(s));

    // Branch q lies in the closure of sheet component q mod sheet count.
    for (std::size_t q = 0; q < e; ++q)
      d.adjacencies.push_back(
          {"comp:" + c.id, "sheet:" + std::to_string(q % sheets), {q}});
  }

  for (const auto& p : spec.special_points) {
    if (p.deleted) continue;
    std::set<std::string> incident;
    for (const auto& b : p.branches) incident.insert(b.component);
    std::vector<std::size_t> mults;
    for (const auto& id : incident) mults.push_back(spec.component(id).multiplicity);
    const std::size_t r = branch_count(m, mults);
    d.strata.push_back({"pt:" + p.id, r, {}, true});

    // One adjacency arc per incident branch; the torsor map is reduction of
    // the residue label.
    for (const auto& b : p.branches) {
      const std::size_t e = local_group_order(m, {spec.component(b.component).multiplicity});
      if (e % r != 0)
        throw computation_error("point branch count does not divide torsor size");
      std::vector<std::size_t> branch_map(e);
      for (std::size_t q = 0; q < e; ++q) branch_map[q] = q % r;
      d.adjacencies.push_back({"pt:" + p.id, "comp:" + b.component, branch_map});
    }
  }

  d.validate();
  return d;
}

}  // namespace w0h1

#endif  // W0H1_COVERS_HPP
