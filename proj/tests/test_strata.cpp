#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "w0h1/strata.hpp"

using namespace w0h1;

namespace {

StratifiedBranchData cone_model(std::size_t b, std::size_t c, bool with_vertex) {
  StratifiedBranchData d;
  d.strata.push_back({"S", b, {Permutation::shift(b, c % b)}, false});
  if (with_vertex) {
    d.strata.push_back({"O", 1, {}, true});
    d.adjacencies.push_back({"O", "S", std::vector<std::size_t>(b, 0)});
  }
  return d;
}

Stratum random_stratum(std::mt19937& rng, const std::string& id, bool closed) {
  std::uniform_int_distribution<std::size_t> rdist(1, 6);
  std::uniform_int_distribution<std::size_t> gdist(0, 2);
  const std::size_t r = rdist(rng);
  Stratum s{id, r, {}, closed};
  for (std::size_t g = gdist(rng); g > 0; --g) {
    std::vector<std::size_t> im(r);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    s.monodromy.emplace_back(std::move(im));
  }
  return s;
}

}  // namespace

TEST_CASE("stalk_dim is r - 1") {
  CHECK(stalk_dim(1) == 0);
  CHECK(stalk_dim(2) == 1);
  CHECK(stalk_dim(7) == 6);
  CHECK_THROWS_AS(stalk_dim(0), validation_error);
}

TEST_CASE("stalk_invariant_dim on the worked examples") {
  CHECK(stalk_invariant_dim({"s", 5, {}, true}) == 4);
  CHECK(stalk_invariant_dim({"s", 6, {Permutation::shift(6, 4)}, true}) == 1);
  CHECK(stalk_invariant_dim({"s", 3, {Permutation({1, 2, 0})}, true}) == 0);
}

TEST_CASE("stalk_invariant_dim agrees with orbit counting on random strata") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Stratum s = random_stratum(rng, "s", true);
    CHECK(stalk_invariant_dim(s) == orbit_count(s.branches, s.monodromy) - 1);
  }
}

TEST_CASE("global sections of the cone with and without its vertex") {
  for (std::size_t b = 2; b <= 7; ++b)
    for (std::size_t c = 2; c <= 7; ++c) {
      CHECK(global_sections_dim(cone_model(b, c, true)) == 0);
      CHECK(global_sections_dim(cone_model(b, c, false)) ==
            std::gcd(b, c) - 1);
    }
}

TEST_CASE("global sections of the nodal model") {
  StratifiedBranchData d;
  d.strata = {{"N", 2, {}, true}, {"U", 1, {}, false}};
  d.adjacencies = {{"N", "U", {0}}};
  CHECK(global_sections_dim(d) == 1);
  CHECK(global_sections_dim(d) == stalk_dim(2));
}

TEST_CASE("closed strata without adjacencies sum their stalk invariants") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> ns(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    StratifiedBranchData d;
    const std::size_t n = ns(rng);
    std::size_t expect = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d.strata.push_back(random_stratum(rng, "s" + std::to_string(i), true));
      expect += stalk_invariant_dim(d.strata.back());
    }
    CHECK(global_sections_dim(d) == expect);
  }
}

TEST_CASE("global sections never exceed the sum of stalk invariants") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<std::size_t> ns(2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    StratifiedBranchData d;
    const std::size_t n = ns(rng);
    std::size_t bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d.strata.push_back(random_stratum(rng, "s" + std::to_string(i), false));
      bound += stalk_invariant_dim(d.strata.back());
    }
    // Random adjacency from each later stratum down to stratum 0.
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::size_t> bm(d.strata[i].branches);
      std::uniform_int_distribution<std::size_t> pick(0, d.strata[0].branches - 1);
      for (auto& v : bm) v = pick(rng);
      d.adjacencies.push_back({"s0", "s" + std::to_string(i), bm});
    }
    CHECK(global_sections_dim(d) <= bound);
  }
}

TEST_CASE("deleting a minimal unibranch open stratum never shrinks sections") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    StratifiedBranchData d;
    d.strata.push_back(random_stratum(rng, "big", false));
    d.strata.push_back({"O", 1, {}, false});
    std::uniform_int_distribution<std::size_t> pick(0, d.strata[0].branches - 1);
    std::vector<std::size_t> bm(d.strata[0].branches);
    for (auto& v : bm) v = 0;
    d.adjacencies.push_back({"O", "big", bm});

    StratifiedBranchData trimmed;
    trimmed.strata = {d.strata[0]};
    CHECK(global_sections_dim(d) <= global_sections_dim(trimmed));
  }
}

TEST_CASE("b0 of space and normalization on small models") {
  StratifiedBranchData single;
  single.strata = {{"s", 1, {}, true}};
  CHECK(b0_space(single) == 1);
  CHECK(b0_normalization(single) == 1);

  StratifiedBranchData two;
  two.strata = {{"s", 1, {}, true}, {"t", 1, {}, true}};
  CHECK(b0_space(two) == 2);

  CHECK(b0_space(cone_model(4, 2, true)) == 1);

  // Nodal curve with both arcs recorded: one normalization component.
  StratifiedBranchData nodal;
  nodal.strata = {{"N", 2, {}, true}, {"U", 1, {}, false}};
  nodal.adjacencies = {{"N", "U", {0}}, {"N", "U", {1}}};
  CHECK(b0_normalization(nodal) == 1);

  // Two lines through a point: two normalization components.
  StratifiedBranchData lines;
  lines.strata = {{"P", 2, {}, true}, {"L1", 1, {}, false}, {"L2", 1, {}, false}};
  lines.adjacencies = {{"P", "L1", {0}}, {"P", "L2", {1}}};
  CHECK(b0_normalization(lines) == 2);
  CHECK(b0_space(lines) == 1);
}

TEST_CASE("surjective branch maps give b0_norm >= b0_space") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    StratifiedBranchData d;
    const std::size_t n = 2 + trial % 3;
    for (std::size_t i = 0; i < n; ++i)
      d.strata.push_back(random_stratum(rng, "s" + std::to_string(i), false));
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t rd = d.strata[0].branches;
      const std::size_t rg = d.strata[i].branches;
      if (rg < rd) continue;  // cannot be surjective
      std::vector<std::size_t> bm(rg);
      for (std::size_t b = 0; b < rg; ++b) bm[b] = b % rd;
      d.adjacencies.push_back({"s0", "s" + std::to_string(i), bm});
    }
    CHECK(b0_normalization(d) >= b0_space(d));
  }
}

TEST_CASE("validation rejects malformed data") {
  StratifiedBranchData dup;
  dup.strata = {{"s", 1, {}, true}, {"s", 2, {}, true}};
  CHECK_THROWS_AS(dup.validate(), validation_error);

  StratifiedBranchData bad_map;
  bad_map.strata = {{"a", 2, {}, true}, {"b", 1, {}, false}};
  bad_map.adjacencies = {{"a", "b", {5}}};
  CHECK_THROWS_AS(bad_map.validate(), validation_error);

  StratifiedBranchData cyc;
  cyc.strata = {{"a", 1, {}, false}, {"b", 1, {}, false}};
  cyc.adjacencies = {{"a", "b", {0}}, {"b", "a", {0}}};
  CHECK_THROWS_AS(cyc.validate(), validation_error);
}

TEST_CASE("check_composition accepts allowed twists and flags violations") {
  // Chain a < b < c, all unibranch maps, trivial monodromy.
  StratifiedBranchData ok;
  ok.strata = {{"a", 1, {}, true}, {"b", 1, {}, false}, {"c", 1, {}, false}};
  ok.adjacencies = {{"a", "b", {0}}, {"b", "c", {0}}, {"a", "c", {0}}};
  CHECK(check_composition(ok).ok);

  // Two-branch deep stratum; direct map differs from the composite by the
  // recorded swap on the generic stratum, which is a legal twist.
  StratifiedBranchData twisted;
  twisted.strata = {{"a", 2, {}, true},
                    {"b", 2, {}, false},
                    {"c", 2, {Permutation({1, 0})}, false}};
  twisted.adjacencies = {{"a", "b", {0, 1}}, {"b", "c", {0, 1}}, {"a", "c", {1, 0}}};
  CHECK(check_composition(twisted).ok);

  // Same mismatch without the swap in the monodromy: a genuine violation.
  StratifiedBranchData bad = twisted;
  bad.strata[2].monodromy.clear();
  const auto rep = check_composition(bad);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());

  CHECK_THROWS_AS(global_sections_dim(bad, true), computation_error);
}
