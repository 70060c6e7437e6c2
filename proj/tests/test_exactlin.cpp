#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "w0h1/exactlin.hpp"

using namespace w0h1;

namespace {

QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

Permutation random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("rational round trip") {
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), validation_error);
  CHECK_THROWS_AS(parse_rational("abc"), validation_error);
}

TEST_CASE("kernel_basis on the worked examples") {
  CHECK(kernel_basis(QMatrix::identity(2)).empty());

  const auto b1 = kernel_basis(from_rows({{1, -1}}));
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == QVector{1, 1});

  const auto b2 = kernel_basis(from_rows({{1, 1, 1}, {0, 1, 2}}));
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == QVector{1, -2, 1});
}

TEST_CASE("kernel vectors are exact kernel elements, rank-nullity holds") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    QMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    const auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == m.cols());
    for (const auto& v : basis) {
      const QVector mv = m.apply(v);
      for (const auto& x : mv) CHECK(x == 0);
    }
  }
}

TEST_CASE("empty matrix has a full kernel") {
  QMatrix m(0, 3);
  CHECK(kernel_basis(m).size() == 3);
}

TEST_CASE("fixed_subspace_dim on the worked examples") {
  CHECK(fixed_subspace_dim({QMatrix::identity(2)}, 2) == 2);
  CHECK(fixed_subspace_dim({from_rows({{0, 1}, {1, 0}})}, 2) == 1);
  CHECK(fixed_subspace_dim({from_rows({{0, -1}, {1, 0}})}, 2) == 0);
  CHECK(fixed_subspace_dim({}, 5) == 5);
  CHECK_THROWS_AS(fixed_subspace_dim({QMatrix::identity(3)}, 2),
                  computation_error);
}

TEST_CASE("permutation_matrix basics") {
  CHECK(permutation_matrix(Permutation::identity(3)) == QMatrix::identity(3));
  CHECK(permutation_matrix(Permutation({1, 0})) == from_rows({{0, 1}, {1, 0}}));

  const Permutation cycle({1, 2, 0});
  CHECK(permutation_matrix(cycle) * permutation_matrix(cycle) ==
        permutation_matrix(cycle.compose(cycle)));
  CHECK(cycle.compose(cycle) == Permutation({2, 0, 1}));
}

TEST_CASE("permutation matrix is a homomorphism on random pairs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Permutation p = random_permutation(rng, n);
    const Permutation q = random_permutation(rng, n);
    CHECK(permutation_matrix(p.compose(q)) ==
          permutation_matrix(p) * permutation_matrix(q));
  }
}

TEST_CASE("permutation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0}), validation_error);
  CHECK_THROWS_AS(Permutation({2, 0}), validation_error);
}

TEST_CASE("orbit_count on the worked examples") {
  CHECK(orbit_count(5, {}) == 5);
  CHECK(orbit_count(6, {Permutation::shift(6, 4)}) == 2);
  CHECK(orbit_count(4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}) == 2);
  CHECK_THROWS_AS(orbit_count(3, {Permutation::identity(2)}), computation_error);
}

TEST_CASE("invariants of a permutation representation count its orbits") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_int_distribution<std::size_t> count(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    std::vector<Permutation> gens;
    for (std::size_t g = count(rng); g > 0; --g)
      gens.push_back(random_permutation(rng, n));
    std::vector<QMatrix> mats;
    for (const auto& g : gens) mats.push_back(permutation_matrix(g));
    CHECK(fixed_subspace_dim(mats, n) == orbit_count(n, gens));
  }
}

TEST_CASE("orbit labels are consistent with orbit count") {
  const auto labels = orbit_labels(6, {Permutation::shift(6, 4)});
  CHECK(labels == std::vector<std::size_t>{0, 1, 0, 1, 0, 1});
}
