#include <random>

#include "doctest.h"
#include "hvor/homology.hpp"
#include "oracles.hpp"

using namespace hvor;

namespace {

using Dense = std::vector<std::vector<Integer>>;

std::map<Integer, std::size_t> tally(const std::vector<Integer>& d) {
  std::map<Integer, std::size_t> m;
  for (const auto& x : d) ++m[x];
  return m;
}

Dense random_dense(std::mt19937_64& rng, std::size_t r, std::size_t c, long range, int zero_pct) {
  std::uniform_int_distribution<long> u(-range, range);
  std::uniform_int_distribution<int> z(0, 99);
  Dense m(r, std::vector<Integer>(c, 0));
  for (auto& row : m) {
    for (auto& x : row) {
      if (z(rng) >= zero_pct) x = u(rng);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("smith form of the published top differential") {
  auto m = SparseMatrix::from_dense({{0, 0}, {1920, -256}});
  auto s = smith_normal_form(m);
  CHECK(s.rank == 1);
  CHECK(s.divisors == std::map<Integer, std::size_t>{{128, 1}});
  CHECK(s.torsion() == std::map<Integer, std::size_t>{{128, 1}});
  CHECK(oracle::naive_smith({{0, 0}, {1920, -256}}) == std::vector<Integer>{128});
}

TEST_CASE("smith form of identity and zero") {
  Dense id(5, std::vector<Integer>(5, 0));
  for (int i = 0; i < 5; ++i) id[i][i] = 1;
  auto s = smith_normal_form(SparseMatrix::from_dense(id));
  CHECK(s.rank == 5);
  CHECK(s.divisors == std::map<Integer, std::size_t>{{1, 5}});
  CHECK(s.torsion().empty());
  auto z = smith_normal_form(SparseMatrix(4, 3));
  CHECK(z.rank == 0);
  CHECK(z.divisors.empty());
  auto e = smith_normal_form(SparseMatrix(0, 3));
  CHECK(e.rank == 0);
}

TEST_CASE("smith form agrees with the textbook algorithm") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 300; ++k) {
    std::uniform_int_distribution<std::size_t> sz(1, 12);
    const std::size_t r = sz(rng);
    const std::size_t c = sz(rng);
    auto m = random_dense(rng, r, c, 100, 40 + (k % 5) * 10);
    auto expect = oracle::naive_smith(m);
    auto got = smith_normal_form(SparseMatrix::from_dense(m));
    CHECK(got.rank == expect.size());
    CHECK(got.divisors == tally(expect));
    CHECK(got.rank == oracle::rational_rank(m));
    CHECK(tally(dense_smith_diagonal(m)) == tally(expect));
  }
}

TEST_CASE("smith form of low-rank and structured matrices") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 100; ++k) {
    // product of a 9x3 and a 3x8 matrix has rank <= 3
    auto a = random_dense(rng, 9, 3, 7, 0);
    auto b = random_dense(rng, 3, 8, 7, 0);
    Dense m(9, std::vector<Integer>(8, 0));
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 8; ++j) {
        for (int t = 0; t < 3; ++t) m[i][j] += a[i][t] * b[t][j];
      }
    }
    auto expect = oracle::naive_smith(m);
    auto got = smith_normal_form(SparseMatrix::from_dense(m));
    CHECK(got.rank == oracle::rational_rank(m));
    CHECK(got.divisors == tally(expect));
  }
}

TEST_CASE("smith form is invariant under row and column permutation and sign") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 50; ++k) {
    auto m = random_dense(rng, 8, 10, 20, 50);
    auto base = smith_normal_form(SparseMatrix::from_dense(m));
    std::vector<std::size_t> rp(8), cp(10);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    Dense p(8, std::vector<Integer>(10));
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 10; ++j) p[i][j] = (i % 2 ? -1 : 1) * m[rp[i]][cp[j]];
    }
    CHECK(smith_normal_form(SparseMatrix::from_dense(p)) == base);
  }
}

TEST_CASE("homology group strings") {
  HomologyGroup g;
  CHECK(g.str() == "0");
  g.free_rank = 2;
  g.torsion = {{7, 1}};
  CHECK(g.str() == "Z^2 + Z_7");
  g.free_rank = 0;
  g.torsion = {{3, 2}};
  CHECK(g.str() == "(Z_3)^2");
  g.free_rank = 1;
  g.torsion = {};
  CHECK(g.str() == "Z");
}

TEST_CASE("sparse matrix product") {
  auto a = SparseMatrix::from_dense({{1, 2}, {0, 1}});
  auto b = SparseMatrix::from_dense({{3}, {4}});
  CHECK(a.multiply(b) == SparseMatrix::from_dense({{11}, {4}}));
  CHECK_THROWS_AS(b.multiply(a), std::invalid_argument);
  SparseMatrix c(2, 2);
  c.add(0, 0, 5);
  c.add(0, 0, -5);
  CHECK(c.nnz() == 0);
}
