#include <random>
#include <set>

#include "doctest.h"
#include "hvor/isometry.hpp"
#include "hvor/voronoi.hpp"
#include "oracles.hpp"

using namespace hvor;

namespace {

std::vector<OVector> image(const GroupElement& g, const std::vector<OVector>& vs) {
  std::vector<OVector> out;
  for (const auto& v : vs) out.push_back(canonical(g.apply(v)));
  std::sort(out.begin(), out.end(), &lex_less);
  return out;
}

}  // namespace

TEST_CASE("form equivalence finds the identity witness") {
  auto p = initial_perfect_form(3, -4);
  auto g = form_equivalent(p.form, p.min_vectors.vectors, p.form, p.min_vectors.vectors);
  REQUIRE(g.has_value());
  CHECK(g->in_gl());
  CHECK(g->pullback(p.form) == p.form);
}

TEST_CASE("form equivalence recovers a random conjugate") {
  std::mt19937_64 rng(31);
  for (long d : {-3L, -4L, -7L, -8L}) {
    auto p = initial_perfect_form(3, d);
    for (int k = 0; k < 3; ++k) {
      auto h = oracle::random_group_element(d, 3, rng, 6);
      auto b = h.pullback(p.form);  // B = h* A h
      auto rb = make_record(b);
      auto g = form_equivalent(p.form, p.min_vectors.vectors, b, rb.min_vectors.vectors);
      REQUIRE(g.has_value());
      CHECK(g->in_gl());
      CHECK(g->pullback(p.form) == b);
    }
  }
}

TEST_CASE("the two classes for D = -3 are not equivalent") {
  auto forms = enumerate_perfect_forms(3, -3);
  REQUIRE(forms.size() == 2);
  CHECK_FALSE(form_equivalent(forms[0].form, forms[0].min_vectors.vectors, forms[1].form,
                              forms[1].min_vectors.vectors)
                  .has_value());
}

TEST_CASE("cell equivalence maps a set onto a random image") {
  std::mt19937_64 rng(32);
  for (long d : {-4L, -7L}) {
    auto p = initial_perfect_form(3, d);
    auto vs = p.min_vectors.vectors;
    auto h = oracle::random_group_element(d, 3, rng, 6);
    auto target = image(h, vs);
    auto g = cell_equivalent(d, vs, target);
    REQUIRE(g.has_value());
    CHECK(g->in_gl());
    CHECK(image(*g, vs) == target);
  }
}

TEST_CASE("stabilizer of a vector in rank one is the unit group") {
  for (long d : {-3L, -4L, -7L}) {
    auto s = stabilizer(d, {OVector{QuadInteger(d, 1)}});
    CHECK(s.order == static_cast<long>(units(d).size()));
  }
}

TEST_CASE("stabilizer orders and generators") {
  for (long d : {-3L, -4L, -7L}) {
    auto p = initial_perfect_form(3, d);
    const auto& vs = p.min_vectors.vectors;
    auto s = stabilizer(d, vs);
    const long u = static_cast<long>(units(d).size());
    CHECK(s.order % u == 0);
    Integer prod = 1;
    for (const auto& [q, e] : s.order_factorization) {
      for (int i = 0; i < e; ++i) prod *= q;
    }
    CHECK(prod == s.order);
    for (const auto& g : s.generators) {
      CHECK(g.in_gl());
      CHECK(image(g, vs) == vs);
      CHECK(g.act(p.form) != HermitianForm());
      // the stabilizer of M(A) preserves A when A is perfect
      CHECK(g.pullback(p.form) == p.form);
    }
  }
}

TEST_CASE("vector permutation") {
  auto p = initial_perfect_form(2, -4);
  const auto& vs = p.min_vectors.vectors;
  auto perm = vector_permutation(GroupElement::identity(-4, 2), vs);
  for (std::size_t i = 0; i < perm.size(); ++i) CHECK(perm[i] == i);
}

TEST_CASE("configuration invariant is invariant") {
  std::mt19937_64 rng(33);
  auto p = initial_perfect_form(3, -8);
  const auto& vs = p.min_vectors.vectors;
  auto h = oracle::random_group_element(-8, 3, rng, 6);
  CHECK(configuration_invariant(-8, vs) == configuration_invariant(-8, image(h, vs)));
}

TEST_CASE("torsion prime bound") {
  CHECK(torsion_prime_bound(3, -4) == std::set<long>{2, 3});
  CHECK(torsion_prime_bound(3, -7) == std::set<long>{2, 3, 7});
  CHECK(torsion_prime_bound(4, -3) == std::set<long>{2, 3, 5});
  CHECK(torsion_prime_bound(4, -4) == std::set<long>{2, 3, 5});
}

TEST_CASE("factorize") {
  CHECK(factorize(Integer(46080)) == PrimePowers{{2, 10}, {3, 2}, {5, 1}});
  CHECK(factorize(Integer(1)).empty());
  CHECK(factorize(Integer(97)) == PrimePowers{{97, 1}});
}
