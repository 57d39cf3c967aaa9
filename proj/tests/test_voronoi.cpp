#include <filesystem>
#include <random>

#include "doctest.h"
#include "hvor/io.hpp"
#include "hvor/voronoi.hpp"

using namespace hvor;

namespace {

std::vector<std::vector<Rational>> invariants(const std::vector<PerfectFormRecord>& forms) {
  std::vector<std::vector<Rational>> out;
  for (const auto& f : forms) out.push_back(form_invariant(f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rank one has a single perfect form") {
  for (long d : {-3L, -4L, -7L}) {
    auto forms = enumerate_perfect_forms(1, d);
    REQUIRE(forms.size() == 1);
    CHECK(forms[0].form == HermitianForm::identity(d, 1));
  }
}

TEST_CASE("initial perfect form is perfect with minimum 1") {
  auto p = initial_perfect_form(2, -4);
  CHECK(p.min_vectors.minimum == 1);
  CHECK(p.min_vectors.total_count > 8);
  CHECK(p.cone.dim == 4);
  auto q = initial_perfect_form(3, -7);
  CHECK(q.cone.dim == 9);
}

TEST_CASE("flipping to a neighbor and back") {
  auto p = initial_perfect_form(3, -4);
  auto nb = neighbor(p, 0);
  REQUIRE(p.cone.facets.has_value());
  CHECK(nb.min_vectors.minimum == 1);
  CHECK(nb.cone.dim == 9);
  // the vectors on the facet are minimal for both forms
  for (std::size_t i : (*p.cone.facets)[0].generators) {
    CHECK(evaluate(nb.form, p.min_vectors.vectors[i]) == 1);
  }
  // across the same wall from the other side we land on a form equivalent to p
  bool back = false;
  facet_orbits(nb);  // fills the facet list
  REQUIRE(nb.cone.facets.has_value());
  auto& facets = *nb.cone.facets;
  for (std::size_t f = 0; f < facets.size() && !back; ++f) {
    bool same = facets[f].generators.size() == (*p.cone.facets)[0].generators.size();
    for (std::size_t i : facets[f].generators) {
      same = same && evaluate(p.form, nb.min_vectors.vectors[i]) == 1;
    }
    if (same) back = neighbor(nb, f).form == p.form;
  }
  CHECK(back);
}

TEST_CASE("census for D = -4 and D = -3 in rank 3") {
  auto f4 = enumerate_perfect_forms(3, -4);
  CHECK(f4.size() == 1);
  auto f3 = enumerate_perfect_forms(3, -3);
  CHECK(f3.size() == 2);
  auto f2 = enumerate_perfect_forms(2, -4);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].min_vectors.total_count == 24);
  CHECK(f2[0].stabilizer_order == 96);
}

TEST_CASE("census does not depend on the facet order") {
  ExploreOptions rev;
  rev.reverse_facets = true;
  for (long d : {-7L, -8L, -11L}) {
    auto a = enumerate_perfect_forms(3, d);
    auto b = enumerate_perfect_forms(3, d, rev);
    CHECK(a.size() == b.size());
    CHECK(invariants(a) == invariants(b));
  }
}

TEST_CASE("neighbor graph is closed") {
  auto forms = enumerate_perfect_forms(3, -7);
  for (const auto& f : forms) {
    CHECK(!f.neighbors.empty());
    for (const auto& [facet, id] : f.neighbors) CHECK(id < forms.size());
  }
}

TEST_CASE("checkpoint line round trip and resume") {
  auto forms = enumerate_perfect_forms(3, -11);
  REQUIRE(forms.size() == 12);
  CheckpointEntry e{forms[3].form, forms[3].min_vectors.vectors, true, forms[3].neighbors};
  auto line = checkpoint_line(-11, 3, e);
  CHECK(parse_checkpoint_line(line, -11, 3) == e);
  CHECK_THROWS(parse_checkpoint_line(line, -7, 3));
  CHECK_THROWS(parse_checkpoint_line("{not json", -11, 3));

  auto dir = std::filesystem::temp_directory_path() / "hvor_ckpt_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ExploreOptions partial;
  partial.checkpoint = (dir / "p.jsonl").string();
  partial.max_classes = 5;
  auto first = enumerate_perfect_forms(3, -11, partial);
  CHECK(read_checkpoint(partial.checkpoint, -11, 3).size() >= 5);
  ExploreOptions resume;
  resume.checkpoint = partial.checkpoint;
  auto full = enumerate_perfect_forms(3, -11, resume);
  CHECK(full.size() == 12);
  CHECK(invariants(full) == invariants(forms));
  std::filesystem::remove_all(dir);
}
