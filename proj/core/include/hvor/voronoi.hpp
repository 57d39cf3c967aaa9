#pragma once

// Voronoi's algorithm over O: an initial perfect form, the neighbor flip across
// a facet of its perfect cone, and the walk over the neighbor graph up to
// GL_N(O)-equivalence.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvor/hermitian.hpp"
#include "hvor/isometry.hpp"
#include "hvor/polyhedra.hpp"

namespace hvor {

struct PerfectFormRecord {
  HermitianForm form;  // minimum 1
  MinVectorSet min_vectors;
  Cone cone;           // generated by q(v), v in min_vectors.vectors, in that order
  std::vector<std::pair<std::size_t, std::size_t>> neighbors;  // (facet index, class id)
  StabilizerGroup stabilizer;
  Integer stabilizer_order;
};

/// Computes minimal vectors, cone and checks perfection with m = 1.
/// Throws std::domain_error if the form is not perfect with minimum 1.
PerfectFormRecord make_record(const HermitianForm& form);

/// Smallest rho > 0 such that A + rho H has minimum m(A) attained by some
/// vector outside `kept` (the vectors of M(A) on which H vanishes).
/// H must be non-negative on kept and not positive semidefinite.
Rational flip_step(const HermitianForm& a, const HermitianForm& h, std::size_t cap = 4096);

PerfectFormRecord initial_perfect_form(std::size_t n, long disc);

/// The perfect form across facet `facet` of p.cone. The facet normal is stored
/// inward (non-negative on the cone), so the neighbor is A + rho H.
PerfectFormRecord neighbor(PerfectFormRecord& p, std::size_t facet);

/// Facet indices of p.cone grouped into orbits of Stab(p); each orbit is
/// sorted and orbits are ordered by their first element.
std::vector<std::vector<std::size_t>> facet_orbits(PerfectFormRecord& p);

struct ExploreOptions {
  std::string checkpoint;      // empty: no checkpoint
  std::size_t workers = 1;
  std::size_t max_classes = 0; // 0: unlimited
  bool reverse_facets = false; // process facet orbits in reverse (for order-independence tests)
  std::function<void(std::size_t found, std::size_t explored)> progress;
};

/// One representative per GL_N(O)-class, sorted by (|M|, stabilizer order,
/// invariant key); neighbor class ids refer to positions in the result.
std::vector<PerfectFormRecord> enumerate_perfect_forms(std::size_t n, long disc,
                                                       const ExploreOptions& options = {});

/// Key used to bucket forms before the full isometry test.
std::vector<Rational> form_invariant(const PerfectFormRecord& p);

}  // namespace hvor
