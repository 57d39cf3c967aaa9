#pragma once

// Exact rational polyhedral cones: dual description by the double description
// method, facets with their generator subsets, and span ranks.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hvor/hermitian.hpp"
#include "hvor/linalg.hpp"

namespace hvor {

/// Coordinate projection that is injective on span(generators).
class SpanProjection {
 public:
  SpanProjection() = default;
  explicit SpanProjection(const std::vector<IntVector>& generators);

  std::size_t dim() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  IntVector project(const IntVector& v) const;
  /// Zero-pad a functional on the projected space back to the ambient space.
  IntVector lift_functional(const IntVector& h, std::size_t ambient) const;

 private:
  std::vector<std::size_t> pivots_;
};

struct Facet {
  /// Primitive integral functional h with h . g >= 0 on every generator, with
  /// equality exactly on the facet.
  IntVector normal;
  /// Indices of the generators lying on the facet, increasing.
  std::vector<std::size_t> generators;
};

struct Cone {
  std::vector<IntVector> generators;
  std::size_t dim = 0;
  std::optional<std::vector<Facet>> facets;
};

Cone make_cone(std::vector<IntVector> generators);

/// Extreme rays of {x in Q^d : a_i . x >= 0 for all i}; the constraint rows
/// must have rank d. Each ray is primitive and carries the indices of the
/// constraints it satisfies with equality.
std::vector<Facet> extreme_rays(const std::vector<IntVector>& constraints);

/// Facets of the cone spanned by the generators, within their linear span.
/// Throws std::invalid_argument on empty input.
std::vector<Facet> dual_description(const std::vector<IntVector>& generators);

/// Fills cone.facets and returns (facet, vectors on it) pairs; vectors[i] must
/// be the vector whose q-coordinates are cone.generators[i].
std::vector<std::pair<Facet, std::vector<OVector>>> faces_of_codim_one(
    Cone& cone, const std::vector<OVector>& vectors);

std::size_t span_rank(const std::vector<IntVector>& vectors);

}  // namespace hvor
