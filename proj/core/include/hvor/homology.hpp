#pragma once

// Smith normal form over Z and the homology of the Voronoi complex.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hvor/sparse_matrix.hpp"

namespace hvor {

struct VoronoiComplex;

struct SmithResult {
  std::size_t rank = 0;
  /// Nonzero invariant factors d -> multiplicity, 1 included.
  std::map<Integer, std::size_t> divisors;

  /// The divisors greater than 1.
  std::map<Integer, std::size_t> torsion() const;
  friend bool operator==(const SmithResult&, const SmithResult&) = default;
};

/// Sparse elimination of unit pivots, then a dense Smith form of the rest.
SmithResult smith_normal_form(const SparseMatrix& m);

/// Diagonal of the Smith form of a dense matrix (nonzero entries, each
/// dividing the next).
std::vector<Integer> dense_smith_diagonal(std::vector<std::vector<Integer>> a);

struct HomologyGroup {
  std::size_t n = 0;
  std::size_t free_rank = 0;
  std::map<Integer, std::size_t> torsion;  // Z_d -> multiplicity
  std::size_t cohomology_degree = 0;       // N^2 - 1 - n

  /// "Z^2 + (Z_2)^3" style; "0" for the trivial group.
  std::string str() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
  std::vector<HomologyGroup> groups;  // decreasing n
  /// H_n(Vor) agrees with H^{N^2-1-n}(GL_N(O)) up to these primes.
  std::set<long> serre_primes;

  const HomologyGroup& at(std::size_t n) const;
  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

/// Throws std::logic_error if some d_{n-1} d_n != 0. The Smith forms of
/// different degrees run on `workers` threads.
HomologyResult homology(const VoronoiComplex& complex, std::size_t workers = 1);

}  // namespace hvor
