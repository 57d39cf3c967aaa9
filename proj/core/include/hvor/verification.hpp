#pragma once

// Global consistency checks on a computed Voronoi complex: the mass formula,
// the chain identity, the explicit top cycle and the shape of the top
// differential.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hvor/cell_complex.hpp"

namespace hvor {

struct MassReport {
  std::map<std::size_t, Rational> partial_sums;  // dim -> sum of 1/|Stab|
  Rational total;                                // alternating sum
  bool ok() const { return sgn(total) == 0; }
  friend bool operator==(const MassReport&, const MassReport&) = default;
};

MassReport mass_formula(const VoronoiComplex& complex);
/// Same from bare (dimension, stabilizer order) pairs.
MassReport mass_formula(const std::vector<std::pair<std::size_t, Integer>>& cells);

struct ChainReport {
  std::vector<std::size_t> failing;  // n with d_{n-1} d_n != 0
  bool ok() const { return failing.empty(); }
  friend bool operator==(const ChainReport&, const ChainReport&) = default;
};

ChainReport chain_identity(const std::map<std::size_t, SparseMatrix>& differentials);
ChainReport chain_identity(const VoronoiComplex& complex);

struct XiReport {
  bool is_cycle = false;
  bool all_top_orientable = false;
  /// (1/|Stab(sigma)|)_sigma over the top cells, scaled to a primitive integer vector.
  std::vector<Integer> vector;
  bool ok() const { return is_cycle && all_top_orientable; }
  friend bool operator==(const XiReport&, const XiReport&) = default;
};

XiReport xi_cycle_check(const VoronoiComplex& complex);
/// d applied to the vector of reciprocal orders.
XiReport xi_cycle_check(const SparseMatrix& top_differential, const std::vector<Integer>& orders);

struct RowStructureReport {
  std::size_t nonzero_rows = 0;
  std::vector<std::size_t> bad_rows;  // rows of d_top violating the two-entry ratio shape
  bool ok() const { return bad_rows.empty(); }
  friend bool operator==(const RowStructureReport&, const RowStructureReport&) = default;
};

/// Each nonzero row of d_{N^2-1} has exactly two nonzero entries, the entry in
/// column j having absolute value |Stab(sigma_j)| / |Stab(tau_i)|.
RowStructureReport top_row_structure(const VoronoiComplex& complex);

struct TorsionPrimeReport {
  std::set<long> admissible;
  std::set<long> seen;        // primes dividing some stabilizer order
  std::set<long> violations;  // seen but not admissible
  bool ok() const { return violations.empty(); }
  friend bool operator==(const TorsionPrimeReport&, const TorsionPrimeReport&) = default;
};

TorsionPrimeReport torsion_primes(const VoronoiComplex& complex);

struct VerificationReport {
  MassReport mass;
  ChainReport chain;
  XiReport xi;
  RowStructureReport rows;
  TorsionPrimeReport primes;
  bool ok() const { return mass.ok() && chain.ok() && xi.ok() && primes.ok(); }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verify(const VoronoiComplex& complex);

}  // namespace hvor
