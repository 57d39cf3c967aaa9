#pragma once

// Orbit representatives of the well-rounded cells of the Voronoi decomposition,
// their stabilizers and orientations, and the integer differentials of the
// Voronoi complex.
//
// Cell dimensions are those in X*_N: a cell spanned by q(v), v in M, has
// dimension rank{q(v)} - 1. Top cells (dimension N^2 - 1) are perfect cones.
//
// Orientation convention: a cell is oriented by its basis, the first maximal
// independent subset of {q(v)} in canonical vector order. For a facet tau' of
// sigma the induced orientation compares the frame (q(g), basis of tau') with
// the basis of sigma, where g is the first vector of sigma not on tau'.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hvor/hermitian.hpp"
#include "hvor/isometry.hpp"
#include "hvor/polyhedra.hpp"
#include "hvor/sparse_matrix.hpp"
#include "hvor/voronoi.hpp"

namespace hvor {

struct Cell {
  std::vector<OVector> vectors;  // canonical, sorted by lex_less
  std::size_t dim = 0;
  StabilizerGroup stabilizer;
  bool orientable = false;
  std::vector<std::size_t> basis;  // indices into vectors

  /// Exact q-coordinates of the basis vectors.
  std::vector<IntVector> basis_coords(long disc) const;
};

/// A codimension-one face of a cell fused into the representative `target`
/// one dimension lower; `sign` is the incidence contribution of one face and
/// `multiplicity` the number of faces in its Stab-orbit (1 in all-facets mode).
struct FaceIncidence {
  std::size_t target = 0;
  int sign = 0;
  std::size_t multiplicity = 1;
};

struct DifferentialMatrix {
  std::size_t degree = 0;  // d_n : V_n -> V_{n-1}
  SparseMatrix matrix;     // rows: orientable (n-1)-cells, cols: orientable n-cells
  std::size_t nnz() const { return matrix.nnz(); }
};

struct VoronoiComplex {
  long disc = 0;
  std::size_t rank = 0;
  /// Sigma*_n for n = N-1 .. N^2-1.
  std::map<std::size_t, std::vector<Cell>> cells;
  /// Faces of each cell: incidences[n][i] for cell i of dimension n.
  std::map<std::size_t, std::vector<std::vector<FaceIncidence>>> incidences;
  /// Sigma_n as indices into cells[n].
  std::map<std::size_t, std::vector<std::size_t>> orientable;
  /// d_n for n = N .. N^2-1.
  std::map<std::size_t, DifferentialMatrix> differentials;

  std::size_t top_dim() const { return rank * rank - 1; }
  std::size_t bottom_dim() const { return rank - 1; }
};

struct CellOptions {
  std::size_t workers = 1;
  /// Walk every facet instead of one per Stab-orbit (slower; used as a cross-check).
  bool all_facets = false;
  std::function<void(std::size_t dim, std::size_t count)> progress;
};

/// The sign of det of v -> gamma v gamma^* from span(from) to span(to), in
/// the bases of the two cells; gamma must map the vectors of `from` onto
/// those of `to` up to units. Throws std::invalid_argument otherwise.
int orientation_action(long disc, const GroupElement& gamma, const Cell& from, const Cell& to);

/// Builds cells, stabilizers, orientations, incidences and differentials.
VoronoiComplex build_complex(const std::vector<PerfectFormRecord>& perfect,
                             const CellOptions& options = {});

/// A cell with the given vectors: canonicalizes, sorts, fixes dim and basis.
/// Stabilizer and orientability are filled in by finish_cell.
Cell make_cell(long disc, std::vector<OVector> vectors);
void finish_cell(long disc, Cell& c);

/// Recomputes the differentials from cells, incidences and orientability.
void assemble_differentials(VoronoiComplex& complex);

struct DegreeSummary {
  std::size_t n = 0;
  std::size_t cells = 0;                          // |Sigma*_n|
  std::map<Integer, std::size_t> stabilizer_orders;  // order -> multiplicity
  std::size_t orientable = 0;                     // |Sigma_n|
  std::size_t nnz = 0;                            // of d_n
  std::size_t rank = 0;                           // of d_n
  std::map<Integer, std::size_t> elementary_divisors;  // of d_n, including 1

  friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

struct ComplexSummary {
  long disc = 0;
  std::size_t rank = 0;
  std::vector<DegreeSummary> degrees;  // decreasing n, as in the tables

  friend bool operator==(const ComplexSummary&, const ComplexSummary&) = default;
};

ComplexSummary summarize(const VoronoiComplex& complex);

/// "2^7 * 3" style factorization of an order.
std::string format_order(const Integer& order);
/// Multiset as "24, 96 (2)": each value with its count when above 1.
std::string format_multiset(const std::map<Integer, std::size_t>& m);

}  // namespace hvor
