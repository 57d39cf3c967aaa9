#pragma once

// The structured run document (census, table rows, homology, verification),
// the cell database and the plain-text tables. All numbers are exact strings.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hvor/cell_complex.hpp"
#include "hvor/homology.hpp"
#include "hvor/verification.hpp"
#include "hvor/voronoi.hpp"

namespace hvor {

struct CensusEntry {
  std::size_t min_vectors = 0;  // |M(A)| up to units
  std::size_t total_count = 0;  // |M(A)| with unit multiples
  Integer stabilizer_order;
  std::size_t facets = 0;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

std::vector<CensusEntry> census(const std::vector<PerfectFormRecord>& forms);

struct RunDocument {
  long disc = 0;
  std::size_t rank = 0;
  std::vector<CensusEntry> census;
  std::optional<ComplexSummary> summary;
  std::optional<HomologyResult> homology;
  std::optional<VerificationReport> verification;
  friend bool operator==(const RunDocument&, const RunDocument&) = default;
};

std::string to_json(const RunDocument& doc);
/// Throws std::runtime_error on malformed input.
RunDocument parse_run_document(const std::string& text);

/// One JSON object per line: a header with disc and rank, then one line per cell.
void write_complex(const std::string& path, const VoronoiComplex& complex);
/// Reads cells, stabilizers, orientations and incidences back and rebuilds the
/// differentials. Stabilizer orders are taken from the file as stored.
VoronoiComplex read_complex(const std::string& path);

/// Table in the column layout of the published tables:
/// n | |Sigma*_n| | |Stab| | |Sigma_n| | Omega | rank | elem. div. | H_n
std::string format_table(const ComplexSummary& summary, const HomologyResult& homology);
std::string format_census(long disc, std::size_t rank, const std::vector<CensusEntry>& census);
std::string format_verification(const VerificationReport& report);

}  // namespace hvor
