#pragma once

// Subcommands of the hvoronoi tool. Each returns a process exit status:
// 0 success, 1 a verification oracle failed, 3 a runtime error.

#include <cstddef>
#include <iosfwd>
#include <string>

namespace hvor::cli {

enum class Format { table, json };

struct RunConfig {
  long disc = -4;
  std::size_t rank = 3;
  std::string out_dir = ".";
  std::string checkpoint;  // empty: <out>/perfect_gl<N>_<D>.jsonl
  std::string cells;       // empty: <out>/cells_gl<N>_<D>.jsonl
  std::size_t workers = 1;
  std::size_t max_classes = 0;  // cap on perfect classes, 0 = none
  Format format = Format::table;
  bool all_facets = false;
  bool recompute = false;  // ignore an existing cell database

  /// Throws std::invalid_argument unless disc is a negative fundamental
  /// discriminant and rank >= 1.
  void validate() const;
  std::string checkpoint_path() const;
  std::string cells_path() const;
  std::string report_path() const;
};

int cmd_perfect_forms(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cells(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_homology(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hvor::cli
