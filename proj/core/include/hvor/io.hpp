#pragma once

// Line-delimited JSON persistence for perfect forms. Every number is written
// as an exact decimal or "p/q" string.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hvor/hermitian.hpp"

namespace hvor {

struct CheckpointEntry {
  HermitianForm form;
  std::vector<OVector> min_vectors;
  bool explored = false;
  std::vector<std::pair<std::size_t, std::size_t>> neighbors;

  friend bool operator==(const CheckpointEntry& x, const CheckpointEntry& y) {
    return x.form == y.form && x.min_vectors == y.min_vectors && x.explored == y.explored &&
           x.neighbors == y.neighbors;
  }
};

std::string checkpoint_line(long disc, std::size_t n, const CheckpointEntry& e);
/// Throws std::runtime_error on malformed input or a (disc, n) mismatch.
CheckpointEntry parse_checkpoint_line(const std::string& line, long disc, std::size_t n);

/// Written to a temporary file and renamed into place.
void write_checkpoint(const std::string& path, long disc, std::size_t n,
                      const std::vector<CheckpointEntry>& entries);
/// A missing file yields an empty list.
std::vector<CheckpointEntry> read_checkpoint(const std::string& path, long disc, std::size_t n);

}  // namespace hvor
