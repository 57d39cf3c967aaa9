#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "hvor/cell_complex.hpp"
#include "hvor/homology.hpp"
#include "hvor/report.hpp"
#include "hvor/verification.hpp"
#include "hvor/voronoi.hpp"

namespace hvor::cli {

namespace {

std::string tag(const RunConfig& c) {
  return "gl" + std::to_string(c.rank) + "_" + std::to_string(c.disc);
}

std::string in_out_dir(const RunConfig& c, const std::string& name) {
  return (std::filesystem::path(c.out_dir) / name).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::vector<PerfectFormRecord> perfect_forms(const RunConfig& c, std::ostream& err) {
  ExploreOptions o;
  o.checkpoint = c.checkpoint_path();
  o.workers = c.workers;
  o.max_classes = c.max_classes;
  o.progress = [&err](std::size_t found, std::size_t explored) {
    err << "\rperfect forms: " << explored << " explored, " << found << " found" << std::flush;
  };
  auto forms = enumerate_perfect_forms(c.rank, c.disc, o);
  err << '\n';
  return forms;
}

// Loads the cell database or builds it. When `census_out` is given it receives
// the perfect-form census; with a loaded database that needs the checkpoint.
VoronoiComplex complex_for(const RunConfig& c, std::ostream& err,
                           std::vector<CensusEntry>* census_out = nullptr) {
  const std::string db = c.cells_path();
  if (!c.recompute && std::filesystem::exists(db)) {
    VoronoiComplex cx = read_complex(db);
    if (cx.disc != c.disc || cx.rank != c.rank) {
      throw std::runtime_error(db + " belongs to a different (disc, rank)");
    }
    err << "loaded " << db << '\n';
    if (census_out && std::filesystem::exists(c.checkpoint_path())) {
      *census_out = census(perfect_forms(c, err));
    }
    return cx;
  }
  const auto forms = perfect_forms(c, err);
  if (census_out) *census_out = census(forms);
  if (c.max_classes != 0) {
    throw std::runtime_error("cells need the complete perfect-form list; drop --max-classes");
  }
  CellOptions o;
  o.workers = c.workers;
  o.all_facets = c.all_facets;
  o.progress = [&err](std::size_t dim, std::size_t count) {
    err << "cells of dimension " << dim << ": " << count << '\n';
  };
  VoronoiComplex cx = build_complex(forms, o);
  write_complex(db, cx);
  return cx;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 3;
  }
}

}  // namespace

void RunConfig::validate() const {
  if (!is_fundamental(disc) || disc >= 0) {
    throw std::invalid_argument("--disc must be a negative fundamental discriminant");
  }
  if (rank < 1) throw std::invalid_argument("--rank must be at least 1");
  if (workers < 1) throw std::invalid_argument("--workers must be at least 1");
}

std::string RunConfig::checkpoint_path() const {
  return checkpoint.empty() ? in_out_dir(*this, "perfect_" + tag(*this) + ".jsonl") : checkpoint;
}

std::string RunConfig::cells_path() const {
  return cells.empty() ? in_out_dir(*this, "cells_" + tag(*this) + ".jsonl") : cells;
}

std::string RunConfig::report_path() const { return in_out_dir(*this, "report_" + tag(*this) + ".json"); }

int cmd_perfect_forms(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    c.validate();
    std::filesystem::create_directories(c.out_dir);
    RunDocument doc;
    doc.disc = c.disc;
    doc.rank = c.rank;
    doc.census = census(perfect_forms(c, err));
    write_file(in_out_dir(c, "census_" + tag(c) + ".json"), to_json(doc) + "\n");
    if (c.format == Format::json) {
      out << to_json(doc) << '\n';
    } else {
      out << format_census(c.disc, c.rank, doc.census);
    }
    return 0;
  });
}

int cmd_cells(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    c.validate();
    std::filesystem::create_directories(c.out_dir);
    RunConfig fresh = c;
    fresh.recompute = true;
    const VoronoiComplex cx = complex_for(fresh, err);
    RunDocument doc;
    doc.disc = c.disc;
    doc.rank = c.rank;
    doc.summary = summarize(cx);
    if (c.format == Format::json) {
      out << to_json(doc) << '\n';
    } else {
      for (const auto& r : doc.summary->degrees) {
        out << "n = " << r.n << ": " << r.cells << " cells, " << r.orientable << " orientable, |Stab| "
            << format_multiset(r.stabilizer_orders) << '\n';
      }
      out << "cell database: " << c.cells_path() << '\n';
    }
    return 0;
  });
}

int cmd_homology(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    c.validate();
    std::filesystem::create_directories(c.out_dir);
    RunDocument doc;
    const VoronoiComplex cx = complex_for(c, err, &doc.census);
    doc.disc = c.disc;
    doc.rank = c.rank;
    doc.summary = summarize(cx);
    doc.verification = verify(cx);
    if (!doc.verification->chain.ok()) {
      out << format_verification(*doc.verification);
      err << "chain identity fails; no homology emitted\n";
      return 1;
    }
    doc.homology = homology(cx, c.workers);
    write_file(c.report_path(), to_json(doc) + "\n");
    if (c.format == Format::json) {
      out << to_json(doc) << '\n';
    } else {
      out << format_table(*doc.summary, *doc.homology) << '\n' << format_verification(*doc.verification);
    }
    return doc.verification->ok() ? 0 : 1;
  });
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    c.validate();
    std::filesystem::create_directories(c.out_dir);
    const VoronoiComplex cx = complex_for(c, err);
    RunDocument doc;
    doc.disc = c.disc;
    doc.rank = c.rank;
    doc.verification = verify(cx);
    if (c.format == Format::json) {
      out << to_json(doc) << '\n';
    } else {
      out << format_verification(*doc.verification);
    }
    return doc.verification->ok() ? 0 : 1;
  });
}

}  // namespace hvor::cli
