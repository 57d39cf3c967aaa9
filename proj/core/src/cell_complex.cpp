#include "hvor/cell_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hvor/homology.hpp"
#include "hvor/parallel.hpp"

namespace hvor {

namespace {

std::vector<IntVector> all_coords(long disc, const std::vector<OVector>& vectors) {
  std::vector<IntVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(q_coords(disc, v));
  return out;
}

std::size_t f_rank(const std::vector<OVector>& vectors) {
  std::vector<std::vector<QuadElement>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
  return field_rank(rows);
}

// Sign of the frame relative to the basis of c. The frame must lie in the
// span of c and have dim + 1 members.
int frame_sign(long disc, const Cell& c, const std::vector<IntVector>& frame) {
  const SpanProjection proj(all_coords(disc, c.vectors));
  std::vector<IntVector> f, b;
  for (const auto& x : frame) f.push_back(proj.project(x));
  for (const auto& x : c.basis_coords(disc)) b.push_back(proj.project(x));
  const int sf = determinant_sign(f);
  if (sf == 0) throw std::logic_error("degenerate frame in orientation comparison");
  return sf * determinant_sign(b);
}

std::set<OVector, decltype(&lex_less)> vector_set(const std::vector<OVector>& vs) {
  std::set<OVector, decltype(&lex_less)> s(&lex_less);
  for (const auto& v : vs) s.insert(canonical(v));
  return s;
}

}  // namespace

std::vector<IntVector> Cell::basis_coords(long disc) const {
  std::vector<IntVector> out;
  for (std::size_t k : basis) out.push_back(q_coords(disc, vectors[k]));
  return out;
}

Cell make_cell(long disc, std::vector<OVector> vectors) {
  for (auto& v : vectors) v = canonical(v);
  std::sort(vectors.begin(), vectors.end(), lex_less);
  Cell c;
  c.vectors = std::move(vectors);
  const auto coords = all_coords(disc, c.vectors);
  c.basis = independent_subset(coords);
  c.dim = c.basis.size() - 1;
  // Full-dimensional cells take the orientation of the ambient coordinates,
  // which GL_N(O) preserves; the top cycle is only a cycle in this orientation.
  if (c.basis.size() == coords.front().size() && c.basis.size() >= 2) {
    std::vector<IntVector> b;
    for (std::size_t k : c.basis) b.push_back(coords[k]);
    if (determinant_sign(b) < 0) std::swap(c.basis[0], c.basis[1]);
  }
  return c;
}

int orientation_action(long disc, const GroupElement& gamma, const Cell& from, const Cell& to) {
  if (from.dim != to.dim) throw std::invalid_argument("cells of different dimension");
  const auto targets = vector_set(to.vectors);
  for (const auto& v : from.vectors) {
    if (targets.count(canonical(gamma.apply(v))) == 0) {
      throw std::invalid_argument("element does not map the cell onto the target");
    }
  }
  std::vector<IntVector> frame;
  for (std::size_t k : from.basis) frame.push_back(q_coords(disc, gamma.apply(from.vectors[k])));
  return frame_sign(disc, to, frame);
}

void finish_cell(long disc, Cell& c) {
  c.stabilizer = stabilizer(disc, c.vectors);
  c.orientable = true;
  for (const auto& g : c.stabilizer.generators) {
    if (orientation_action(disc, g, c, c) != 1) {
      c.orientable = false;
      break;
    }
  }
}

namespace {

struct Candidate {
  std::size_t parent = 0;
  std::size_t multiplicity = 1;
  std::size_t outside = 0;  // index in the parent of a vector not on the face
  Cell face;                // the face itself, before fusion
  std::vector<Rational> key;
  std::size_t target = 0;
  std::optional<GroupElement> witness;  // witness * face = target
  int sign = 0;
};

std::vector<Candidate> faces_of(long disc, std::size_t n, const Cell& sigma, std::size_t parent,
                                bool all_facets) {
  const auto coords = all_coords(disc, sigma.vectors);
  const auto facets = dual_description(coords);
  std::vector<std::vector<std::size_t>> subsets;
  for (const auto& f : facets) subsets.push_back(f.generators);
  std::vector<std::vector<std::size_t>> groups;
  if (all_facets) {
    for (std::size_t i = 0; i < subsets.size(); ++i) groups.push_back({i});
  } else {
    groups = subset_orbits(sigma.stabilizer, sigma.vectors, subsets);
  }
  std::vector<Candidate> out;
  for (const auto& g : groups) {
    const auto& subset = subsets[g.front()];
    std::vector<OVector> vs;
    for (std::size_t k : subset) vs.push_back(sigma.vectors[k]);
    if (f_rank(vs) < n) continue;
    Candidate c;
    c.parent = parent;
    c.multiplicity = g.size();
    std::size_t k = 0;
    while (k < subset.size() && subset[k] == k) ++k;
    c.outside = k;  // subset is increasing, so k is the first index missing from it
    c.face = make_cell(disc, std::move(vs));
    if (c.face.dim + 1 != sigma.dim) throw std::logic_error("facet of unexpected dimension");
    c.key = configuration_invariant(disc, c.face.vectors);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

VoronoiComplex build_complex(const std::vector<PerfectFormRecord>& perfect, const CellOptions& options) {
  if (perfect.empty()) throw std::invalid_argument("no perfect forms");
  VoronoiComplex cx;
  cx.disc = perfect.front().form.disc();
  cx.rank = perfect.front().form.rank();
  const long disc = cx.disc;
  const std::size_t n = cx.rank;
  const std::size_t top = cx.top_dim();

  auto& tops = cx.cells[top];
  for (const auto& p : perfect) {
    Cell c = make_cell(disc, p.min_vectors.vectors);
    if (c.dim != top) throw std::logic_error("perfect cone of wrong dimension");
    tops.push_back(std::move(c));
  }
  parallel_for(tops.size(), options.workers, [&](std::size_t i) {
    Cell& c = tops[i];
    if (perfect[i].stabilizer.order > 0) {
      c.stabilizer = perfect[i].stabilizer;
      c.orientable = true;
      for (const auto& g : c.stabilizer.generators) {
        if (orientation_action(disc, g, c, c) != 1) c.orientable = false;
      }
    } else {
      finish_cell(disc, c);
    }
  });
  if (options.progress) options.progress(top, tops.size());

  for (std::size_t dim = top; dim > n - 1; --dim) {
    const auto& upper = cx.cells[dim];
    std::vector<std::vector<Candidate>> per_cell(upper.size());
    parallel_for(upper.size(), options.workers, [&](std::size_t i) {
      per_cell[i] = faces_of(disc, n, upper[i], i, options.all_facets);
    });
    std::vector<Candidate> cands;
    for (auto& v : per_cell) {
      for (auto& c : v) cands.push_back(std::move(c));
    }

    // fuse orbits, bucket by invariant; buckets are independent
    std::map<std::vector<Rational>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < cands.size(); ++i) buckets[cands[i].key].push_back(i);
    std::vector<std::vector<std::size_t>*> bucket_list;
    for (auto& [key, members] : buckets) bucket_list.push_back(&members);
    std::vector<std::vector<std::size_t>> reps(bucket_list.size());  // candidate ids of new reps
    std::vector<std::vector<std::size_t>> rep_of(bucket_list.size());
    parallel_for(bucket_list.size(), options.workers, [&](std::size_t b) {
      auto& members = *bucket_list[b];
      for (std::size_t ci : members) {
        Candidate& c = cands[ci];
        bool found = false;
        for (std::size_t r = 0; r < reps[b].size() && !found; ++r) {
          const Candidate& rep = cands[reps[b][r]];
          auto g = cell_equivalent(disc, c.face.vectors, rep.face.vectors);
          if (g) {
            c.witness = std::move(g);
            c.target = r;
            found = true;
          }
        }
        if (!found) {
          c.witness = GroupElement::identity(disc, n);
          c.target = reps[b].size();
          reps[b].push_back(ci);
        }
      }
    });
    auto& lower = cx.cells[dim - 1];
    std::vector<std::size_t> offset(bucket_list.size());
    for (std::size_t b = 0; b < bucket_list.size(); ++b) {
      offset[b] = lower.size();
      for (std::size_t ci : reps[b]) lower.push_back(cands[ci].face);
      for (std::size_t ci : *bucket_list[b]) cands[ci].target += offset[b];
    }
    parallel_for(lower.size(), options.workers, [&](std::size_t i) { finish_cell(disc, lower[i]); });

    // incidence signs
    parallel_for(cands.size(), options.workers, [&](std::size_t i) {
      Candidate& c = cands[i];
      const Cell& sigma = upper[c.parent];
      std::vector<IntVector> frame{q_coords(disc, sigma.vectors[c.outside])};
      for (const auto& x : c.face.basis_coords(disc)) frame.push_back(x);
      const int eps = frame_sign(disc, sigma, frame);
      const int eta = orientation_action(disc, *c.witness, c.face, lower[c.target]);
      c.sign = eps * eta;
    });
    auto& inc = cx.incidences[dim];
    inc.assign(upper.size(), {});
    for (const auto& c : cands) inc[c.parent].push_back({c.target, c.sign, c.multiplicity});
    if (options.progress) options.progress(dim - 1, lower.size());
  }
  cx.incidences[n - 1].assign(cx.cells[n - 1].size(), {});

  assemble_differentials(cx);
  return cx;
}

void assemble_differentials(VoronoiComplex& cx) {
  cx.orientable.clear();
  cx.differentials.clear();
  for (const auto& [dim, cells] : cx.cells) {
    auto& o = cx.orientable[dim];
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].orientable) o.push_back(i);
    }
  }
  for (std::size_t dim = cx.bottom_dim() + 1; dim <= cx.top_dim(); ++dim) {
    const auto& rows = cx.orientable[dim - 1];
    const auto& cols = cx.orientable[dim];
    std::map<std::size_t, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    DifferentialMatrix d;
    d.degree = dim;
    d.matrix = SparseMatrix(rows.size(), cols.size());
    const auto& inc = cx.incidences[dim];
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const auto& f : inc[cols[j]]) {
        auto it = row_of.find(f.target);
        if (it == row_of.end()) continue;
        d.matrix.add(it->second, j, Integer(f.sign) * static_cast<unsigned long>(f.multiplicity));
      }
    }
    cx.differentials[dim] = std::move(d);
  }
}

ComplexSummary summarize(const VoronoiComplex& cx) {
  ComplexSummary s;
  s.disc = cx.disc;
  s.rank = cx.rank;
  for (auto it = cx.cells.rbegin(); it != cx.cells.rend(); ++it) {
    DegreeSummary row;
    row.n = it->first;
    row.cells = it->second.size();
    for (const auto& c : it->second) ++row.stabilizer_orders[c.stabilizer.order];
    auto o = cx.orientable.find(row.n);
    row.orientable = o == cx.orientable.end() ? 0 : o->second.size();
    auto d = cx.differentials.find(row.n);
    if (d != cx.differentials.end()) {
      row.nnz = d->second.nnz();
      const SmithResult snf = smith_normal_form(d->second.matrix);
      row.rank = snf.rank;
      row.elementary_divisors = snf.divisors;
    }
    s.degrees.push_back(std::move(row));
  }
  return s;
}

std::string format_order(const Integer& order) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factorize(order)) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  if (first) os << order.get_str();
  return os.str();
}

std::string format_multiset(const std::map<Integer, std::size_t>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, k] : m) {
    if (!first) os << ", ";
    first = false;
    os << x.get_str();
    if (k > 1) os << " (" << k << ')';
  }
  return os.str();
}

}  // namespace hvor
