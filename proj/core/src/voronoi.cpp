#include "hvor/voronoi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hvor/io.hpp"
#include "hvor/parallel.hpp"

namespace hvor {

PerfectFormRecord make_record(const HermitianForm& form) {
  PerfectFormRecord r;
  r.form = form;
  r.min_vectors = minimal_vectors(form);
  if (r.min_vectors.minimum != 1) throw std::domain_error("form does not have minimum 1");
  std::vector<IntVector> gens;
  gens.reserve(r.min_vectors.vectors.size());
  for (const auto& v : r.min_vectors.vectors) gens.push_back(q_coords(form.disc(), v));
  r.cone = make_cone(std::move(gens));
  if (r.cone.dim != coord_dim(form.rank())) throw std::domain_error("form is not perfect");
  return r;
}

Rational flip_step(const HermitianForm& a, const HermitianForm& h, std::size_t cap) {
  const Rational m = minimal_vectors(a).minimum;
  Rational lo = 0;
  Rational hi = 1;
  for (std::size_t iter = 0; iter < cap; ++iter) {
    const HermitianForm b = a + hi * h;
    if (!is_positive_definite(b)) {
      hi = (lo + hi) / 2;
      continue;
    }
    const auto sv = shortest_vectors_upto(b, m);
    if (sv.empty()) throw std::logic_error("kept minimal vectors vanished during flip");
    if (sv.front().second == m) {
      for (const auto& [w, val] : sv) {
        if (evaluate(h, w) != 0) return hi;
      }
      lo = hi;
      hi *= 2;
      continue;
    }
    // The minimum dropped: move back to the first crossing among the
    // offending vectors.
    Rational best = hi;
    for (const auto& [w, val] : sv) {
      if (val >= m) break;
      const Rational hw = evaluate(h, w);
      if (sgn(hw) >= 0) throw std::logic_error("vector below the minimum with H[w] >= 0");
      best = std::min(best, Rational((m - evaluate(a, w)) / hw));
    }
    hi = best;
  }
  throw std::runtime_error("flip step did not converge within the iteration cap");
}

PerfectFormRecord initial_perfect_form(std::size_t n, long disc) {
  omega_data(disc);
  if (n == 0) throw std::invalid_argument("rank must be positive");
  HermitianForm a = HermitianForm::identity(disc, n);
  const std::size_t dim = coord_dim(n);
  for (std::size_t step = 0; step <= dim; ++step) {
    const MinVectorSet mv = minimal_vectors(a);
    std::vector<RatVector> rows;
    for (const auto& v : mv.vectors) {
      const IntVector c = q_coords(disc, v);
      rows.emplace_back(c.begin(), c.end());
    }
    if (rank(rows) == dim) return make_record(a);
    const std::vector<RatVector> ns = nullspace(rows, dim);
    HermitianForm h = form_from_functional(disc, n, ns.front());
    if (is_positive_semidefinite(h)) h = Rational(-1) * h;
    a += flip_step(a, h) * h;
  }
  throw std::logic_error("perfection did not terminate");
}

namespace {

HermitianForm facet_form(const PerfectFormRecord& p, const Facet& f) {
  RatVector h(f.normal.begin(), f.normal.end());
  return form_from_functional(p.form.disc(), p.form.rank(), h);
}

const std::vector<Facet>& facets_of(PerfectFormRecord& p) {
  if (!p.cone.facets) p.cone.facets = dual_description(p.cone.generators);
  return *p.cone.facets;
}

}  // namespace

PerfectFormRecord neighbor(PerfectFormRecord& p, std::size_t facet) {
  const Facet& f = facets_of(p).at(facet);
  const HermitianForm h = facet_form(p, f);
  const Rational rho = flip_step(p.form, h);
  PerfectFormRecord r = make_record(p.form + rho * h);
  // the facet's vectors stay minimal
  for (std::size_t k : f.generators) {
    if (!std::binary_search(r.min_vectors.vectors.begin(), r.min_vectors.vectors.end(),
                            p.min_vectors.vectors[k], lex_less)) {
      throw std::logic_error("neighbor lost a facet vector");
    }
  }
  return r;
}

std::vector<std::vector<std::size_t>> facet_orbits(PerfectFormRecord& p) {
  std::vector<std::vector<std::size_t>> subsets;
  for (const auto& f : facets_of(p)) subsets.push_back(f.generators);
  return subset_orbits(p.stabilizer, p.min_vectors.vectors, subsets);
}

std::vector<Rational> form_invariant(const PerfectFormRecord& p) {
  return gram_invariant(p.form, p.min_vectors.vectors);
}

namespace {

class Registry {
 public:
  explicit Registry(long disc) : disc_(disc) {}

  // Returns (class id, whether it is new).
  std::pair<std::size_t, bool> insert(PerfectFormRecord r) {
    auto key = form_invariant(r);
    auto& bucket = buckets_[key];
    for (std::size_t id : bucket) {
      const auto& q = records_[id];
      if (form_equivalent(q.form, q.min_vectors.vectors, r.form, r.min_vectors.vectors)) {
        return {id, false};
      }
    }
    r.stabilizer = stabilizer(disc_, r.min_vectors.vectors);
    r.stabilizer_order = r.stabilizer.order;
    bucket.push_back(records_.size());
    records_.push_back(std::move(r));
    keys_.push_back(std::move(key));
    return {records_.size() - 1, true};
  }

  std::vector<PerfectFormRecord>& records() { return records_; }
  const std::vector<Rational>& key(std::size_t id) const { return keys_[id]; }

 private:
  long disc_;
  std::map<std::vector<Rational>, std::vector<std::size_t>> buckets_;
  std::vector<PerfectFormRecord> records_;
  std::vector<std::vector<Rational>> keys_;
};

std::vector<CheckpointEntry> to_entries(const std::vector<PerfectFormRecord>& records,
                                        const std::vector<bool>& explored) {
  std::vector<CheckpointEntry> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    out.push_back({records[i].form, records[i].min_vectors.vectors, explored[i], records[i].neighbors});
  }
  return out;
}

}  // namespace

std::vector<PerfectFormRecord> enumerate_perfect_forms(std::size_t n, long disc,
                                                       const ExploreOptions& options) {
  Registry reg(disc);
  std::vector<bool> explored;

  if (!options.checkpoint.empty()) {
    for (const auto& e : read_checkpoint(options.checkpoint, disc, n)) {
      PerfectFormRecord r = make_record(e.form);
      if (r.min_vectors.vectors != e.min_vectors) {
        throw std::runtime_error("checkpoint minimal vectors do not match the stored form");
      }
      r.neighbors = e.neighbors;
      const auto [id, fresh] = reg.insert(std::move(r));
      if (!fresh || id != explored.size()) throw std::runtime_error("checkpoint has duplicate classes");
      explored.push_back(e.explored);
    }
  }
  if (reg.records().empty()) {
    reg.insert(initial_perfect_form(n, disc));
    explored.push_back(false);
  }

  auto save = [&]() {
    if (!options.checkpoint.empty()) {
      write_checkpoint(options.checkpoint, disc, n, to_entries(reg.records(), explored));
    }
  };
  save();

  for (std::size_t cur = 0; cur < reg.records().size(); ++cur) {
    if (explored[cur]) continue;
    if (options.max_classes != 0 && reg.records().size() >= options.max_classes) break;
    auto orbits = facet_orbits(reg.records()[cur]);
    // a facet with positive semidefinite normal form lies on the boundary of
    // the cone of positive forms and has nothing behind it (only for N = 1)
    {
      PerfectFormRecord& p = reg.records()[cur];
      std::erase_if(orbits, [&](const std::vector<std::size_t>& o) {
        return is_positive_semidefinite(facet_form(p, (*p.cone.facets)[o.front()]));
      });
    }
    if (options.reverse_facets) std::reverse(orbits.begin(), orbits.end());

    std::vector<PerfectFormRecord> flipped(orbits.size());
    {
      PerfectFormRecord& p = reg.records()[cur];
      parallel_for(orbits.size(), options.workers,
                   [&](std::size_t i) { flipped[i] = neighbor(p, orbits[i].front()); });
    }
    std::vector<std::pair<std::size_t, std::size_t>> nbrs;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const std::size_t id = reg.insert(std::move(flipped[i])).first;
      if (id == explored.size()) explored.push_back(false);
      for (std::size_t f : orbits[i]) nbrs.emplace_back(f, id);
    }
    std::sort(nbrs.begin(), nbrs.end());
    reg.records()[cur].neighbors = std::move(nbrs);
    explored[cur] = true;
    save();
    if (options.progress) {
      options.progress(reg.records().size(),
                       static_cast<std::size_t>(std::count(explored.begin(), explored.end(), true)));
    }
  }

  // deterministic order
  auto& records = reg.records();
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = records[x];
    const auto& b = records[y];
    if (a.min_vectors.total_count != b.min_vectors.total_count) {
      return a.min_vectors.total_count < b.min_vectors.total_count;
    }
    if (a.stabilizer_order != b.stabilizer_order) return a.stabilizer_order < b.stabilizer_order;
    return reg.key(x) < reg.key(y);
  });
  std::vector<std::size_t> position(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::vector<PerfectFormRecord> out;
  out.reserve(records.size());
  for (std::size_t id : order) {
    PerfectFormRecord r = std::move(records[id]);
    for (auto& nb : r.neighbors) nb.second = position[nb.second];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hvor
