#include "hvor/polyhedra.hpp"

#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace hvor {

SpanProjection::SpanProjection(const std::vector<IntVector>& generators)
    : pivots_(pivot_columns(generators)) {}

IntVector SpanProjection::project(const IntVector& v) const {
  IntVector p(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) p[k] = v[pivots_[k]];
  return p;
}

IntVector SpanProjection::lift_functional(const IntVector& h, std::size_t ambient) const {
  IntVector full(ambient, Integer(0));
  for (std::size_t k = 0; k < pivots_.size(); ++k) full[pivots_[k]] = h[k];
  return full;
}

Cone make_cone(std::vector<IntVector> generators) {
  Cone c;
  c.dim = rank(generators);
  c.generators = std::move(generators);
  return c;
}

std::size_t span_rank(const std::vector<IntVector>& vectors) { return rank(vectors); }

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVector v;
  Bits zeros;
};

// Column k of the inverse of the square matrix with the given rows, made
// primitive; a_k . col > 0 and a_j . col = 0 for j != k.
std::vector<IntVector> simplicial_rays(const std::vector<IntVector>& rows) {
  const std::size_t d = rows.size();
  RationalMatrix m(d, 2 * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
    m(i, d + i) = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (sgn(m(p, c)) == 0) ++p;
    if (p != c) {
      for (std::size_t j = 0; j < 2 * d; ++j) std::swap(m(p, j), m(c, j));
    }
    const Rational inv = 1 / m(c, c);
    for (std::size_t j = 0; j < 2 * d; ++j) m(c, j) *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < 2 * d; ++j) m(i, j) -= f * m(c, j);
    }
  }
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < d; ++k) {
    RatVector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = m(i, d + k);
    out.push_back(primitive(col));
  }
  return out;
}

}  // namespace

std::vector<Facet> extreme_rays(const std::vector<IntVector>& constraints) {
  if (constraints.empty()) throw std::invalid_argument("no constraints");
  const std::size_t m = constraints.size();
  const std::size_t d = constraints.front().size();
  const std::vector<std::size_t> basis = independent_subset(constraints);
  if (basis.size() != d) throw std::invalid_argument("constraint system is not of full rank");

  std::vector<IntVector> brows;
  for (std::size_t k : basis) brows.push_back(constraints[k]);
  const std::vector<IntVector> init = simplicial_rays(brows);

  std::vector<Ray> rays;
  for (std::size_t k = 0; k < d; ++k) {
    Ray r{init[k], Bits(m)};
    for (std::size_t j = 0; j < d; ++j) {
      if (j != k) r.zeros.set(basis[j]);
    }
    rays.push_back(std::move(r));
  }
  Bits in_basis(m);
  for (std::size_t k : basis) in_basis.set(k);

  for (std::size_t i = 0; i < m; ++i) {
    if (in_basis.test(i)) continue;
    const IntVector& a = constraints[i];
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(a, rays[r].v);
      const int sg = sgn(s[r]);
      (sg > 0 ? pos : sg < 0 ? neg : zero).push_back(r);
    }
    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size());
    for (std::size_t r : pos) next.push_back(rays[r]);
    for (std::size_t r : zero) {
      next.push_back(rays[r]);
      next.back().zeros.set(i);
    }
    if (!neg.empty()) {
      for (std::size_t p : pos) {
        for (std::size_t q : neg) {
          Bits common = rays[p].zeros & rays[q].zeros;
          if (d >= 2 && common.count() + 2 < d) continue;
          bool adjacent = true;
          for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
            if (t == p || t == q) continue;
            if (common.is_subset_of(rays[t].zeros)) adjacent = false;
          }
          if (!adjacent) continue;
          IntVector v(d);
          for (std::size_t k = 0; k < d; ++k) v[k] = s[p] * rays[q].v[k] - s[q] * rays[p].v[k];
          Ray nr{primitive(std::move(v)), std::move(common)};
          nr.zeros.set(i);
          next.push_back(std::move(nr));
        }
      }
    }
    rays = std::move(next);
  }

  std::vector<Facet> out;
  out.reserve(rays.size());
  for (auto& r : rays) {
    Facet f;
    f.normal = std::move(r.v);
    for (std::size_t k = r.zeros.find_first(); k != Bits::npos; k = r.zeros.find_next(k)) {
      f.generators.push_back(k);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Facet> dual_description(const std::vector<IntVector>& generators) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  const SpanProjection proj(generators);
  std::vector<IntVector> projected;
  projected.reserve(generators.size());
  for (const auto& g : generators) projected.push_back(proj.project(g));
  std::vector<Facet> facets = extreme_rays(projected);
  const std::size_t ambient = generators.front().size();
  for (auto& f : facets) f.normal = proj.lift_functional(f.normal, ambient);
  return facets;
}

std::vector<std::pair<Facet, std::vector<OVector>>> faces_of_codim_one(
    Cone& cone, const std::vector<OVector>& vectors) {
  if (!cone.facets) cone.facets = dual_description(cone.generators);
  std::vector<std::pair<Facet, std::vector<OVector>>> out;
  for (const auto& f : *cone.facets) {
    std::vector<OVector> vs;
    for (std::size_t k : f.generators) vs.push_back(vectors.at(k));
    out.emplace_back(f, std::move(vs));
  }
  return out;
}

}  // namespace hvor
