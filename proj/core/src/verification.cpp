#include "hvor/verification.hpp"

#include <stdexcept>

namespace hvor {

MassReport mass_formula(const std::vector<std::pair<std::size_t, Integer>>& cells) {
  MassReport r;
  r.total = 0;
  for (const auto& [dim, order] : cells) {
    if (sgn(order) <= 0) throw std::invalid_argument("stabilizer order must be positive");
    Rational x(Integer(1), order);
    x.canonicalize();
    r.partial_sums[dim] += x;
  }
  for (const auto& [dim, s] : r.partial_sums) {
    if (dim % 2 == 0) {
      r.total += s;
    } else {
      r.total -= s;
    }
  }
  return r;
}

MassReport mass_formula(const VoronoiComplex& cx) {
  std::vector<std::pair<std::size_t, Integer>> cells;
  for (const auto& [dim, cs] : cx.cells) {
    for (const auto& c : cs) cells.emplace_back(dim, c.stabilizer.order);
  }
  return mass_formula(cells);
}

ChainReport chain_identity(const std::map<std::size_t, SparseMatrix>& d) {
  ChainReport r;
  for (const auto& [n, m] : d) {
    auto below = d.find(n - 1);
    if (n == 0 || below == d.end()) continue;
    if (below->second.cols() != m.rows()) {
      r.failing.push_back(n);
      continue;
    }
    if (!below->second.multiply(m).is_zero()) r.failing.push_back(n);
  }
  return r;
}

ChainReport chain_identity(const VoronoiComplex& cx) {
  std::map<std::size_t, SparseMatrix> d;
  for (const auto& [n, m] : cx.differentials) d.emplace(n, m.matrix);
  return chain_identity(d);
}

XiReport xi_cycle_check(const SparseMatrix& top, const std::vector<Integer>& orders) {
  if (orders.size() != top.cols()) throw std::invalid_argument("one order per top cell expected");
  XiReport r;
  r.all_top_orientable = true;
  Integer l = 1;
  for (const auto& o : orders) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), o.get_mpz_t());
  Integer g = 0;
  for (const auto& o : orders) {
    r.vector.push_back(l / o);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.vector.back().get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : r.vector) x /= g;
  }
  std::vector<Integer> image(top.rows(), Integer(0));
  for (const auto& [k, v] : top.entries()) image[k.first] += v * r.vector[k.second];
  r.is_cycle = true;
  for (const auto& x : image) r.is_cycle = r.is_cycle && sgn(x) == 0;
  return r;
}

XiReport xi_cycle_check(const VoronoiComplex& cx) {
  const std::size_t top = cx.top_dim();
  const auto& cells = cx.cells.at(top);
  const auto& orient = cx.orientable.at(top);
  std::vector<Integer> orders;
  for (std::size_t i : orient) orders.push_back(cells[i].stabilizer.order);
  auto d = cx.differentials.find(top);
  XiReport r;
  if (d == cx.differentials.end()) {
    // N = 1: no differential out of the top degree
    r = xi_cycle_check(SparseMatrix(0, orders.size()), orders);
  } else {
    r = xi_cycle_check(d->second.matrix, orders);
  }
  r.all_top_orientable = orient.size() == cells.size();
  return r;
}

RowStructureReport top_row_structure(const VoronoiComplex& cx) {
  RowStructureReport r;
  const std::size_t top = cx.top_dim();
  auto d = cx.differentials.find(top);
  if (d == cx.differentials.end()) return r;
  const auto& upper = cx.cells.at(top);
  const auto& lower = cx.cells.at(top - 1);
  const auto& cols = cx.orientable.at(top);
  const auto& rows = cx.orientable.at(top - 1);
  std::vector<std::vector<std::pair<std::size_t, Integer>>> by_row(d->second.matrix.rows());
  for (const auto& [k, v] : d->second.matrix.entries()) by_row[k.first].emplace_back(k.second, v);
  for (std::size_t i = 0; i < by_row.size(); ++i) {
    if (by_row[i].empty()) continue;
    ++r.nonzero_rows;
    bool good = by_row[i].size() == 2;
    const Integer& tau = lower[rows[i]].stabilizer.order;
    for (const auto& [j, v] : by_row[i]) {
      const Integer& sigma = upper[cols[j]].stabilizer.order;
      good = good && mpz_divisible_p(sigma.get_mpz_t(), tau.get_mpz_t()) && abs(v) == sigma / tau;
    }
    if (!good) r.bad_rows.push_back(i);
  }
  return r;
}

TorsionPrimeReport torsion_primes(const VoronoiComplex& cx) {
  TorsionPrimeReport r;
  r.admissible = torsion_prime_bound(cx.rank, cx.disc);
  for (const auto& [dim, cs] : cx.cells) {
    for (const auto& c : cs) {
      for (const auto& [p, e] : c.stabilizer.order_factorization) r.seen.insert(p);
    }
  }
  for (long p : r.seen) {
    if (r.admissible.count(p) == 0) r.violations.insert(p);
  }
  return r;
}

VerificationReport verify(const VoronoiComplex& cx) {
  VerificationReport r;
  r.mass = mass_formula(cx);
  r.chain = chain_identity(cx);
  r.xi = xi_cycle_check(cx);
  r.rows = top_row_structure(cx);
  r.primes = torsion_primes(cx);
  return r;
}

}  // namespace hvor
