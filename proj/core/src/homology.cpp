#include "hvor/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hvor/cell_complex.hpp"
#include "hvor/isometry.hpp"
#include "hvor/parallel.hpp"

namespace hvor {

std::map<Integer, std::size_t> SmithResult::torsion() const {
  std::map<Integer, std::size_t> out;
  for (const auto& [d, k] : divisors) {
    if (d > 1) out.emplace(d, k);
  }
  return out;
}

namespace {

// Rank and one nonzero maximal minor, by fraction-free elimination with full
// pivoting; every intermediate entry is a minor of the input.
std::pair<std::size_t, Integer> rank_and_minor(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows && pi == rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        if (sgn(a[i][j]) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == rows) break;
    std::swap(a[r], a[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pj]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) {
        a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j]) / prev;
      }
      a[i][r] = 0;
    }
    prev = a[r][r];
  }
  return {r, abs(prev)};
}

// Rewrites a list of positive integers into a divisibility chain describing
// the same finite abelian group.
void make_chain(std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), v[i].get_mpz_t(), v[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), v[i].get_mpz_t(), v[j].get_mpz_t());
      v[i] = g;
      v[j] = l;
    }
  }
}

}  // namespace

// The elimination runs modulo a nonzero maximal minor m. The cokernel of
// [A | m I] is sum Z/gcd(s_i, m) plus (Z/m)^(rows - r) and every invariant
// factor s_i divides m, so the s_i are recovered exactly while the entries
// stay below m.
std::vector<Integer> dense_smith_diagonal(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  const auto [r, m] = rank_and_minor(a);
  if (r == 0) return {};
  if (m == 1) return std::vector<Integer>(r, Integer(1));

  const Integer half = m / 2;
  auto reduce = [&](Integer& x) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  };
  for (auto& row : a) {
    for (auto& x : row) reduce(x);
  }

  std::vector<Integer> diag;
  Integer q;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(a[i][j]) != 0 &&
            (pi == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    while (true) {
      bool moved = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(a[t][j]) == 0) continue;
          a[i][j] -= q * a[t][j];
          reduce(a[i][j]);
        }
        if (sgn(a[i][t]) != 0) {
          std::swap(a[i], a[t]);
          moved = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) {
          if (sgn(a[i][t]) == 0) continue;
          a[i][j] -= q * a[i][t];
          reduce(a[i][j]);
        }
        if (sgn(a[t][j]) != 0) {
          for (std::size_t i = t; i < rows; ++i) std::swap(a[i][j], a[i][t]);
          moved = true;
        }
      }
      if (!moved) break;
    }
    diag.push_back(abs(a[t][t]));
  }

  std::vector<Integer> factors;
  for (std::size_t t = 0; t < rows; ++t) {
    Integer g = m;
    if (t < diag.size()) mpz_gcd(g.get_mpz_t(), diag[t].get_mpz_t(), m.get_mpz_t());
    factors.push_back(g);
  }
  make_chain(factors);
  // the last rows - r entries stand for the (Z/m)^(rows - r) summand
  factors.resize(r);
  return factors;
}

SmithResult smith_normal_form(const SparseMatrix& m) {
  SmithResult out;
  std::vector<std::map<std::size_t, Integer>> rows(m.rows());
  std::vector<std::set<std::size_t>> cols(m.cols());
  for (const auto& [k, v] : m.entries()) {
    rows[k.first].emplace(k.second, v);
    cols[k.second].insert(k.first);
  }
  std::vector<bool> row_alive(m.rows(), true), col_alive(m.cols(), true);

  // eliminate +-1 pivots, preferring short columns
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_alive[r] || rows[r].empty()) continue;
      std::size_t best = m.cols();
      for (const auto& [c, v] : rows[r]) {
        if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0 && (best == m.cols() || cols[c].size() < cols[best].size())) {
          best = c;
        }
      }
      if (best == m.cols()) continue;
      const bool positive = sgn(rows[r][best]) > 0;
      const std::vector<std::size_t> others(cols[best].begin(), cols[best].end());
      for (std::size_t s : others) {
        if (s == r) continue;
        Integer f = rows[s][best];
        if (!positive) f = -f;
        for (const auto& [c, v] : rows[r]) {
          auto [it, fresh] = rows[s].try_emplace(c, 0);
          it->second -= f * v;
          if (sgn(it->second) == 0) {
            rows[s].erase(it);
            cols[c].erase(s);
          } else if (fresh) {
            cols[c].insert(s);
          }
        }
      }
      for (const auto& [c, v] : rows[r]) cols[c].erase(r);
      rows[r].clear();
      row_alive[r] = false;
      col_alive[best] = false;
      ++out.rank;
      ++out.divisors[Integer(1)];
      progress = true;
    }
  }

  std::vector<std::size_t> rest_rows, rest_cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (row_alive[r] && !rows[r].empty()) rest_rows.push_back(r);
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (col_alive[c] && !cols[c].empty()) rest_cols.push_back(c);
  }
  if (rest_rows.empty()) return out;
  std::map<std::size_t, std::size_t> col_pos;
  for (std::size_t j = 0; j < rest_cols.size(); ++j) col_pos[rest_cols[j]] = j;
  std::vector<std::vector<Integer>> dense(rest_rows.size(), std::vector<Integer>(rest_cols.size(), Integer(0)));
  for (std::size_t i = 0; i < rest_rows.size(); ++i) {
    for (const auto& [c, v] : rows[rest_rows[i]]) dense[i][col_pos.at(c)] = v;
  }
  for (const auto& d : dense_smith_diagonal(std::move(dense))) {
    ++out.rank;
    ++out.divisors[d];
  }
  return out;
}

std::string HomologyGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& [d, k] : torsion) {
    if (!first) os << " + ";
    first = false;
    if (k > 1) {
      os << "(Z_" << d.get_str() << ")^" << k;
    } else {
      os << "Z_" << d.get_str();
    }
  }
  if (first) os << '0';
  return os.str();
}

const HomologyGroup& HomologyResult::at(std::size_t n) const {
  for (const auto& g : groups) {
    if (g.n == n) return g;
  }
  throw std::out_of_range("no homology group in degree " + std::to_string(n));
}

HomologyResult homology(const VoronoiComplex& cx, std::size_t workers) {
  for (const auto& [n, d] : cx.differentials) {
    auto below = cx.differentials.find(n - 1);
    if (below == cx.differentials.end()) continue;
    if (!below->second.matrix.multiply(d.matrix).is_zero()) {
      throw std::logic_error("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
    }
  }
  std::vector<std::size_t> degrees;
  for (const auto& [n, d] : cx.differentials) degrees.push_back(n);
  std::vector<SmithResult> results(degrees.size());
  parallel_for(degrees.size(), workers, [&](std::size_t i) {
    results[i] = smith_normal_form(cx.differentials.at(degrees[i]).matrix);
  });
  std::map<std::size_t, SmithResult> snf;
  for (std::size_t i = 0; i < degrees.size(); ++i) snf[degrees[i]] = std::move(results[i]);

  HomologyResult out;
  out.serre_primes = torsion_prime_bound(cx.rank, cx.disc);
  const std::size_t top = cx.top_dim();
  for (std::size_t n = top + 1; n-- > 0;) {
    HomologyGroup g;
    g.n = n;
    g.cohomology_degree = top - n;
    auto o = cx.orientable.find(n);
    const std::size_t size = o == cx.orientable.end() ? 0 : o->second.size();
    auto here = snf.find(n);
    auto above = snf.find(n + 1);
    const std::size_t rank_here = here == snf.end() ? 0 : here->second.rank;
    const std::size_t rank_above = above == snf.end() ? 0 : above->second.rank;
    if (rank_here + rank_above > size) throw std::logic_error("ranks exceed the chain group");
    g.free_rank = size - rank_here - rank_above;
    if (above != snf.end()) g.torsion = above->second.torsion();
    out.groups.push_back(std::move(g));
  }
  return out;
}

}  // namespace hvor
