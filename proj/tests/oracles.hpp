#pragma once

// Independent reference implementations used only by the tests: brute-force
// box search for short vectors, a textbook Smith normal form, rational rank,
// random generators for forms and group elements.

#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "hvor/hermitian.hpp"
#include "hvor/isometry.hpp"
#include "hvor/linalg.hpp"
#include "hvor/number_field.hpp"

namespace oracle {

using hvor::Integer;
using hvor::Rational;

// A[x] written out directly from the entries: sum_ij conj(x_i) a_ij x_j.
inline Rational direct_value(const hvor::HermitianForm& a, const hvor::OVector& x) {
  hvor::QuadElement s(a.disc(), 0);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      s += hvor::QuadElement(x[i]).conj() * a(i, j) * hvor::QuadElement(x[j]);
    }
  }
  return s.a();  // b vanishes for Hermitian a
}

// Gauss-Jordan inverse over Q, written independently of the library.
inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational f = 1 / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational g = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

// All nonzero x in O^N with A[x] <= bound by scanning a box in Z^{2N}; the
// box comes from x_i^2 <= bound * (G^{-1})_ii. Returns canonical classes.
inline std::map<hvor::OVector, Rational, decltype(&hvor::lex_less)> box_search(
    const hvor::HermitianForm& a, const Rational& bound) {
  const long disc = a.disc();
  const std::size_t m = 2 * a.rank();
  const hvor::RationalMatrix g = hvor::realify(a);
  std::vector<std::vector<Rational>> gm(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gm[i][j] = g(i, j);
  }
  const auto inv = invert(gm);
  std::vector<long> box(m);
  for (std::size_t i = 0; i < m; ++i) {
    box[i] = static_cast<long>(std::floor(std::sqrt(Rational(bound * inv[i][i]).get_d()))) + 1;
  }
  std::map<hvor::OVector, Rational, decltype(&hvor::lex_less)> out(&hvor::lex_less);
  std::vector<long> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = -box[i];
  while (true) {
    bool nonzero = false;
    for (long v : x) nonzero = nonzero || v != 0;
    if (nonzero) {
      hvor::OVector v;
      for (std::size_t i = 0; i < a.rank(); ++i) v.emplace_back(disc, x[2 * i], x[2 * i + 1]);
      const Rational val = direct_value(a, v);
      if (val <= bound) out.emplace(hvor::canonical(v), val);
    }
    std::size_t k = 0;
    while (k < m && x[k] == box[k]) {
      x[k] = -box[k];
      ++k;
    }
    if (k == m) break;
    ++x[k];
  }
  return out;
}

// Textbook Smith form: repeated division with remainder and a divisibility
// repair step, no modular reduction and no sparse phase.
inline std::vector<Integer> naive_smith(std::vector<std::vector<Integer>> a) {
  const std::size_t r = a.size();
  const std::size_t c = r ? a[0].size() : 0;
  std::vector<Integer> d;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    bool found = false;
    for (std::size_t i = t; i < r && !found; ++i) {
      for (std::size_t j = t; j < c && !found; ++j) {
        if (a[i][j] != 0) {
          std::swap(a[t], a[i]);
          for (auto& row : a) std::swap(row[t], row[j]);
          found = true;
        }
      }
    }
    if (!found) break;
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        while (a[i][t] != 0) {
          const Integer q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < c; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) std::swap(a[i], a[t]);
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        while (a[t][j] != 0) {
          const Integer q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) {
            for (std::size_t i = t; i < r; ++i) std::swap(a[i][j], a[i][t]);
          }
        }
      }
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t i = t + 1; i < r && clean; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < c; ++k) a[t][k] += a[i][k];
            clean = false;
            break;
          }
        }
      }
    }
    d.push_back(abs(a[t][t]));
  }
  return d;
}

// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rational_rank(const std::vector<std::vector<Integer>>& m) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline hvor::QuadInteger random_integer(long disc, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> u(-range, range);
  return {disc, u(rng), u(rng)};
}

inline hvor::OVector random_vector(long disc, std::size_t n, std::mt19937_64& rng, long range) {
  hvor::OVector v;
  do {
    v.clear();
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(random_integer(disc, rng, range));
      nonzero = nonzero || !v.back().is_zero();
    }
    if (nonzero) break;
  } while (true);
  return v;
}

// Positive definite form sum of q(v) over random vectors plus a multiple of I.
inline hvor::HermitianForm random_positive_form(long disc, std::size_t n, std::mt19937_64& rng) {
  hvor::HermitianForm a = hvor::HermitianForm::identity(disc, n);
  for (std::size_t k = 0; k < n + 1; ++k) a += hvor::rank_one(disc, random_vector(disc, n, rng, 2));
  return a;
}

// Product of random elementary matrices and a unit diagonal: an element of GL_N(O).
inline hvor::GroupElement random_group_element(long disc, std::size_t n, std::mt19937_64& rng,
                                               int steps = 4) {
  hvor::GroupElement g = hvor::GroupElement::identity(disc, n);
  const auto us = hvor::units(disc);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_unit(0, us.size() - 1);
  for (int s = 0; s < steps; ++s) {
    std::vector<hvor::QuadInteger> e = hvor::GroupElement::identity(disc, n).entries();
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (n > 1) {
      while (j == i) j = pick(rng);
      e[i * n + j] = random_integer(disc, rng, 1);
    }
    e[i * n + i] = us[pick_unit(rng)];
    g = g * hvor::GroupElement(disc, n, e);
  }
  return g;
}

}  // namespace oracle
