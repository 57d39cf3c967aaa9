#include "hvor/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hvor {

namespace {

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

// Incremental echelon basis: reduce a vector against stored pivots.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  // Returns true and stores the reduced vector if it was independent.
  bool insert(RatVector v) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (sgn(v[p]) != 0) {
        const Rational f = v[p];
        for (std::size_t j = p; j < dim_; ++j) v[j] -= f * basis_[k][j];
      }
    }
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return false;
    const Rational lead = v[p];
    for (std::size_t j = p; j < dim_; ++j) v[j] /= lead;
    // keep earlier rows reduced at the new pivot
    for (auto& row : basis_) {
      if (sgn(row[p]) != 0) {
        const Rational f = row[p];
        for (std::size_t j = p; j < dim_; ++j) row[j] -= f * v[j];
      }
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const { return basis_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<RatVector>& basis() const { return basis_; }

 private:
  std::size_t dim_;
  std::vector<RatVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::size_t rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  Echelon e(rows.front().size());
  for (const auto& r : rows) e.insert(to_rational(r));
  return e.size();
}

std::size_t rank(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  Echelon e(rows.front().size());
  for (const auto& r : rows) e.insert(r);
  return e.size();
}

std::vector<std::size_t> independent_subset(const std::vector<IntVector>& rows) {
  std::vector<std::size_t> out;
  if (rows.empty()) return out;
  Echelon e(rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (e.insert(to_rational(rows[i]))) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> pivot_columns(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  Echelon e(rows.front().size());
  for (const auto& r : rows) e.insert(to_rational(r));
  std::vector<std::size_t> p = e.pivots();
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t dim) {
  Echelon e(dim);
  for (const auto& r : rows) e.insert(r);
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t p : e.pivots()) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RatVector x(dim);
    x[free] = 1;
    // basis rows are fully reduced: pivot p row k has x_p = -row_k[free]
    for (std::size_t k = 0; k < e.size(); ++k) x[e.pivots()[k]] = -e.basis()[k][free];
    out.push_back(std::move(x));
  }
  return out;
}

Integer determinant(std::vector<IntVector> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m[r][k]) == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
    }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1];
  return sign > 0 ? d : Integer(-d);
}

int determinant_sign(const std::vector<IntVector>& rows) {
  return sgn(determinant(rows));
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive(std::move(out));
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

Integer dot(const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// ---------------------------------------------------------------------------

FieldMatrix inverse(const FieldMatrix& m) {
  const std::size_t n = m.rows();
  FieldMatrix a = m;
  FieldMatrix inv(n, n, QuadElement::rational(0));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = QuadElement::rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("singular matrix over F");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const QuadElement piv_inv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= piv_inv;
      inv(c, j) *= piv_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const QuadElement f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

QuadElement determinant(const FieldMatrix& m) {
  const std::size_t n = m.rows();
  FieldMatrix a = m;
  QuadElement det = QuadElement::rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return QuadElement::rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const QuadElement piv_inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const QuadElement f = a(i, c) * piv_inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::size_t field_rank(const std::vector<std::vector<QuadElement>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  std::vector<std::vector<QuadElement>> basis;
  std::vector<std::size_t> pivots;
  for (auto v : vectors) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::size_t p = pivots[k];
      if (!v[p].is_zero()) {
        const QuadElement f = v[p];
        for (std::size_t j = 0; j < n; ++j) v[j] -= f * basis[k][j];
      }
    }
    std::size_t p = 0;
    while (p < n && v[p].is_zero()) ++p;
    if (p == n) continue;
    const QuadElement inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
    pivots.push_back(p);
    if (basis.size() == n) break;
  }
  return basis.size();
}

}  // namespace hvor
