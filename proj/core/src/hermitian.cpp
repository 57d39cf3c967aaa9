#include "hvor/hermitian.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hvor {

namespace {

QuadElement zero_el(long disc) { return QuadElement(disc, 0, 0); }

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // position of (i, j), i < j, among the pairs in row-major order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void check_same(const HermitianForm& a, const HermitianForm& b) {
  if (a.rank() != b.rank() || a.disc() != b.disc()) {
    throw std::invalid_argument("Hermitian forms of different shape");
  }
}

void check_dim(const HermitianForm& a, const OVector& v) {
  if (v.size() != a.rank()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

std::size_t coord_dim(std::size_t n) { return n * n; }

HermitianForm::HermitianForm(long disc, std::size_t n)
    : disc_(disc), n_(n), entries_(n * n, zero_el(disc)) {}

HermitianForm HermitianForm::identity(long disc, std::size_t n) {
  HermitianForm a(disc, n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, i, QuadElement(disc, 1));
  return a;
}

HermitianForm HermitianForm::from_coords(long disc, std::size_t n, const CoordVector& c) {
  if (c.size() != coord_dim(n)) throw std::invalid_argument("coordinate vector of wrong length");
  HermitianForm a(disc, n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, i, QuadElement(disc, c[i]));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t k = n + 2 * pair_index(n, i, j);
      a.set(i, j, QuadElement(disc, c[k], c[k + 1]));
    }
  }
  return a;
}

HermitianForm HermitianForm::from_matrix(long disc, const FieldMatrix& m) {
  const std::size_t n = m.rows();
  HermitianForm a(disc, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(m(j, i) == m(i, j).conj())) throw std::invalid_argument("matrix is not Hermitian");
      a.set(i, j, m(i, j));
    }
  }
  return a;
}

void HermitianForm::set(std::size_t i, std::size_t j, const QuadElement& x) {
  QuadElement v = x;
  if (v.disc() == 0) v = QuadElement(disc_, x.a(), 0);
  if (i == j) {
    if (!v.is_rational()) throw std::invalid_argument("diagonal entry must be rational");
    entries_[i * n_ + i] = v;
    return;
  }
  entries_[i * n_ + j] = v;
  entries_[j * n_ + i] = v.conj();
}

CoordVector HermitianForm::coords() const {
  CoordVector c(coord_dim(n_));
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, i).a();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const std::size_t k = n_ + 2 * pair_index(n_, i, j);
      c[k] = (*this)(i, j).a();
      c[k + 1] = (*this)(i, j).b();
    }
  }
  return c;
}

FieldMatrix HermitianForm::matrix() const {
  FieldMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

HermitianForm& HermitianForm::operator+=(const HermitianForm& o) {
  check_same(*this, o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

HermitianForm& HermitianForm::operator-=(const HermitianForm& o) {
  check_same(*this, o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

HermitianForm& HermitianForm::operator*=(const Rational& s) {
  const QuadElement f(disc_, s);
  for (auto& e : entries_) e *= f;
  return *this;
}

// ---------------------------------------------------------------------------

QuadElement sesquilinear(const HermitianForm& a, const OVector& v, const OVector& w) {
  check_dim(a, v);
  check_dim(a, w);
  const std::size_t n = a.rank();
  QuadElement s = zero_el(a.disc());
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j].is_zero()) continue;
    QuadElement row = zero_el(a.disc());
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      row += QuadElement(v[i].conj()) * a(i, j);
    }
    s += row * QuadElement(w[j]);
  }
  return s;
}

Rational evaluate(const HermitianForm& a, const OVector& v) {
  const QuadElement x = sesquilinear(a, v, v);
  if (!x.is_rational()) throw std::logic_error("A[v] is not rational");
  return x.a();
}

HermitianForm rank_one(long disc, const OVector& v) {
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || !x.is_zero();
  if (!nonzero) throw std::invalid_argument("q(0) is not defined");
  const std::size_t n = v.size();
  HermitianForm q(disc, n);
  for (std::size_t i = 0; i < n; ++i) {
    q.set(i, i, QuadElement(disc, v[i].norm()));
    for (std::size_t j = i + 1; j < n; ++j) q.set(i, j, QuadElement(v[i] * v[j].conj()));
  }
  return q;
}

IntVector q_coords(long disc, const OVector& v) {
  const std::size_t n = v.size();
  IntVector c(coord_dim(n));
  for (std::size_t i = 0; i < n; ++i) c[i] = v[i].norm();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const QuadInteger x = v[i] * v[j].conj();
      const std::size_t k = n + 2 * pair_index(n, i, j);
      c[k] = x.a();
      c[k + 1] = x.b();
    }
  }
  (void)disc;
  return c;
}

Rational trace_pair(const HermitianForm& a, const HermitianForm& b) {
  check_same(a, b);
  const std::size_t n = a.rank();
  QuadElement s = zero_el(a.disc());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * b(j, i);
  }
  if (!s.is_rational()) throw std::logic_error("trace of a product of Hermitian forms not real");
  return s.a();
}

RationalMatrix trace_pairing_gram(long disc, std::size_t n) {
  const OmegaData o = omega_data(disc);
  const std::size_t m = coord_dim(n);
  RationalMatrix g(m, m, Rational(0));
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 1;
  for (std::size_t k = n; k < m; k += 2) {
    // 2 Re(x conj(y)) for x = b + c w, y = b' + c' w
    g(k, k) = 2;
    g(k, k + 1) = o.trace;
    g(k + 1, k) = o.trace;
    g(k + 1, k + 1) = 2 * o.norm;
  }
  return g;
}

HermitianForm form_from_functional(long disc, std::size_t n, const RatVector& h) {
  const OmegaData o = omega_data(disc);
  const std::size_t m = coord_dim(n);
  if (h.size() != m) throw std::invalid_argument("functional of wrong length");
  CoordVector c(m);
  for (std::size_t i = 0; i < n; ++i) c[i] = h[i];
  const Rational det = 4 * o.norm - o.trace * o.trace;  // = -D
  for (std::size_t k = n; k < m; k += 2) {
    c[k] = (2 * o.norm * h[k] - o.trace * h[k + 1]) / det;
    c[k + 1] = (-o.trace * h[k] + 2 * h[k + 1]) / det;
  }
  return HermitianForm::from_coords(disc, n, c);
}

RationalMatrix realify(const HermitianForm& a) {
  const std::size_t n = a.rank();
  const long d = a.disc();
  const QuadElement basis[2] = {QuadElement(d, 1), QuadElement(d, 0, 1)};
  RationalMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < 2; ++t) {
          g(2 * i + s, 2 * j + t) = (basis[s].conj() * a(i, j) * basis[t]).real_part();
        }
      }
    }
  }
  return g;
}

IntVector realify(const OVector& v) {
  IntVector x(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    x[2 * i] = v[i].a();
    x[2 * i + 1] = v[i].b();
  }
  return x;
}

OVector from_real(long disc, const IntVector& x) {
  OVector v(x.size() / 2);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = QuadInteger(disc, x[2 * i], x[2 * i + 1]);
  return v;
}

bool is_positive_definite(const HermitianForm& a) {
  // Hermitian elimination; the pivots are ratios of consecutive leading minors.
  const std::size_t n = a.rank();
  FieldMatrix m = a.matrix();
  for (std::size_t k = 0; k < n; ++k) {
    if (!m(k, k).is_rational() || sgn(m(k, k).a()) <= 0) return false;
    const QuadElement inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const QuadElement f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

bool is_positive_semidefinite(const HermitianForm& a) {
  const std::size_t n = a.rank();
  const FieldMatrix full = a.matrix();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    FieldMatrix sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = full(idx[i], idx[j]);
    }
    const QuadElement d = determinant(sub);
    if (sgn(d.a()) < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

bool lex_less(const OVector& x, const OVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].a() != y[i].a()) return x[i].a() < y[i].a();
    if (x[i].b() != y[i].b()) return x[i].b() < y[i].b();
  }
  return false;
}

OVector canonical(const OVector& v) {
  if (v.empty()) return v;
  const long disc = v.front().disc();
  OVector best = v;
  for (const auto& u : units(disc)) {
    OVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = u * v[i];
    if (lex_less(best, w)) best = std::move(w);
  }
  return best;
}

namespace {

struct EnumResult {
  std::map<OVector, Rational, decltype(&lex_less)> classes{&lex_less};
  std::size_t raw_count = 0;
};

// Fincke-Pohst on a floating LDL^T of the realified Gram matrix. The float
// bound carries a small slack; every candidate is re-evaluated exactly.
void enumerate(const HermitianForm& a, const Rational& bound, EnumResult& out,
               const Rational* keep_below = nullptr) {
  const std::size_t m = 2 * a.rank();
  const long disc = a.disc();
  const RationalMatrix g = realify(a);
  std::vector<std::vector<double>> l(m, std::vector<double>(m, 0.0));
  std::vector<double> d(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double s = g(j, j).get_d();
    for (std::size_t k = 0; k < j; ++k) s -= l[j][k] * l[j][k] * d[k];
    if (!(s > 0)) throw std::domain_error("form is not positive definite");
    d[j] = s;
    l[j][j] = 1.0;
    for (std::size_t i = j + 1; i < m; ++i) {
      double t = g(i, j).get_d();
      for (std::size_t k = 0; k < j; ++k) t -= l[i][k] * l[j][k] * d[k];
      l[i][j] = t / s;
    }
  }
  // G[x] = sum_j d_j (x_j + sum_{i>j} l_ij x_i)^2
  const double c = bound.get_d();
  const double slack = c * 1e-9 + 1e-12;
  const double limit = c + slack;
  std::vector<long> x(m, 0);
  std::vector<double> partial(m + 1, 0.0);
  IntVector xi(m);

  // Depth-first from the last coordinate.
  std::vector<long> lo(m), hi(m);
  auto set_range = [&](std::size_t j) {
    double center = 0.0;
    for (std::size_t i = j + 1; i < m; ++i) center -= l[i][j] * x[i];
    const double rem = limit - partial[j + 1];
    const double r = rem > 0 ? std::sqrt(rem / d[j]) : 0.0;
    lo[j] = static_cast<long>(std::ceil(center - r - 1e-9));
    hi[j] = static_cast<long>(std::floor(center + r + 1e-9));
    x[j] = lo[j] - 1;
  };
  std::size_t j = m - 1;
  set_range(j);
  while (true) {
    ++x[j];
    if (x[j] > hi[j]) {
      if (j == m - 1) break;
      ++j;
      continue;
    }
    double center = 0.0;
    for (std::size_t i = j + 1; i < m; ++i) center -= l[i][j] * x[i];
    const double diff = x[j] - center;
    partial[j] = partial[j + 1] + d[j] * diff * diff;
    if (partial[j] > limit) continue;
    if (j > 0) {
      --j;
      set_range(j);
      continue;
    }
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) nonzero = nonzero || x[i] != 0;
    if (!nonzero) continue;
    for (std::size_t i = 0; i < m; ++i) xi[i] = x[i];
    const OVector v = from_real(disc, xi);
    const Rational val = evaluate(a, v);
    if (val > bound) continue;
    if (keep_below != nullptr && val > *keep_below) continue;
    ++out.raw_count;
    out.classes.emplace(canonical(v), val);
  }
}

}  // namespace

std::vector<std::pair<OVector, Rational>> shortest_vectors_upto(const HermitianForm& a,
                                                                const Rational& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("bound must be positive");
  if (!is_positive_definite(a)) throw std::domain_error("form is not positive definite");
  EnumResult r;
  enumerate(a, bound, r);
  std::vector<std::pair<OVector, Rational>> out(r.classes.begin(), r.classes.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

MinVectorSet minimal_vectors(const HermitianForm& a) {
  if (!is_positive_definite(a)) throw std::domain_error("form is not positive definite");
  // A[e_i] = a_ii is an exact upper bound for m(A).
  Rational bound = a(0, 0).a();
  for (std::size_t i = 1; i < a.rank(); ++i) bound = std::min(bound, a(i, i).a());
  EnumResult r;
  enumerate(a, bound, r);
  MinVectorSet out;
  out.minimum = bound;
  for (const auto& [v, val] : r.classes) out.minimum = std::min(out.minimum, val);
  for (const auto& [v, val] : r.classes) {
    if (val == out.minimum) out.vectors.push_back(v);
  }
  out.total_count = out.vectors.size() * units(a.disc()).size();
  return out;
}

}  // namespace hvor
