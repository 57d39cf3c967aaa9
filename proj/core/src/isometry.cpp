#include "hvor/isometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hvor {

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(long disc, std::size_t n, std::vector<QuadInteger> entries)
    : disc_(disc), n_(n), m_(std::move(entries)) {
  if (m_.size() != n * n) throw std::invalid_argument("group element of wrong size");
}

GroupElement GroupElement::identity(long disc, std::size_t n) {
  std::vector<QuadInteger> e(n * n, QuadInteger(disc, 0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = QuadInteger(disc, 1);
  return {disc, n, std::move(e)};
}

QuadInteger GroupElement::determinant() const {
  FieldMatrix f(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) f(i, j) = QuadElement((*this)(i, j));
  }
  return to_integer(hvor::determinant(f));
}

OVector GroupElement::apply(const OVector& v) const {
  OVector w(n_, QuadInteger(disc_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!v[j].is_zero()) w[i] += (*this)(i, j) * v[j];
    }
  }
  return w;
}

GroupElement GroupElement::adjoint() const {
  std::vector<QuadInteger> e(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = (*this)(j, i).conj();
  }
  return {disc_, n_, std::move(e)};
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  const std::size_t n = x.n_;
  std::vector<QuadInteger> e(n * n, QuadInteger(x.disc_, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += x(i, k) * y(k, j);
    }
  }
  return {x.disc_, n, std::move(e)};
}

namespace {

FieldMatrix to_field(const GroupElement& g) {
  FieldMatrix f(g.rank(), g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (std::size_t j = 0; j < g.rank(); ++j) f(i, j) = QuadElement(g(i, j));
  }
  return f;
}

FieldMatrix mul(const FieldMatrix& x, const FieldMatrix& y) {
  FieldMatrix z(x.rows(), y.cols(), QuadElement::rational(0));
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) z(i, j) += x(i, k) * y(k, j);
    }
  }
  return z;
}

}  // namespace

HermitianForm GroupElement::act(const HermitianForm& a) const {
  return HermitianForm::from_matrix(disc_, mul(mul(to_field(*this), a.matrix()), to_field(adjoint())));
}

HermitianForm GroupElement::pullback(const HermitianForm& a) const {
  return HermitianForm::from_matrix(disc_, mul(mul(to_field(adjoint()), a.matrix()), to_field(*this)));
}

// ---------------------------------------------------------------------------

PrimePowers factorize(const Integer& x) {
  PrimePowers out;
  Integer r = abs(x);
  for (long p = 2; r > 1; ++p) {
    if (Integer(p) * p > r) {
      out.emplace_back(r.get_si(), 1);
      break;
    }
    int e = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      r /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  return out;
}

std::set<long> torsion_prime_bound(std::size_t n, long disc) {
  std::set<long> primes{2};
  const long top = 2 * static_cast<long>(n) + 1;
  for (long p = 3; p <= top; p += 2) {
    bool prime = true;
    for (long d = 3; d * d <= p; d += 2) prime = prime && p % d != 0;
    if (!prime) continue;
    const bool generic = p - 1 <= static_cast<long>(n);
    const bool cm = p % 4 == 3 && disc == -p && (p - 1) / 2 <= static_cast<long>(n);
    if (generic || cm) primes.insert(p);
  }
  return primes;
}

HermitianForm configuration_form(long disc, const std::vector<OVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("empty vector set");
  HermitianForm s(disc, vectors.front().size());
  for (const auto& v : vectors) s += rank_one(disc, v);
  return s;
}

namespace {

// ---------------------------------------------------------------------------
// Overflow-checked arithmetic in O on 64-bit coordinates for the searches.

struct Q {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const Q& x, const Q& y) { return x.a == y.a && x.b == y.b; }
};

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("64-bit overflow in isometry search");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("64-bit overflow in isometry search");
  return r;
}

std::int64_t narrow(const Integer& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) throw std::overflow_error("coordinate exceeds 64 bits");
  return x.get_si();
}

class Ring {
 public:
  explicit Ring(long disc) {
    const OmegaData o = omega_data(disc);
    t_ = o.trace;
    n_ = o.norm;
  }

  Q add(Q x, Q y) const { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
  Q mul(Q x, Q y) const {
    const std::int64_t bd = checked_mul(x.b, y.b);
    return {checked_add(checked_mul(x.a, y.a), -checked_mul(n_, bd)),
            checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)),
                        checked_mul(t_, bd))};
  }
  Q conj(Q x) const { return {checked_add(x.a, checked_mul(t_, x.b)), -x.b}; }
  std::int64_t norm(Q x) const {
    return checked_add(checked_add(checked_mul(x.a, x.a), checked_mul(t_, checked_mul(x.a, x.b))),
                       checked_mul(n_, checked_mul(x.b, x.b)));
  }

 private:
  std::int64_t t_ = 0;
  std::int64_t n_ = 0;
};

using Flat = std::vector<Q>;

struct FlatHash {
  std::size_t operator()(const Flat& v) const {
    std::size_t h = 1469598103934665603ull;
    for (const Q& q : v) {
      h = (h ^ static_cast<std::size_t>(q.a)) * 1099511628211ull;
      h = (h ^ static_cast<std::size_t>(q.b)) * 1099511628211ull;
    }
    return h;
  }
};

Q to_q(const QuadInteger& x) { return {narrow(x.a()), narrow(x.b())}; }

Flat to_flat(const OVector& v) {
  Flat f(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) f[i] = to_q(v[i]);
  return f;
}

// Determinant by cofactor expansion; the matrices here have n <= 6.
Q det_flat(const Ring& r, const Flat& m, std::size_t n) {
  if (n == 1) return m[0];
  Q total{0, 0};
  Flat minor((n - 1) * (n - 1));
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].a == 0 && m[c].b == 0) continue;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) minor[(i - 1) * (n - 1) + k++] = m[i * n + j];
      }
    }
    Q term = r.mul(m[c], det_flat(r, minor, n - 1));
    if (c % 2 == 1) term = {-term.a, -term.b};
    total = r.add(total, term);
  }
  return total;
}

Flat adjugate(const Ring& r, const Flat& m, std::size_t n) {
  Flat adj(n * n);
  if (n == 1) {
    adj[0] = {1, 0};
    return adj;
  }
  Flat minor((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_ij; adj_ji = C_ij
      std::size_t k = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (b != j) minor[k++] = m[a * n + b];
        }
      }
      Q c = det_flat(r, minor, n - 1);
      if ((i + j) % 2 == 1) c = {-c.a, -c.b};
      adj[j * n + i] = c;
    }
  }
  return adj;
}

Flat mat_mul(const Ring& r, const Flat& x, const Flat& y, std::size_t n) {
  Flat z(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Q xik = x[i * n + k];
      if (xik.a == 0 && xik.b == 0) continue;
      for (std::size_t j = 0; j < n; ++j) z[i * n + j] = r.add(z[i * n + j], r.mul(xik, y[k * n + j]));
    }
  }
  return z;
}

// Gram matrix scaled to integral coefficients by a common factor.
struct ScaledGram {
  Flat g;  // n x n, entries in Z[w]
};

Integer denominator_lcm(const HermitianForm& f) {
  Integer l = 1;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    for (std::size_t j = 0; j < f.rank(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f(i, j).a().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f(i, j).b().get_den_mpz_t());
    }
  }
  return l;
}

Flat scale(const HermitianForm& f, const Integer& l) {
  const std::size_t n = f.rank();
  Flat out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational a = f(i, j).a() * l;
      const Rational b = f(i, j).b() * l;
      out[i * n + j] = {narrow(a.get_num()), narrow(b.get_num())};
    }
  }
  return out;
}

// v^* G w
Q pair(const Ring& r, const Flat& g, const Q* v, const Q* w, std::size_t n) {
  Q s{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].a == 0 && v[i].b == 0) continue;
    const Q cv = r.conj(v[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j].a == 0 && w[j].b == 0) continue;
      s = r.add(s, r.mul(cv, r.mul(g[i * n + j], w[j])));
    }
  }
  return s;
}

// Backtrack search for gamma in GL_N(O) with gamma(src) = dst up to units and
// (gamma v)^* Gd (gamma w) = v^* Gs w.
class Search {
 public:
  Search(long disc, const std::vector<OVector>& src, const HermitianForm& gram_src,
         const std::vector<OVector>& dst, const HermitianForm& gram_dst)
      : ring_(disc), n_(src.front().size()), m_(src.size()) {
    Integer l = denominator_lcm(gram_src);
    const Integer l2 = denominator_lcm(gram_dst);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), l2.get_mpz_t());
    gs_ = scale(gram_src, l);
    gd_ = scale(gram_dst, l);

    for (const auto& v : src) {
      Flat f = to_flat(v);
      src_.insert(src_.end(), f.begin(), f.end());
    }
    std::vector<Q> us;
    for (const auto& u : units(disc)) us.push_back(to_q(u));
    for (std::size_t c = 0; c < dst.size(); ++c) {
      const Flat base = to_flat(dst[c]);
      for (const Q& u : us) {
        Flat img(n_);
        for (std::size_t i = 0; i < n_; ++i) img[i] = ring_.mul(u, base[i]);
        dst_index_.emplace(img, static_cast<std::uint32_t>(dst_all_.size() / n_));
        dst_all_.insert(dst_all_.end(), img.begin(), img.end());
      }
    }
    const std::size_t total = dst_all_.size() / n_;
    for (std::size_t t = 0; t < total; ++t) {
      const Q s = pair(ring_, gd_, &dst_all_[t * n_], &dst_all_[t * n_], n_);
      by_self_[s.a].push_back(static_cast<std::uint32_t>(t));
    }

    // greedy F-basis of the source
    std::vector<std::vector<QuadElement>> chosen;
    for (std::size_t i = 0; i < m_ && basis_.size() < n_; ++i) {
      std::vector<QuadElement> cand(src[i].begin(), src[i].end());
      chosen.push_back(cand);
      if (field_rank(chosen) == chosen.size()) {
        basis_.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
    if (basis_.size() != n_) throw std::invalid_argument("vector set is not well-rounded");

    Flat bmat(n_ * n_);
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) bmat[i * n_ + k] = src_[basis_[k] * n_ + i];
    }
    adj_ = adjugate(ring_, bmat, n_);
    delta_ = det_flat(ring_, bmat, n_);
    delta_conj_ = ring_.conj(delta_);
    delta_norm_ = ring_.norm(delta_);

    target_.assign(n_ * n_, Q{});
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        target_[j * n_ + k] = pair(ring_, gs_, &src_[basis_[j] * n_], &src_[basis_[k] * n_], n_);
      }
    }
    images_.assign(n_, 0);
    rows_.assign(n_ * n_, Q{});
  }

  // Calls visit(gamma) for every solution; stops when visit returns false.
  void run(const std::function<bool(const Flat&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    descend(0);
  }

  std::size_t rank() const { return n_; }
  const Ring& ring() const { return ring_; }

 private:
  void descend(std::size_t k) {
    if (stop_) return;
    if (k == n_) {
      leaf();
      return;
    }
    const Q self = target_[k * n_ + k];
    if (self.b != 0) return;
    auto it = by_self_.find(self.a);
    if (it == by_self_.end()) return;
    for (std::uint32_t t : it->second) {
      const Q* tv = &dst_all_[t * n_];
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        Q s{0, 0};
        for (std::size_t i = 0; i < n_; ++i) s = ring_.add(s, ring_.mul(rows_[j * n_ + i], tv[i]));
        ok = s == target_[j * n_ + k];
      }
      if (!ok) continue;
      images_[k] = t;
      // row_k = img_k^* Gd
      for (std::size_t i = 0; i < n_; ++i) {
        Q s{0, 0};
        for (std::size_t l = 0; l < n_; ++l) {
          s = ring_.add(s, ring_.mul(ring_.conj(tv[l]), gd_[l * n_ + i]));
        }
        rows_[k * n_ + i] = s;
      }
      descend(k + 1);
      if (stop_) return;
    }
  }

  void leaf() {
    // gamma = Img adj(B) / det(B)
    Flat gamma(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Q s{0, 0};
        for (std::size_t k = 0; k < n_; ++k) {
          s = ring_.add(s, ring_.mul(dst_all_[images_[k] * n_ + i], adj_[k * n_ + j]));
        }
        const Q num = ring_.mul(s, delta_conj_);
        if (num.a % delta_norm_ != 0 || num.b % delta_norm_ != 0) return;
        gamma[i * n_ + j] = {num.a / delta_norm_, num.b / delta_norm_};
      }
    }
    if (ring_.norm(det_flat(ring_, gamma, n_)) != 1) return;
    Flat img(n_);
    for (std::size_t s = 0; s < m_; ++s) {
      const Q* v = &src_[s * n_];
      for (std::size_t i = 0; i < n_; ++i) {
        Q acc{0, 0};
        for (std::size_t j = 0; j < n_; ++j) acc = ring_.add(acc, ring_.mul(gamma[i * n_ + j], v[j]));
        img[i] = acc;
      }
      if (dst_index_.find(img) == dst_index_.end()) return;
    }
    if (!(*visit_)(gamma)) stop_ = true;
  }

  Ring ring_;
  std::size_t n_;
  std::size_t m_;
  Flat gs_, gd_;
  Flat src_;
  Flat dst_all_;
  std::unordered_map<Flat, std::uint32_t, FlatHash> dst_index_;
  std::unordered_map<std::int64_t, std::vector<std::uint32_t>> by_self_;
  std::vector<std::size_t> basis_;
  Flat adj_;
  Q delta_, delta_conj_;
  std::int64_t delta_norm_ = 1;
  Flat target_;
  std::vector<std::uint32_t> images_;
  Flat rows_;
  const std::function<bool(const Flat&)>* visit_ = nullptr;
  bool stop_ = false;
};

GroupElement from_flat(long disc, const Flat& f, std::size_t n) {
  std::vector<QuadInteger> e(n * n);
  for (std::size_t k = 0; k < n * n; ++k) e[k] = QuadInteger(disc, f[k].a, f[k].b);
  return {disc, n, std::move(e)};
}

HermitianForm inverse_form(long disc, const HermitianForm& a) {
  return HermitianForm::from_matrix(disc, inverse(a.matrix()));
}

std::vector<Rational> invariant_with(long disc, const HermitianForm& gram,
                                     const std::vector<OVector>& vectors) {
  const Ring ring(disc);
  const std::size_t n = gram.rank();
  const Integer l = denominator_lcm(gram);
  const Flat g = scale(gram, l);
  Flat flat;
  for (const auto& v : vectors) {
    Flat f = to_flat(v);
    flat.insert(flat.end(), f.begin(), f.end());
  }
  const std::size_t m = vectors.size();
  std::vector<std::int64_t> norms;
  norms.reserve(m * (m + 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      norms.push_back(ring.norm(pair(ring, g, &flat[i * n], &flat[j * n], n)));
    }
  }
  std::sort(norms.begin(), norms.end());
  const Integer l2 = l * l;
  std::vector<Rational> out;
  out.reserve(norms.size() + 1);
  out.emplace_back(static_cast<long>(m));
  for (std::int64_t x : norms) {
    Rational r(Integer(static_cast<long>(x)), l2);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<Rational> configuration_invariant(long disc, const std::vector<OVector>& vectors) {
  return invariant_with(disc, inverse_form(disc, configuration_form(disc, vectors)), vectors);
}

std::vector<Rational> gram_invariant(const HermitianForm& gram, const std::vector<OVector>& vectors) {
  return invariant_with(gram.disc(), gram, vectors);
}

std::optional<GroupElement> form_equivalent(const HermitianForm& a,
                                            const std::vector<OVector>& ma,
                                            const HermitianForm& b,
                                            const std::vector<OVector>& mb) {
  if (ma.size() != mb.size() || a.rank() != b.rank() || a.disc() != b.disc()) return std::nullopt;
  if (ma.empty()) return std::nullopt;
  Search search(a.disc(), mb, b, ma, a);
  std::optional<GroupElement> found;
  search.run([&](const Flat& g) {
    found = from_flat(a.disc(), g, a.rank());
    return false;
  });
  if (found && !(found->pullback(a) == b)) {
    throw std::logic_error("isometry witness fails gamma^* A gamma = B");
  }
  return found;
}

std::optional<GroupElement> cell_equivalent(long disc, const std::vector<OVector>& from,
                                            const std::vector<OVector>& to) {
  if (from.size() != to.size() || from.empty()) return std::nullopt;
  if (from.front().size() != to.front().size()) return std::nullopt;
  const HermitianForm ps = inverse_form(disc, configuration_form(disc, from));
  const HermitianForm pd = inverse_form(disc, configuration_form(disc, to));
  Search search(disc, from, ps, to, pd);
  std::optional<GroupElement> found;
  search.run([&](const Flat& g) {
    found = from_flat(disc, g, from.front().size());
    return false;
  });
  if (found) {
    // every image must be a unit multiple of a target vector
    std::set<OVector, decltype(&lex_less)> targets(&lex_less);
    for (const auto& v : to) targets.insert(canonical(v));
    for (const auto& v : from) {
      if (targets.count(canonical(found->apply(v))) == 0) {
        throw std::logic_error("cell equivalence witness does not map the vector set");
      }
    }
  }
  return found;
}

StabilizerGroup stabilizer(long disc, const std::vector<OVector>& vectors) {
  const std::size_t n = vectors.front().size();
  const HermitianForm p = inverse_form(disc, configuration_form(disc, vectors));
  Search search(disc, vectors, p, vectors, p);
  const Ring& ring = search.ring();

  constexpr std::size_t kClosureLimit = 1000000;
  std::unordered_set<Flat, FlatHash> closure;
  std::vector<Flat> gens;
  bool closure_valid = true;
  Flat id(n * n);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = {1, 0};

  auto recompute = [&]() {
    closure.clear();
    std::vector<Flat> frontier{id};
    closure.insert(id);
    while (!frontier.empty()) {
      Flat x = std::move(frontier.back());
      frontier.pop_back();
      for (const Flat& g : gens) {
        Flat y = mat_mul(ring, x, g, n);
        if (closure.insert(y).second) {
          if (closure.size() > kClosureLimit) {
            closure_valid = false;
            return;
          }
          frontier.push_back(std::move(y));
        }
      }
    }
  };

  Integer count = 0;
  search.run([&](const Flat& g) {
    ++count;
    if (closure_valid && closure.count(g) == 0) {
      gens.push_back(g);
      recompute();
    }
    return true;
  });

  if (closure_valid && Integer(static_cast<unsigned long>(closure.size())) != count) {
    throw std::logic_error("stabilizer closure disagrees with enumeration");
  }
  StabilizerGroup out;
  for (const Flat& g : gens) out.generators.push_back(from_flat(disc, g, n));
  out.order = count;
  out.order_factorization = factorize(count);
  return out;
}

std::vector<std::size_t> vector_permutation(const GroupElement& g,
                                            const std::vector<OVector>& vectors) {
  std::map<OVector, std::size_t, decltype(&lex_less)> index(&lex_less);
  for (std::size_t i = 0; i < vectors.size(); ++i) index.emplace(canonical(vectors[i]), i);
  std::vector<std::size_t> perm(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto it = index.find(canonical(g.apply(vectors[i])));
    if (it == index.end()) throw std::invalid_argument("element does not permute the vector set");
    perm[i] = it->second;
  }
  return perm;
}

std::vector<std::vector<std::size_t>> subset_orbits(const StabilizerGroup& group,
                                                    const std::vector<OVector>& vectors,
                                                    const std::vector<std::vector<std::size_t>>& subsets) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subsets[i], i);
  std::vector<std::size_t> parent(subsets.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : group.generators) {
    const auto perm = vector_permutation(g, vectors);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<std::size_t> img;
      img.reserve(subsets[i].size());
      for (std::size_t k : subsets[i]) img.push_back(perm[k]);
      std::sort(img.begin(), img.end());
      auto it = index.find(img);
      if (it == index.end()) throw std::logic_error("subset family is not closed under the group");
      const std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < subsets.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace hvor
