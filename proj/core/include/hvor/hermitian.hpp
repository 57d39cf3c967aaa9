#pragma once

// Hermitian forms over F, the rank-one map q(v) = v v^*, the trace pairing and
// minimal vectors.

#include <cstddef>
#include <utility>
#include <vector>

#include "hvor/linalg.hpp"
#include "hvor/number_field.hpp"

namespace hvor {

/// Column vector in O^N.
using OVector = std::vector<QuadInteger>;

/// Coordinates of a Hermitian matrix in Q^{N^2}: the diagonal a_ii first, then
/// (b_ij, c_ij) for i < j in row-major order, where a_ij = b_ij + c_ij w.
using CoordVector = std::vector<Rational>;

std::size_t coord_dim(std::size_t n);

class HermitianForm {
 public:
  HermitianForm() = default;
  HermitianForm(long disc, std::size_t n);  // zero form

  static HermitianForm identity(long disc, std::size_t n);
  static HermitianForm from_coords(long disc, std::size_t n, const CoordVector& c);
  /// Throws std::invalid_argument if m is not exactly Hermitian.
  static HermitianForm from_matrix(long disc, const FieldMatrix& m);

  long disc() const { return disc_; }
  std::size_t rank() const { return n_; }

  const QuadElement& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  /// Sets a_ij and a_ji = conj(a_ij). Diagonal entries must be rational.
  void set(std::size_t i, std::size_t j, const QuadElement& x);

  CoordVector coords() const;
  FieldMatrix matrix() const;

  HermitianForm& operator+=(const HermitianForm& o);
  HermitianForm& operator-=(const HermitianForm& o);
  HermitianForm& operator*=(const Rational& s);
  friend HermitianForm operator+(HermitianForm x, const HermitianForm& y) { return x += y; }
  friend HermitianForm operator-(HermitianForm x, const HermitianForm& y) { return x -= y; }
  friend HermitianForm operator*(const Rational& s, HermitianForm x) { return x *= s; }

  friend bool operator==(const HermitianForm& x, const HermitianForm& y) {
    return x.disc_ == y.disc_ && x.n_ == y.n_ && x.entries_ == y.entries_;
  }

 private:
  long disc_ = 0;
  std::size_t n_ = 0;
  std::vector<QuadElement> entries_;
};

/// A[v] = v^* A v.
Rational evaluate(const HermitianForm& a, const OVector& v);
/// v^* A w, the sesquilinear form attached to A.
QuadElement sesquilinear(const HermitianForm& a, const OVector& v, const OVector& w);

/// q(v) = v v^*.
HermitianForm rank_one(long disc, const OVector& v);
/// Integral coordinates of q(v).
IntVector q_coords(long disc, const OVector& v);

/// <A, B> = Tr(AB).
Rational trace_pair(const HermitianForm& a, const HermitianForm& b);

/// Gram matrix of the trace pairing on the coordinate basis: <A, B> = c(A)^T P c(B).
RationalMatrix trace_pairing_gram(long disc, std::size_t n);

/// The Hermitian H with <H, X> = h . c(X) for every X (dot product on coordinates).
HermitianForm form_from_functional(long disc, std::size_t n, const RatVector& h);

/// Gram matrix G of x -> A[x] on O^N = Z^{2N}, basis e_1, w e_1, e_2, w e_2, ...
RationalMatrix realify(const HermitianForm& a);
IntVector realify(const OVector& v);
OVector from_real(long disc, const IntVector& x);

/// Exact leading-principal-minor test.
bool is_positive_definite(const HermitianForm& a);
/// Exact test via all principal minors.
bool is_positive_semidefinite(const HermitianForm& a);

/// Among the unit multiples u v, the lexicographically largest tuple
/// (a_1, b_1, a_2, b_2, ...).
OVector canonical(const OVector& v);
bool lex_less(const OVector& x, const OVector& y);

struct MinVectorSet {
  std::vector<OVector> vectors;  // canonical, sorted by lex_less
  Rational minimum;
  std::size_t total_count = 0;   // including unit multiples
};

/// Exact m(A) and M(A) up to units. Throws std::domain_error unless A > 0.
MinVectorSet minimal_vectors(const HermitianForm& a);

/// All v != 0 with A[v] <= bound, canonical up to units, sorted by value then lex.
std::vector<std::pair<OVector, Rational>> shortest_vectors_upto(const HermitianForm& a,
                                                                const Rational& bound);

}  // namespace hvor
