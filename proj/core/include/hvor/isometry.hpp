#pragma once

// GL_N(O)-equivalence and stabilizers of forms and of vector configurations.
//
// Conventions: gamma acts on forms by A -> gamma A gamma^* and on vectors by
// v -> gamma v, so q(gamma v) = gamma q(v) gamma^*. Two perfect forms A, B are
// equivalent when gamma^* A gamma = B, i.e. A[gamma x] = B[x].

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hvor/hermitian.hpp"

namespace hvor {

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(long disc, std::size_t n, std::vector<QuadInteger> entries);
  static GroupElement identity(long disc, std::size_t n);

  long disc() const { return disc_; }
  std::size_t rank() const { return n_; }
  const QuadInteger& operator()(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  const std::vector<QuadInteger>& entries() const { return m_; }

  QuadInteger determinant() const;
  bool in_gl() const { return determinant().is_unit(); }

  OVector apply(const OVector& v) const;
  GroupElement adjoint() const;  // conjugate transpose
  /// gamma A gamma^*
  HermitianForm act(const HermitianForm& a) const;
  /// gamma^* A gamma
  HermitianForm pullback(const HermitianForm& a) const;

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.n_ == y.n_ && x.m_ == y.m_;
  }

 private:
  long disc_ = 0;
  std::size_t n_ = 0;
  std::vector<QuadInteger> m_;
};

using PrimePowers = std::vector<std::pair<long, int>>;

PrimePowers factorize(const Integer& x);

struct StabilizerGroup {
  std::vector<GroupElement> generators;
  Integer order;
  PrimePowers order_factorization;
};

/// gamma with gamma^* A gamma = B, searched through M(B) -> M(A). Both forms
/// must be perfect with minimum 1 and ma, mb their minimal vectors.
std::optional<GroupElement> form_equivalent(const HermitianForm& a,
                                            const std::vector<OVector>& ma,
                                            const HermitianForm& b,
                                            const std::vector<OVector>& mb);

/// gamma with {gamma v} = to (up to units) for well-rounded vector sets.
std::optional<GroupElement> cell_equivalent(long disc, const std::vector<OVector>& from,
                                            const std::vector<OVector>& to);

/// All gamma in GL_N(O) permuting the vector set up to units. The group is
/// enumerated; generators are extracted by incremental closure.
StabilizerGroup stabilizer(long disc, const std::vector<OVector>& vectors);

/// A_sigma = sum of q(v); positive definite exactly when the set is well-rounded.
HermitianForm configuration_form(long disc, const std::vector<OVector>& vectors);

/// Gamma-invariant fingerprint of a well-rounded set: its size followed by the
/// sorted norms of v^* A_sigma^{-1} w over pairs i <= j.
std::vector<Rational> configuration_invariant(long disc, const std::vector<OVector>& vectors);
/// Same with an explicit Gram form (used for perfect forms, Gram = A).
std::vector<Rational> gram_invariant(const HermitianForm& gram, const std::vector<OVector>& vectors);

/// pi with gamma v_i = u v_{pi(i)}; throws std::invalid_argument if gamma does
/// not permute the set.
std::vector<std::size_t> vector_permutation(const GroupElement& g,
                                            const std::vector<OVector>& vectors);

/// Orbits of Stab on a family of index subsets of `vectors` (each sorted);
/// the family must be closed under the action. Orbits are sorted and ordered
/// by their first member.
std::vector<std::vector<std::size_t>> subset_orbits(const StabilizerGroup& group,
                                                    const std::vector<OVector>& vectors,
                                                    const std::vector<std::vector<std::size_t>>& subsets);

/// Primes that can divide the order of a finite subgroup of GL_N(O_D).
std::set<long> torsion_prime_bound(std::size_t n, long disc);

}  // namespace hvor
