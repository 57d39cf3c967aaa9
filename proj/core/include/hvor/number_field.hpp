#pragma once

// Exact arithmetic in Q, in an imaginary quadratic field F = Q(w) and in its
// ring of integers O = Z[w].
//
// w is sqrt(D/4) when D = 0 mod 4 and (1 + sqrt(D))/2 when D = 1 mod 4, so in
// both cases w^2 = t*w - n with t = tr(w) in {0, 1} and n = norm(w) > 0.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hvor {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parameters of w for a discriminant; cheap to copy.
struct OmegaData {
  long disc = 0;
  int trace = 0;   // tr(w)
  long norm = 0;   // N(w)
};

bool is_fundamental(long disc);

/// Throws std::invalid_argument unless disc is a negative fundamental discriminant.
OmegaData omega_data(long disc);

/// Matrix of multiplication by w on O = Z + Zw in the basis {1, w}.
std::array<std::array<long, 2>, 2> omega_companion(long disc);

class QuadInteger;

/// a + b*w with rational a, b. A zero discriminant marks a plain rational that
/// adopts the field of whatever it is combined with.
class QuadElement {
 public:
  QuadElement() = default;
  QuadElement(long disc, Rational a, Rational b = 0);
  QuadElement(const QuadInteger& x);  // NOLINT(google-explicit-constructor)

  static QuadElement rational(Rational a) { return QuadElement(0, std::move(a), 0); }

  long disc() const { return disc_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadElement conj() const;
  Rational norm() const;
  /// Real part under the fixed complex embedding.
  Rational real_part() const;
  QuadElement inverse() const;

  QuadElement operator-() const { return {disc_, -a_, -b_}; }
  QuadElement& operator+=(const QuadElement& o);
  QuadElement& operator-=(const QuadElement& o);
  QuadElement& operator*=(const QuadElement& o);
  QuadElement& operator/=(const QuadElement& o);

  friend QuadElement operator+(QuadElement x, const QuadElement& y) { return x += y; }
  friend QuadElement operator-(QuadElement x, const QuadElement& y) { return x -= y; }
  friend QuadElement operator*(QuadElement x, const QuadElement& y) { return x *= y; }
  friend QuadElement operator/(QuadElement x, const QuadElement& y) { return x /= y; }

  friend bool operator==(const QuadElement& x, const QuadElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Lexicographic on (a, b); a total order for containers, not a field order.
  friend bool operator<(const QuadElement& x, const QuadElement& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

  double real_approx() const;
  double imag_approx() const;

  std::string str() const;

 private:
  long disc_ = 0;
  Rational a_;
  Rational b_;
};

/// a + b*w in O.
class QuadInteger {
 public:
  QuadInteger() = default;
  QuadInteger(long disc, Integer a, Integer b = 0)
      : disc_(disc), a_(std::move(a)), b_(std::move(b)) {}

  long disc() const { return disc_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  QuadInteger conj() const;
  Integer norm() const;
  bool is_unit() const { return norm() == 1; }

  QuadInteger operator-() const { return {disc_, -a_, -b_}; }
  QuadInteger& operator+=(const QuadInteger& o);
  QuadInteger& operator-=(const QuadInteger& o);
  QuadInteger& operator*=(const QuadInteger& o);

  friend QuadInteger operator+(QuadInteger x, const QuadInteger& y) { return x += y; }
  friend QuadInteger operator-(QuadInteger x, const QuadInteger& y) { return x -= y; }
  friend QuadInteger operator*(QuadInteger x, const QuadInteger& y) { return x *= y; }

  friend bool operator==(const QuadInteger& x, const QuadInteger& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadInteger& x, const QuadInteger& y) { return !(x == y); }
  friend bool operator<(const QuadInteger& x, const QuadInteger& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

  std::string str() const;

 private:
  long disc_ = 0;
  Integer a_;
  Integer b_;
};

/// The full unit group of O_D: order 4 for D = -4, 6 for D = -3, 2 otherwise.
/// The first entry is always 1.
std::vector<QuadInteger> units(long disc);

/// If x lies in O return it as a QuadInteger; throws std::domain_error otherwise.
QuadInteger to_integer(const QuadElement& x);
bool is_integral(const QuadElement& x);

std::ostream& operator<<(std::ostream& os, const QuadElement& x);
std::ostream& operator<<(std::ostream& os, const QuadInteger& x);

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

}  // namespace hvor
