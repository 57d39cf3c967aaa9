#include "hvor/number_field.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hvor {

namespace {

long mod4(long d) { return ((d % 4) + 4) % 4; }

bool squarefree(long m) {
  m = std::labs(m);
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

long join_disc(long x, long y) {
  if (x == 0) return y;
  if (y == 0 || x == y) return x;
  throw std::invalid_argument("arithmetic between different quadratic fields");
}

// w^2 = t*w - n
OmegaData params(long disc) {
  if (disc == 0) return {};
  OmegaData o;
  o.disc = disc;
  if (mod4(disc) == 1) {
    o.trace = 1;
    o.norm = (1 - disc) / 4;
  } else {
    o.trace = 0;
    o.norm = -disc / 4;
  }
  return o;
}

}  // namespace

bool is_fundamental(long disc) {
  if (disc >= 0) return false;
  if (mod4(disc) == 1) return squarefree(disc);
  if (mod4(disc) != 0) return false;
  const long m = disc / 4;
  const long r = mod4(m);
  return (r == 2 || r == 3) && squarefree(m);
}

OmegaData omega_data(long disc) {
  if (!is_fundamental(disc)) {
    throw std::invalid_argument("not a negative fundamental discriminant: " +
                                std::to_string(disc));
  }
  return params(disc);
}

std::array<std::array<long, 2>, 2> omega_companion(long disc) {
  const OmegaData o = omega_data(disc);
  // w*1 = w, w*w = -n + t*w
  return {{{0, -o.norm}, {1, o.trace}}};
}

// ---------------------------------------------------------------------------

QuadElement::QuadElement(long disc, Rational a, Rational b)
    : disc_(disc), a_(std::move(a)), b_(std::move(b)) {
  if (disc_ == 0 && sgn(b_) != 0) {
    throw std::invalid_argument("irrational element without a field");
  }
}

QuadElement::QuadElement(const QuadInteger& x)
    : disc_(x.disc()), a_(x.a()), b_(x.b()) {}

QuadElement QuadElement::conj() const {
  const OmegaData o = params(disc_);
  return {disc_, a_ + o.trace * b_, -b_};
}

Rational QuadElement::norm() const {
  const OmegaData o = params(disc_);
  return a_ * a_ + o.trace * a_ * b_ + o.norm * b_ * b_;
}

Rational QuadElement::real_part() const {
  const OmegaData o = params(disc_);
  return a_ + Rational(o.trace) / 2 * b_;
}

QuadElement QuadElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in F");
  const Rational nrm = norm();
  QuadElement c = conj();
  return {disc_, c.a_ / nrm, c.b_ / nrm};
}

QuadElement& QuadElement::operator+=(const QuadElement& o) {
  disc_ = join_disc(disc_, o.disc_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElement& QuadElement::operator-=(const QuadElement& o) {
  disc_ = join_disc(disc_, o.disc_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElement& QuadElement::operator*=(const QuadElement& o) {
  disc_ = join_disc(disc_, o.disc_);
  const OmegaData p = params(disc_);
  const Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ - p.norm * bd;
  Rational b = a_ * o.b_ + b_ * o.a_ + p.trace * bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElement& QuadElement::operator/=(const QuadElement& o) {
  QuadElement inv = o.inverse();
  return *this *= inv;
}

double QuadElement::real_approx() const {
  return real_part().get_d();
}

double QuadElement::imag_approx() const {
  const OmegaData o = params(disc_);
  if (o.disc == 0) return 0.0;
  // Im(w) = sqrt(4n - t^2)/2 = sqrt(|D|)/2
  return b_.get_d() * std::sqrt(static_cast<double>(-o.disc)) / 2.0;
}

std::string QuadElement::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

// ---------------------------------------------------------------------------

QuadInteger QuadInteger::conj() const {
  const OmegaData o = params(disc_);
  return {disc_, a_ + o.trace * b_, -b_};
}

Integer QuadInteger::norm() const {
  const OmegaData o = params(disc_);
  return a_ * a_ + o.trace * a_ * b_ + o.norm * b_ * b_;
}

QuadInteger& QuadInteger::operator+=(const QuadInteger& o) {
  disc_ = join_disc(disc_, o.disc_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadInteger& QuadInteger::operator-=(const QuadInteger& o) {
  disc_ = join_disc(disc_, o.disc_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadInteger& QuadInteger::operator*=(const QuadInteger& o) {
  disc_ = join_disc(disc_, o.disc_);
  const OmegaData p = params(disc_);
  const Integer bd = b_ * o.b_;
  Integer a = a_ * o.a_ - p.norm * bd;
  Integer b = a_ * o.b_ + b_ * o.a_ + p.trace * bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string QuadInteger::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<QuadInteger> units(long disc) {
  omega_data(disc);
  std::vector<QuadInteger> u{{disc, 1, 0}, {disc, -1, 0}};
  if (disc == -4) {
    u.emplace_back(disc, 0, 1);
    u.emplace_back(disc, 0, -1);
  } else if (disc == -3) {
    // w is a primitive sixth root of unity; w^2 = w - 1
    u.emplace_back(disc, 0, 1);
    u.emplace_back(disc, 0, -1);
    u.emplace_back(disc, -1, 1);
    u.emplace_back(disc, 1, -1);
  }
  return u;
}

bool is_integral(const QuadElement& x) {
  return x.a().get_den() == 1 && x.b().get_den() == 1;
}

QuadInteger to_integer(const QuadElement& x) {
  if (!is_integral(x)) throw std::domain_error("element not in O: " + x.str());
  return {x.disc(), x.a().get_num(), x.b().get_num()};
}

namespace {

template <typename T>
void print_ab(std::ostream& os, const T& a, const T& b) {
  if (sgn(b) == 0) {
    os << a;
    return;
  }
  if (sgn(a) != 0) os << a << (sgn(b) > 0 ? "+" : "");
  os << b << "*w";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const QuadElement& x) {
  print_ab(os, x.a(), x.b());
  return os;
}

std::ostream& operator<<(std::ostream& os, const QuadInteger& x) {
  print_ab(os, x.a(), x.b());
  return os;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hvor
