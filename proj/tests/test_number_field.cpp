#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hvor/number_field.hpp"
#include "oracles.hpp"

using namespace hvor;

TEST_CASE("omega data for D = 1 and D = 0 mod 4") {
  auto d3 = omega_data(-3);
  CHECK(d3.trace == 1);
  CHECK(d3.norm == 1);
  auto d4 = omega_data(-4);
  CHECK(d4.trace == 0);
  CHECK(d4.norm == 1);
  auto d23 = omega_data(-23);
  CHECK(d23.trace == 1);
  CHECK(d23.norm == 6);
  auto d24 = omega_data(-24);
  CHECK(d24.trace == 0);
  CHECK(d24.norm == 6);
}

TEST_CASE("non-fundamental or non-negative discriminants are rejected") {
  for (long d : {-12L, 5L, -1L, 0L, -16L, -27L}) {
    CHECK_THROWS_AS(omega_data(d), std::invalid_argument);
  }
  for (long d : {-3L, -4L, -7L, -8L, -11L, -15L, -19L, -20L, -23L, -24L}) {
    CHECK(is_fundamental(d));
  }
}

TEST_CASE("omega satisfies its minimal polynomial") {
  for (long d : {-3L, -4L, -7L, -8L, -15L, -24L}) {
    auto od = omega_data(d);
    QuadInteger w(d, 0, 1);
    QuadInteger lhs = w * w;
    QuadInteger rhs = QuadInteger(d, od.trace) * w - QuadInteger(d, od.norm);
    CHECK(lhs == rhs);
    CHECK(w.norm() == od.norm);
    CHECK((w + w.conj()) == QuadInteger(d, od.trace));
  }
}

TEST_CASE("norm is multiplicative and conjugation is an automorphism") {
  std::mt19937_64 rng(7);
  for (long d : {-3L, -4L, -7L, -20L}) {
    for (int k = 0; k < 200; ++k) {
      auto x = oracle::random_integer(d, rng, 9);
      auto y = oracle::random_integer(d, rng, 9);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(x.norm() >= 0);
      QuadElement xe(x);
      CHECK(xe * xe.conj() == QuadElement(d, Rational(x.norm())));
    }
  }
}

TEST_CASE("field inverse") {
  std::mt19937_64 rng(11);
  for (long d : {-3L, -8L}) {
    for (int k = 0; k < 50; ++k) {
      auto x = oracle::random_integer(d, rng, 6);
      if (x.is_zero()) continue;
      QuadElement xe(x);
      CHECK(xe * xe.inverse() == QuadElement(d, 1));
    }
  }
}

TEST_CASE("unit groups") {
  CHECK(units(-3).size() == 6);
  CHECK(units(-4).size() == 4);
  CHECK(units(-7).size() == 2);
  CHECK(units(-24).size() == 2);
  for (long d : {-3L, -4L, -7L}) {
    auto us = units(d);
    CHECK(us.front() == QuadInteger(d, 1));
    for (const auto& u : us) {
      CHECK(u.is_unit());
      for (const auto& v : us) {
        bool found = false;
        for (const auto& w : us) found = found || w == u * v;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("integrality") {
  CHECK(is_integral(QuadElement(-4, 3, -2)));
  CHECK_FALSE(is_integral(QuadElement(-4, Rational(1, 2), 0)));
  CHECK(to_integer(QuadElement(-7, 5, 1)) == QuadInteger(-7, 5, 1));
  CHECK_THROWS_AS(to_integer(QuadElement(-7, Rational(1, 3), 0)), std::domain_error);
  CHECK(parse_rational("-17/92160") == Rational(-17, 92160));
  CHECK(to_string(Rational(6) / 4) == "3/2");
}
