#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <limits>

#include "doctest.h"
#include "prasymp/io.hpp"
#include "prasymp/rational.hpp"
#include "prasymp/scaled.hpp"
#include "support.hpp"

using namespace prasymp;
using testsup::rng;

TEST_CASE("normalization canonical forms") {
  ScaledComplex z = ScaledComplex::normalized(Complex(0.0, 0.0), 17);
  CHECK(z.is_zero());
  CHECK(z.exp2() == 0);
  CHECK(z == ScaledComplex());

  ScaledComplex one = ScaledComplex::normalized(Complex(1.0, 0.0), 0);
  CHECK(one.mantissa() == Complex(1.0, 0.0));
  CHECK(one.exp2() == 0);

  // radix^2 folds into the exponent exactly
  ScaledComplex four = ScaledComplex::normalized(Complex(4.0, 0.0), 0);
  CHECK(four.mantissa() == Complex(1.0, 0.0));
  CHECK(four.exp2() == 2);
}

TEST_CASE("normalization keeps mantissa in band and preserves value") {
  auto g = rng(11);
  for (int i = 0; i < 2000; ++i) {
    Complex w = testsup::unit_box(g);
    ScaledComplex v = ScaledComplex::from(w);
    double m = std::abs(v.mantissa());
    CHECK(m >= 0.5);
    CHECK(m < 2.0);
    // exponent transfer is exact, so the round trip is bit-for-bit
    CHECK(v.to_complex() == w);
  }
  CHECK_THROWS_AS(ScaledComplex::from(Complex(std::nan(""), 0.0)), InvalidInputError);
}

TEST_CASE("multiplication identities") {
  ScaledComplex x = ScaledComplex::normalized(Complex(1.375, -0.5), 77);
  CHECK(ScaledComplex::from(1.0) * x == x);
  CHECK((x * ScaledComplex()).is_zero());
  ScaledComplex u = ScaledComplex::normalized(Complex(1.5, 0.25), 10);
  ScaledComplex v = ScaledComplex::normalized(Complex(-1.25, 1.0), -4);
  CHECK(u * v == ScaledComplex::normalized(u.mantissa() * v.mantissa(), 6));
}

TEST_CASE("exponent overflow is an explicit error") {
  std::int64_t big = std::numeric_limits<std::int64_t>::max() - 2;
  ScaledComplex u = ScaledComplex::normalized(Complex(1.0, 0.0), big);
  CHECK_THROWS_AS(u * u, OverflowError);
  ScaledComplex lo = ScaledComplex::normalized(Complex(1.0, 0.0), -big);
  CHECK_THROWS_AS(lo / u, OverflowError);
}

TEST_CASE("addition rules") {
  ScaledComplex u = ScaledComplex::normalized(Complex(1.625, 0.75), 33);
  CHECK(u + ScaledComplex() == u);
  CHECK(ScaledComplex() + u == u);

  ScaledComplex c = ScaledComplex::from(1.0) + ScaledComplex::from(-1.0);
  CHECK(c.is_zero());
  CHECK(c.exp2() == 0);

  // beyond the mantissa width the small operand is absorbed exactly
  ScaledComplex hi = ScaledComplex::normalized(Complex(1.0, 0.0), 1000);
  CHECK(hi + ScaledComplex::from(1.0) == hi);
  CHECK(ScaledComplex::from(1.0) + hi == hi);
}

TEST_CASE("addition matches native arithmetic at small exponents") {
  auto g = rng(12);
  for (int i = 0; i < 1000; ++i) {
    Complex a = testsup::unit_box(g), b = testsup::unit_box(g);
    int ea = int(testsup::uniform(g, -30, 30)), eb = int(testsup::uniform(g, -30, 30));
    ScaledComplex u = ScaledComplex::normalized(a, ea);
    ScaledComplex v = ScaledComplex::normalized(b, eb);
    Complex want = u.to_complex() + v.to_complex();
    Complex got = (u + v).to_complex();
    CHECK(testsup::rel_diff(got, want) < 1e-15);
    CHECK((u - v).to_complex() == (u + (-v)).to_complex());
  }
}

TEST_CASE("relative error metric") {
  ScaledComplex u = ScaledComplex::normalized(Complex(1.3, -0.4), 500);
  CHECK(rel_error(u, u) == 0.0);
  CHECK(rel_error(ScaledComplex::from(2.0), ScaledComplex::from(1.0)) == 1.0);
  ScaledComplex far = ScaledComplex::normalized(Complex(1.0, 0.0), 300);
  CHECK(rel_error(far, ScaledComplex::from(1.0)) ==
        std::numeric_limits<double>::infinity());
  CHECK(rel_error(ScaledComplex::from(1.0), far) ==
        std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(rel_error(u, ScaledComplex()), DivisionByZeroError);
  CHECK(rel_error(ScaledComplex(), u) == 1.0);
}

TEST_CASE("product is exact to one mantissa rounding (rational cross-check)") {
  auto g = rng(13);
  for (int i = 0; i < 1000; ++i) {
    Complex a = testsup::unit_box(g), b = testsup::unit_box(g);
    ScaledComplex u = ScaledComplex::from(a), v = ScaledComplex::from(b);
    ScaledComplex w = u * v;
    // mantissas are dyadic, so the rational product is exact
    RationalComplex exact = RationalComplex::from(u.mantissa().real(), u.mantissa().imag()) *
                            RationalComplex::from(v.mantissa().real(), v.mantissa().imag());
    std::int64_t sh = w.exp2() - u.exp2() - v.exp2();
    REQUIRE(sh >= -2);
    REQUIRE(sh <= 2);
    Complex got(std::ldexp(w.mantissa().real(), int(sh)),
                std::ldexp(w.mantissa().imag(), int(sh)));
    Complex want(exact.re.get_d(), exact.im.get_d());
    CHECK(testsup::rel_diff(got, want) < 3e-16);
  }
}

TEST_CASE("log magnitude is additive across huge exponents") {
  ScaledComplex u = ScaledComplex::normalized(Complex(1.7, 0.3), 1000000);
  ScaledComplex v = ScaledComplex::normalized(Complex(1.1, -0.9), -700000);
  double lhs = (u * v).log_abs();
  double rhs = u.log_abs() + v.log_abs();
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  CHECK(ScaledComplex().log_abs() == -std::numeric_limits<double>::infinity());
}

TEST_CASE("from_log round trips magnitude and phase") {
  auto g = rng(14);
  CHECK(ScaledComplex::from_log(Complex(0.0, 0.0)) == ScaledComplex::from(1.0));
  for (int i = 0; i < 500; ++i) {
    double lr = testsup::uniform(g, -1e6, 1e6);
    double li = testsup::uniform(g, -3.0, 3.0);
    ScaledComplex v = ScaledComplex::from_log(Complex(lr, li));
    CHECK(std::abs(v.log_abs() - lr) < 1e-9 * (1.0 + std::abs(lr)));
    double da = std::remainder(v.arg() - li, 2.0 * 3.14159265358979323846);
    CHECK(std::abs(da) < 1e-9);
  }
  CHECK_THROWS_AS(ScaledComplex::from_log(Complex(1e300, 0.0)), OverflowError);
}

TEST_CASE("division and conjugation") {
  auto g = rng(15);
  for (int i = 0; i < 200; ++i) {
    ScaledComplex u = ScaledComplex::normalized(testsup::unit_box(g),
                                                (std::int64_t)testsup::uniform(g, -900, 900));
    ScaledComplex v = ScaledComplex::normalized(testsup::unit_box(g),
                                                (std::int64_t)testsup::uniform(g, -900, 900));
    CHECK(rel_error(u / v * v, u) < 1e-15);
    CHECK(u.conj().conj() == u);
    CHECK((u * v).conj() == u.conj() * v.conj());
  }
  CHECK_THROWS_AS(ScaledComplex::from(1.0) / ScaledComplex(), DivisionByZeroError);
}

TEST_CASE("to_complex saturates far outside native range") {
  ScaledComplex huge = ScaledComplex::normalized(Complex(1.5, -1.0), 100000);
  CHECK(std::isinf(huge.to_complex().real()));
  ScaledComplex tiny = ScaledComplex::normalized(Complex(1.5, -1.0), -100000);
  CHECK(tiny.to_complex() == Complex(0.0, 0.0));
}

TEST_CASE("text and json serialization round trip exactly") {
  auto g = rng(16);
  for (int i = 0; i < 300; ++i) {
    ScaledComplex v = ScaledComplex::normalized(
        testsup::unit_box(g), (std::int64_t)testsup::uniform(g, -2e6, 2e6));
    CHECK(scaled_from_text(to_text(v)) == v);
    nlohmann::json j = scaled_to_json(v);
    REQUIRE(j.contains("re"));
    REQUIRE(j.contains("im"));
    REQUIRE(j.contains("exp2"));
    CHECK(scaled_from_json(j) == v);
  }
  ScaledComplex z;
  CHECK(scaled_from_text(to_text(z)) == z);
  CHECK(scaled_from_json(scaled_to_json(z)) == z);
}

TEST_CASE("shortest round-trip decimal formatting") {
  CHECK(fmt_double(0.1) == "0.1");
  CHECK(parse_double(fmt_double(0.1)) == 0.1);
  auto g = rng(17);
  for (int i = 0; i < 500; ++i) {
    double x = std::ldexp(testsup::uniform(g, -2.0, 2.0), int(testsup::uniform(g, -60, 60)));
    CHECK(parse_double(fmt_double(x)) == x);
  }
}
