#include <doctest.h>

#include <cmath>
#include <random>

#include "qlat/error.hpp"
#include "qlat/quadratic.hpp"

using namespace qlat;

namespace {

QuadraticNumber random_element(std::mt19937_64& rng, int kappa) {
  std::uniform_int_distribution<int> c(-20, 20), d(1, 2);
  return QuadraticNumber(kappa, c(rng), c(rng), d(rng));
}

bool canonical(const QuadraticNumber& x) {
  if (x.den() <= 0) return false;
  Integer g = gcd(gcd(x.p(), x.q()), x.den());
  return g == 1;
}

}  // namespace

TEST_CASE("golden arithmetic") {
  const auto t = tau();
  CHECK(t * t == golden(1, 1));
  CHECK(t + (golden(1) - t) == golden(1));
  CHECK(t.conjugate() == golden(1, -1));
  CHECK(golden(3).conjugate() == golden(3));
  CHECK(t.norm() == -1);
  CHECK(golden(1, 2) == t.pow(3));
  CHECK(t.inverse() == golden(-1, 1));
  CHECK(t.pow(-2) * t.pow(2) == golden(1));
}

TEST_CASE("silver and kappa 3 arithmetic") {
  const auto s = QuadraticNumber::from_sqrt_form(2, 1, 1, 1);  // 1 + sqrt 2
  CHECK(s * s == QuadraticNumber::from_sqrt_form(2, 3, 2, 1));
  CHECK(s.conjugate() == QuadraticNumber::from_sqrt_form(2, 1, -1, 1));
  CHECK(s.norm() == -1);
  CHECK(QuadraticNumber::from_sqrt_form(3, 2, 1, 1).norm() == 1);
}

TEST_CASE("canonical form") {
  const QuadraticNumber x(5, 2, 4, 4);
  CHECK(x.p() == 1);
  CHECK(x.q() == 2);
  CHECK(x.den() == 2);
  const QuadraticNumber y(5, 1, 1, -2);
  CHECK(y.den() == 2);
  CHECK(y.p() == -1);
  CHECK(QuadraticNumber(5, 0, 0, 7).den() == 1);
  CHECK_THROWS_AS(QuadraticNumber(5, 1, 1, 0), DomainError);
}

TEST_CASE("sqrt form of tau") {
  const auto f = tau().sqrt_form();
  CHECK(f.a == 1);
  CHECK(f.b == 1);
  CHECK(f.d == 2);
  CHECK(QuadraticNumber::from_sqrt_form(5, 1, 1, 2) == tau());
}

TEST_CASE("exact sign and order") {
  CHECK(golden(2, -1).sign() > 0);    // 2 - tau
  CHECK(golden(-2, 1).sign() < 0);
  CHECK(golden(-1, 1).sign() > 0);    // 1/tau
  CHECK(golden(8, -5).sign() < 0);    // 8 - 5 tau
  CHECK(golden(0, 0).sign() == 0);
  CHECK(golden(1) < tau());
  CHECK(tau() < golden(2));
  // Near-cancellation: F(n+1) - F(n) tau alternates in sign and shrinks
  // (-7.3e-4 and +4.5e-4 here).
  CHECK(golden(987, -610).sign() < 0);
  CHECK(golden(1597, -987).sign() > 0);
}

TEST_CASE("mismatched rings are rejected") {
  CHECK_THROWS_AS(golden(1) + QuadraticNumber(2, 1), DomainError);
  CHECK_THROWS_AS(QuadraticNumber(4, 1), DomainError);
  CHECK_THROWS_AS(QuadraticNumber(1, 1), DomainError);
  CHECK_THROWS_AS(golden(0).inverse(), DomainError);
}

TEST_CASE("fundamental units from the Pell search") {
  CHECK(fundamental_unit(5).unit == tau());
  CHECK(fundamental_unit(2).unit == QuadraticNumber::from_sqrt_form(2, 1, 1, 1));
  CHECK(fundamental_unit(3).unit == QuadraticNumber::from_sqrt_form(3, 2, 1, 1));
  CHECK(fundamental_unit(13).unit == QuadraticNumber::from_sqrt_form(13, 3, 1, 2));
  CHECK(fundamental_unit(7).unit == QuadraticNumber::from_sqrt_form(7, 8, 3, 1));
  CHECK_THROWS_AS(fundamental_unit(8), DomainError);
  CHECK_THROWS_AS(fundamental_unit(9), DomainError);

  for (int kappa : {2, 3, 5, 6, 7, 13}) {
    const auto u = fundamental_unit(kappa);
    CHECK(u.unit.norm() * u.unit.norm() == 1);
    CHECK(u.unit.is_integral());
    CHECK(u.unit > QuadraticNumber(kappa, 1));
    CHECK(u.a * u.a - u.delta * u.b * u.b == 4 * u.norm_sign);
    // No solution of a^2 - delta b^2 = +-4 with a smaller positive b.
    for (Integer b = 1; b < u.b; ++b)
      for (int s : {-4, 4}) {
        const Integer v = u.delta * b * b + s;
        if (v < 0) continue;
        const Integer r = sqrt(v);
        CHECK(r * r != v);
      }
  }
}

TEST_CASE("totient") {
  CHECK(totient(5) == 4);
  CHECK(totient(8) == 4);
  CHECK(totient(12) == 4);
  CHECK(totient(10) == 4);
  CHECK(totient(1) == 1);
  CHECK(totient(97) == 96);
}

TEST_CASE("ring closure, multiplicative norm, conjugation involution") {
  std::mt19937_64 rng(20240501);
  for (int kappa : {2, 3, 5}) {
    for (int i = 0; i < 10000; ++i) {
      const auto a = random_element(rng, kappa), b = random_element(rng, kappa);
      const auto s = a + b, d = a - b, m = a * b;
      REQUIRE(canonical(s));
      REQUIRE(canonical(d));
      REQUIRE(canonical(m));
      REQUIRE(s - b == a);
      REQUIRE(m.norm() == a.norm() * b.norm());
      REQUIRE(a.conjugate().conjugate() == a);
      REQUIRE((a * b).conjugate() == a.conjugate() * b.conjugate());
      if (!b.is_zero()) REQUIRE(m / b == a);
      const double fa = a.to_double(), fb = b.to_double();
      if (std::abs(fa - fb) > 1e-9) REQUIRE((a < b) == (fa < fb));
    }
  }
}
