#include <doctest.h>

#include <random>
#include <set>

#include "qlat/icosian.hpp"
#include "qlat/quasilattice.hpp"

using namespace qlat;

namespace {

Quaternion half_ones() { return {golden(1, 0, 2), golden(1, 0, 2), golden(1, 0, 2), golden(1, 0, 2)}; }

// Random ring element: a short integer combination of unit icosians with
// golden-integer weights.
Quaternion random_ring_element(std::mt19937_64& rng, const std::vector<Quaternion>& units) {
  std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  Quaternion q = units[pick(rng)] * golden(c(rng), c(rng));
  for (int i = 0; i < 3; ++i) q = q + units[pick(rng)] * golden(c(rng), c(rng));
  return q;
}

}  // namespace

TEST_CASE("Hamilton product") {
  const auto q = half_ones();
  CHECK(q * Quaternion::one() == q);
  // 16-term expansion by hand: w = (1-1-1-1)/4, x = y = z = (1+1+1-1)/4.
  CHECK(q * q == Quaternion(golden(-1, 0, 2), golden(1, 0, 2), golden(1, 0, 2), golden(1, 0, 2)));
  CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
  CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
  CHECK(q.conj() == Quaternion(golden(1, 0, 2), golden(-1, 0, 2), golden(-1, 0, 2), golden(-1, 0, 2)));
  CHECK((Quaternion::one() * tau()).norm() == tau() * tau());
}

TEST_CASE("unit icosians") {
  const auto units = unit_icosians();
  CHECK(units.size() == 120);
  for (const auto& u : units) {
    CHECK(u.norm() == golden(1));
    CHECK(is_in_icosian_ring(u));
    CHECK(is_in_icosian_ring(u * tau()));
  }
  CHECK_FALSE(is_in_icosian_ring(Quaternion(golden(1, 0, 2), golden(0), golden(0), golden(0))));
}

TEST_CASE("unit icosians form a group") {
  const auto c = icosian_closure();
  CHECK(c.products == 14400);
  CHECK(c.failures == 0);
}

TEST_CASE("ring closure and multiplicative norm (randomised)") {
  const auto units = unit_icosians();
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_ring_element(rng, units), b = random_ring_element(rng, units);
    REQUIRE(is_in_icosian_ring(a + b));
    REQUIRE(is_in_icosian_ring(a * b));
    REQUIRE((a * b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("norm-one ring elements in a coefficient box are the unit icosians") {
  // lambda = (1/2){m_i + n_i tau} with |m_i|, |n_i| <= 2, exhaustive.
  const auto units = unit_icosians();
  std::set<ExactVector> expected;
  for (const auto& u : units) expected.insert(u.to_vector());
  std::set<ExactVector> found;
  std::array<Integer, 4> m, n;
  for (int idx = 0; idx < 390625; ++idx) {
    int t = idx;
    for (int i = 0; i < 4; ++i) {
      m[i] = t % 5 - 2;
      t /= 5;
      n[i] = t % 5 - 2;
      t /= 5;
    }
    if (!satisfies_h4_parity(m, n)) continue;
    ExactVector v(kGolden, 4);
    for (int i = 0; i < 4; ++i) v[i] = QuadraticNumber(kGolden, m[i], n[i], 2);
    if (dot(v, v) == golden(1)) found.insert(v);
  }
  CHECK(found == expected);
}
