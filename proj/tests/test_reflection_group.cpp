#include <doctest.h>

#include <random>
#include <set>

#include "qlat/error.hpp"
#include "qlat/icosian.hpp"
#include "qlat/reflection_group.hpp"

using namespace qlat;

namespace {

const ReflectionGroup& h4_group() {
  static const ReflectionGroup g = ReflectionGroup::generate(RootSystemId::h4());
  return g;
}

ExactVector half_ones() { return ExactVector{golden(1, 0, 2), golden(1, 0, 2), golden(1, 0, 2), golden(1, 0, 2)}; }

}  // namespace

TEST_CASE("group orders") {
  CHECK(ReflectionGroup::generate(RootSystemId::h3()).order() == 120);
  for (int n : {5, 8, 10, 12}) {
    CHECK(ReflectionGroup::generate(RootSystemId::i2(n)).order() == static_cast<std::size_t>(2 * n));
  }
  CHECK(h4_group().order() == 14400);
  CHECK_THROWS_AS(ReflectionGroup::generate(RootSystemId::i2(7)), UnsupportedError);
}

TEST_CASE("small groups: orthogonality, determinant, closure, root invariance (exhaustive)") {
  for (const auto& id : {RootSystemId::h3(), RootSystemId::i2(5), RootSystemId::i2(8), RootSystemId::i2(10),
                         RootSystemId::i2(12)}) {
    const auto g = ReflectionGroup::generate(id);
    const auto rs = roots(id);
    const std::set<ExactVector> root_set(rs.begin(), rs.end());
    std::size_t bad = 0;
    for (const auto& a : g.elements()) {
      if (!a.is_orthogonal(g.frame())) ++bad;
      const auto det = a.determinant();
      if (det != QuadraticNumber(g.frame().kappa, 1) && det != QuadraticNumber(g.frame().kappa, -1)) ++bad;
      for (const auto& r : rs)
        if (!root_set.count(a * r)) ++bad;
      for (const auto& b : g.elements())
        if (!g.contains(a * b)) ++bad;
    }
    CHECK_MESSAGE(bad == 0, id.name());
  }
}

TEST_CASE("H4: orthogonality for all elements, sampled closure and root invariance") {
  const auto& g = h4_group();
  std::size_t bad = 0;
  for (const auto& a : g.elements())
    if (!a.is_orthogonal(g.frame())) ++bad;
  CHECK(bad == 0);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int i = 0; i < 1000; ++i) {
    const auto& a = g.elements()[pick(rng)];
    const auto& b = g.elements()[pick(rng)];
    REQUIRE(g.contains(a * b));
  }
  const auto rs = roots(RootSystemId::h4());
  const std::set<ExactVector> root_set(rs.begin(), rs.end());
  for (int i = 0; i < 100; ++i) {
    const auto& a = g.elements()[pick(rng)];
    for (const auto& r : rs) REQUIRE(root_set.count(a * r));
  }
}

TEST_CASE("orbits") {
  const auto h3 = ReflectionGroup::generate(RootSystemId::h3());
  const auto o = h3.orbit(ExactVector{golden(1), golden(0), golden(0)});
  const auto rs = roots(RootSystemId::h3());
  CHECK(o == rs);
  const auto ico = h3.orbit(ExactVector{golden(1), tau(), golden(0)});
  CHECK(ico.size() == 12);
  for (const auto& v : ico) CHECK(dot(v, v) == golden(2, 1));
  CHECK(h4_group().orbit(ExactVector(kGolden, 4)).size() == 1);
}

TEST_CASE("quaternion-pair maps") {
  const auto one = Quaternion::one();
  CHECK(h4_element_from_quaternions(one, one, false).is_identity());

  // q = (1,1,1,1)/2: Q -> conj(q) Q q fixes q and rotates its orthogonal
  // complement by 120 degrees.
  const Quaternion q(half_ones());
  const auto m = h4_element_from_quaternions(q, q, false);
  CHECK(m.is_orthogonal(Frame::euclidean(kGolden, 4)));
  CHECK_FALSE(m.is_identity());
  CHECK(m.order() == 3);
  CHECK(m * half_ones() == half_ones());
  CHECK(h4_group().contains(m));

  CHECK_THROWS_AS(h4_element_from_quaternions(one * tau(), one, false), DomainError);
}

TEST_CASE("quaternion-pair census matches the reflection group with a 2:1 fiber") {
  const auto census = h4_quaternion_pair_census();
  CHECK(census.parameterizations == 28800);
  CHECK(census.distinct == 14400);
  CHECK(census.min_fiber == 2);
  CHECK(census.max_fiber == 2);
  const auto& g = h4_group();
  std::size_t missing = 0;
  for (const auto& e : census.elements)
    if (!g.contains(e)) ++missing;
  CHECK(missing == 0);
}
