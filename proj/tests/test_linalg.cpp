#include <doctest.h>

#include <random>

#include "qlat/error.hpp"
#include "qlat/linalg.hpp"

using namespace qlat;

TEST_CASE("determinant, inverse and solve") {
  const auto m = RationalMatrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(m.determinant() == 18);
  CHECK(m * m.inverse() == RationalMatrix::identity(3));
  const auto x = m.solve({1, 2, 3});
  REQUIRE(x);
  CHECK(m * *x == RationalVector{1, 2, 3});
  const auto singular = RationalMatrix::from_rows({{1, 2}, {2, 4}});
  CHECK(singular.rank() == 1);
  CHECK_FALSE(singular.solve({1, 0}));
  CHECK_THROWS_AS(singular.inverse(), DomainError);
}

TEST_CASE("lattice basis of the D3 generators") {
  std::vector<RationalVector> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int s : {-1, 1}) {
        RationalVector v(3);
        v[i] = 1;
        v[j] = s;
        gens.push_back(v);
      }
  const auto b = lattice_basis(gens);
  REQUIRE(b.size() == 3);
  // Index of D3 in Z^3 is 2.
  const auto m = RationalMatrix::from_columns(b);
  CHECK(abs(m.determinant()) == 2);
  for (const auto& g : gens) CHECK(all_integers(m.inverse() * g));
}

TEST_CASE("lattice basis with half-integer generators") {
  std::vector<RationalVector> gens = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}};
  const auto b = lattice_basis(gens);
  REQUIRE(b.size() == 3);
  CHECK(abs(RationalMatrix::from_columns(b).determinant()) == Rational(1, 2));
}

TEST_CASE("random integer generator sets span what they generate") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RationalVector> gens(6, RationalVector(4));
    for (auto& g : gens)
      for (auto& x : g) x = c(rng);
    const auto b = lattice_basis(gens);
    if (b.size() != 4) continue;
    const auto inv = RationalMatrix::from_columns(b).inverse();
    for (const auto& g : gens) CHECK(all_integers(inv * g));
  }
}
