#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "qlat/cut_project.hpp"
#include "qlat/error.hpp"
#include "qlat/icosian.hpp"
#include "qlat/reflection_group.hpp"

using namespace qlat;

namespace {

const std::vector<QLId> kTargets = {QLId::H3_Primitive, QLId::H3_Fcc, QLId::H3_Bcc, QLId::H4};

}  // namespace

TEST_CASE("embeddings") {
  for (QLId id : kTargets) {
    const auto e = embedding(id);
    const auto m = ql(id);
    CHECK(e.parallel_columns == m.basis());
    for (std::size_t i = 0; i < e.source_rank; ++i) CHECK(e.perpendicular_columns[i] == e.parallel_columns[i].conjugate());
    // Jointly injective: the stacked real map has full rank.
    std::vector<RationalVector> cols;
    for (std::size_t i = 0; i < e.source_rank; ++i) {
      RationalVector c;
      for (const auto& x : e.parallel_columns[i].coords()) {
        c.push_back(x.rational_part());
        c.push_back(x.generator_part());
      }
      cols.push_back(c);
    }
    CHECK(RationalMatrix::from_columns(cols).rank() == e.source_rank);
    // Source basis images are QL members.
    for (const auto& s : e.source_basis) CHECK(m.contains(e.parallel(s)));
  }
  CHECK_THROWS_AS(embedding(QLId::I2_5), UnsupportedError);
  const auto prim = embedding(QLId::H3_Primitive);
  for (std::size_t i = 0; i < 6; ++i) {
    RationalVector unit(6);
    unit[i] = 1;
    CHECK(prim.parallel(unit) == ql(QLId::H3_Primitive).basis()[i]);
  }
}

TEST_CASE("source lattices have the expected index in Z^N") {
  CHECK(abs(RationalMatrix::from_columns(embedding(QLId::H3_Primitive).source_basis).determinant()) == 1);
  CHECK(abs(RationalMatrix::from_columns(embedding(QLId::H3_Fcc).source_basis).determinant()) == 2);
  CHECK(abs(RationalMatrix::from_columns(embedding(QLId::H3_Bcc).source_basis).determinant()) == Rational(1, 2));
}

TEST_CASE("E8 roots") {
  const auto rs = e8_roots();
  CHECK(rs.size() == 240);
  // Independent oracle: every vector in {0, +-1/2, +-1}^8 that is all-integer
  // or all-half, has even coordinate sum and norm 2.
  std::size_t count = 0;
  for (int idx = 0; idx < 390625; ++idx) {
    int t = idx, twice[8], sum2 = 0, norm4 = 0;
    for (int i = 0; i < 8; ++i) {
      twice[i] = t % 5 - 2;
      t /= 5;
      sum2 += twice[i];
      norm4 += twice[i] * twice[i];
    }
    const bool all_even = std::all_of(twice, twice + 8, [](int x) { return x % 2 == 0; });
    const bool all_odd = std::all_of(twice, twice + 8, [](int x) { return x % 2 != 0; });
    if ((all_even || all_odd) && sum2 % 4 == 0 && norm4 == 8) ++count;
  }
  CHECK(count == 240);
}

TEST_CASE("E8 projection onto the icosians") {
  const auto rep = project_e8();
  CHECK(rep.root_count == 240);
  CHECK(rep.integer_type == 112);
  CHECK(rep.half_type == 128);
  CHECK(rep.gram_integral);
  CHECK(rep.gram_even);
  CHECK(rep.gram_determinant == 1);
  CHECK(rep.min_norm == 2);
  CHECK(rep.minimal_vectors == 240);
  CHECK(rep.isometry_bijective);
  CHECK(rep.outer_shell == 120);
  CHECK(rep.inner_shell == 120);
  CHECK(rep.outer_shell_is_unit_icosians);
  for (const auto& u : unit_icosians()) CHECK(icosian_e8_form(u.to_vector(), u.to_vector()) == 2);
}

TEST_CASE("patch points are members and lie in the window") {
  for (QLId id : kTargets) {
    const auto e = embedding(id);
    const auto m = ql(id);
    const double radius = id == QLId::H4 ? 3.0 : 6.0;
    for (WindowShape shape : {WindowShape::CellImage, WindowShape::Ball}) {
      const Window w{shape, 1.0};
      const auto p = generate_patch(e, w, radius);
      CHECK(!p.points.empty());
      for (const auto& pt : p.points) {
        REQUIRE(m.contains(pt.parallel));
        REQUIRE(e.parallel(pt.source) == pt.parallel);
        REQUIRE(in_window(e, w, e.perpendicular(pt.source)));
        REQUIRE(float_norm(pt.position) <= radius + 1e-9);
      }
    }
  }
}

TEST_CASE("primitive patch of radius 3") {
  const auto e = embedding(QLId::H3_Primitive);
  const auto p = generate_patch(e, Window{}, 3.0);
  const auto m = ql(QLId::H3_Primitive);
  for (const auto& pt : p.points) CHECK(m.contains(pt.parallel));
}

TEST_CASE("a tiny window keeps only the origin") {
  for (QLId id : kTargets) {
    const auto p = generate_patch(embedding(id), Window{WindowShape::CellImage, 1e-6}, 4.0);
    REQUIRE(p.points.size() == 1);
    CHECK(p.points[0].parallel.is_zero());
  }
}

TEST_CASE("patch enumeration is complete against a brute-force box search") {
  // Oracle: all source points with coordinates in [-6, 6]^6 filtered directly.
  const auto e = embedding(QLId::H3_Primitive);
  const Window w{WindowShape::CellImage, 1.0};
  const double radius = 3.0;
  std::set<ExactVector> oracle;
  double fa[6][3], fb[6][3];
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 3; ++k) {
      fa[i][k] = e.parallel_columns[i][k].to_double();
      fb[i][k] = e.perpendicular_columns[i][k].to_double();
    }
  std::vector<long long> c(6);
  for (long long idx = 0; idx < 4826809; ++idx) {
    long long t = idx;
    double par[3] = {0, 0, 0}, perp[3] = {0, 0, 0};
    for (int i = 0; i < 6; ++i) {
      c[i] = t % 13 - 6;
      t /= 13;
    }
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 3; ++k) {
        par[k] += static_cast<double>(c[i]) * fa[i][k];
        perp[k] += static_cast<double>(c[i]) * fb[i][k];
      }
    if (par[0] * par[0] + par[1] * par[1] + par[2] * par[2] > radius * radius + 1e-9) continue;
    if (perp[0] * perp[0] + perp[1] * perp[1] + perp[2] * perp[2] > 16) continue;
    RationalVector s(c.begin(), c.end());
    if (!in_window(e, w, e.perpendicular(s))) continue;
    oracle.insert(e.parallel(s));
  }
  std::set<ExactVector> got;
  for (const auto& pt : generate_patch(e, w, radius).points) got.insert(pt.parallel);
  CHECK(got == oracle);
}

TEST_CASE("structure factor") {
  const auto p = generate_patch(embedding(QLId::H3_Primitive), Window{}, 6.0);
  CHECK(structure_factor(p, {0, 0, 0}) == doctest::Approx(1.0));
  const auto k = reciprocal_point(embedding(QLId::H3_Primitive), {1, 1, 1, -1, 2, -1});
  const double s = structure_factor(p, k.parallel);
  CHECK(s >= 0);
  CHECK(s <= 1);
  CHECK_THROWS_AS(structure_factor(std::vector<FloatVector>{}, {0, 0, 0}), DomainError);
  const auto many = structure_factors({{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {3.14159265358979, 0, 0}});
  CHECK(many[0] == doctest::Approx(1.0));
  CHECK(many[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("reciprocal points pair with source points to integers") {
  const auto e = embedding(QLId::H3_Bcc);
  const auto k = reciprocal_point(e, {1, 0, 0, 0, 0, 0});
  // k . x over the full (parallel + perpendicular) image is 2 pi times an integer.
  for (const auto& s : e.source_basis) {
    const auto par = e.parallel(s), perp = e.perpendicular(s);
    double phase = 0;
    for (int i = 0; i < 3; ++i) phase += k.parallel[i] * par[i].to_double() + k.perpendicular[i] * perp[i].to_double();
    const double turns = phase / (2 * M_PI);
    CHECK(std::abs(turns - std::round(turns)) < 1e-9);
  }
}

TEST_CASE("window shapes") {
  CHECK(parse_window_shape("cell") == WindowShape::CellImage);
  CHECK(parse_window_shape("ball") == WindowShape::Ball);
  CHECK_THROWS_AS(parse_window_shape("cube"), ParseError);
  CHECK_THROWS_AS(generate_patch(embedding(QLId::H3_Fcc), Window{WindowShape::Ball, 0}, 3), DomainError);
  CHECK_THROWS_AS(generate_patch(embedding(QLId::H3_Fcc), Window{}, -1), DomainError);
}
