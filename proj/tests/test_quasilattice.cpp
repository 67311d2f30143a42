#include <doctest.h>

#include <random>
#include <set>

#include "qlat/error.hpp"
#include "qlat/quasilattice.hpp"
#include "qlat/reflection_group.hpp"

using namespace qlat;

namespace {

QuadraticNumber h(long long p, long long q = 0) { return golden(p, q, 2); }

ExactVector sum(const std::vector<ExactVector>& vs) {
  ExactVector s(vs.front().kappa(), vs.front().dim());
  for (const auto& v : vs) s += v;
  return s;
}

H4Residue residue(const ExactVector& v) {
  const auto r = residue_of(v);
  REQUIRE(r);
  return *r;
}

}  // namespace

TEST_CASE("published membership examples") {
  const auto h4 = ql(QLId::H4);
  CHECK(h4.contains(ExactVector{golden(1), golden(0), golden(0), golden(0)}));
  const auto half = h4.membership(ExactVector{h(1), golden(0), golden(0), golden(0)});
  CHECK_FALSE(half.member);
  CHECK(half.reason.find("parity") != std::string::npos);
  const auto form = h4.membership(ExactVector{golden(1, 0, 3), golden(0), golden(0), golden(0)});
  CHECK_FALSE(form.member);
  CHECK(form.reason.find("form") != std::string::npos);
  for (const auto& r : roots(RootSystemId::h4())) CHECK(h4.contains(r));

  const auto prim = ql(QLId::H3_Primitive), fcc = ql(QLId::H3_Fcc), bcc = ql(QLId::H3_Bcc);
  const auto v1 = prim.basis()[0];
  CHECK(v1 == ExactVector{golden(1), tau(), golden(0)});
  const auto half_sum = sum(prim.basis()) * golden(1, 0, 2);
  CHECK(bcc.contains(half_sum));
  CHECK_FALSE(fcc.contains(half_sum));
  CHECK_FALSE(prim.contains(half_sum));
  CHECK(prim.contains(v1));
  CHECK_FALSE(fcc.contains(v1));
  CHECK(bcc.contains(v1));

  CHECK_THROWS_AS(h4.contains(ExactVector{golden(1), golden(0), golden(0)}), DomainError);
  CHECK_THROWS_AS(ql(QLId::I2_8).contains(ExactVector{golden(1), golden(0)}), DomainError);
}

TEST_CASE("H3 containments fcc < primitive < bcc (module level)") {
  const auto prim = ql(QLId::H3_Primitive), fcc = ql(QLId::H3_Fcc), bcc = ql(QLId::H3_Bcc);
  for (const auto& b : fcc.lattice_basis()) CHECK(prim.contains(b));
  for (const auto& b : prim.lattice_basis()) CHECK(bcc.contains(b));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto f = fcc.sample(rng, 4), p = prim.sample(rng, 4);
    REQUIRE(prim.contains(f));
    REQUIRE(bcc.contains(p));
  }
}

TEST_CASE("I2-5 contains the I2-10 roots") {
  const auto m = ql(QLId::I2_5);
  for (const auto& r : roots(RootSystemId::i2(10))) CHECK(m.contains(r));
  CHECK(parse_ql_id("I2-10") == QLId::I2_5);
}

TEST_CASE("modules: rank, independence, invariance under generators, roots inside") {
  for (QLId id : all_ql_ids()) {
    const auto m = ql(id);
    CHECK(m.basis().size() == m.rank());
    CHECK(m.lattice_basis().size() == m.rank());
    CHECK(span_basis(m.lattice_basis()).size() == m.rank());
    const auto g = ReflectionGroup::generate(m.system());
    for (const auto& s : g.generators()) {
      for (const auto& b : m.basis())
        if (m.contains(b)) CHECK(m.contains(s * b));
      for (const auto& b : m.lattice_basis()) CHECK(m.contains(s * b));
    }
    for (const auto& b : m.lattice_basis()) CHECK(m.contains(b));
  }
}

TEST_CASE("roots are integer combinations of the module basis (up to the root-copy scale)") {
  for (QLId id : all_ql_ids()) {
    const auto m = ql(id);
    const auto w = contains_root_copy(m);
    REQUIRE(w.found);
    for (const auto& r : roots(m.system())) CHECK(m.lattice_coordinates(r * w.scale).has_value());
  }
}

TEST_CASE("contains_root_copy") {
  for (QLId id : all_ql_ids()) {
    const auto w = contains_root_copy(ql(id));
    CHECK_MESSAGE(w.found, to_string(id));
    CHECK(w.scale.sign() > 0);
  }
  CHECK(contains_root_copy(ql(QLId::H4)).scale == golden(1));
}

TEST_CASE("root-labelled modules are spanned by a scaled root system") {
  for (QLId id : {QLId::I2_5, QLId::I2_8, QLId::I2_12, QLId::H3_Fcc, QLId::H4}) {
    const auto m = ql(id);
    const auto c = contains_root_copy(m).scale;
    std::vector<ExactVector> scaled;
    for (const auto& r : roots(m.system())) scaled.push_back(r * c);
    CHECK_MESSAGE(span_basis(scaled) == span_basis(m.lattice_basis()), to_string(id));
  }
}

TEST_CASE("membership agrees with lattice coordinates") {
  std::mt19937_64 rng(8);
  for (QLId id : all_ql_ids()) {
    const auto m = ql(id);
    for (int i = 0; i < 300; ++i) {
      const auto v = m.sample(rng, 5);
      REQUIRE(m.contains(v));
      REQUIRE(m.lattice_coordinates(v).has_value());
      // A half-step off a lattice vector leaves the module.
      const auto off = v + m.lattice_basis()[static_cast<std::size_t>(i) % m.rank()] *
                               QuadraticNumber(m.kappa(), 1, 0, 2);
      REQUIRE_FALSE(m.contains(off));
      REQUIRE_FALSE(m.lattice_coordinates(off).has_value());
    }
  }
}

TEST_CASE("H4 residues") {
  const auto rs = enumerate_h4_residues();
  CHECK(rs.size() == 16);

  std::set<H4Residue> expected;
  const ExactVector zero(kGolden, 4);
  expected.insert(residue(zero));
  expected.insert(residue(ExactVector{h(1), h(1), h(1), h(1)}));
  expected.insert(residue(ExactVector{h(0, 1), h(0, 1), h(0, 1), h(0, 1)}));
  expected.insert(residue(ExactVector{h(1, 1), h(1, 1), h(1, 1), h(1, 1)}));
  const std::array<QuadraticNumber, 4> base = {golden(0), h(1, 1), h(0, 1), h(1)};
  for (const auto& p : even_permutations4()) {
    ExactVector v(kGolden, 4);
    for (int i = 0; i < 4; ++i) v[i] = base[p[i]];
    expected.insert(residue(v));
  }
  CHECK(expected.size() == 16);
  CHECK(std::set<H4Residue>(rs.begin(), rs.end()) == expected);

  for (const auto& r : rs) CHECK(residue_is_golden_multiple_of_root(r));
  CHECK(residue_is_golden_multiple_of_root(residue(ExactVector{h(1, 1), h(1, 1), h(1, 1), h(1, 1)})));

  H4Residue bad;
  bad.m = {1, 0, 0, 0};
  CHECK_FALSE(is_allowed_residue(bad));
  CHECK_THROWS_AS(golden_multiple_of_root(bad), DomainError);
}

TEST_CASE("allowed residues are exactly the residues of golden multiples of roots") {
  std::set<H4Residue> multiples;
  for (const auto& r : roots(RootSystemId::h4()))
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) multiples.insert(residue(r * golden(a, b)));
  multiples.insert(residue(ExactVector(kGolden, 4)));
  const auto rs = enumerate_h4_residues();
  CHECK(multiples == std::set<H4Residue>(rs.begin(), rs.end()));
}

TEST_CASE("scale classification") {
  CHECK(scale_classification(ql(QLId::H4), tau(), 1).verdict == ScaleVerdict::Invariant);
  const auto p1 = scale_classification(ql(QLId::H3_Primitive), tau(), 1);
  CHECK(p1.verdict != ScaleVerdict::Invariant);
  // Computed verdict for tau * H3-primitive: some images need half coefficients.
  CHECK(p1.verdict == ScaleVerdict::NotClosed);
  CHECK(scale_classification(ql(QLId::H3_Primitive), tau(), 2).verdict == ScaleVerdict::NotClosed);
  CHECK(scale_classification(ql(QLId::H3_Primitive), tau(), 3).verdict == ScaleVerdict::Invariant);
  CHECK(scale_classification(ql(QLId::H3_Primitive), tau(), -3).verdict == ScaleVerdict::Invariant);
  CHECK(scale_classification(ql(QLId::I2_8), QuadraticNumber::from_sqrt_form(2, 1, 1, 1), 1).verdict ==
        ScaleVerdict::Invariant);
  CHECK(scale_classification(ql(QLId::I2_12), QuadraticNumber::from_sqrt_form(3, 2, 1, 1), 1).verdict ==
        ScaleVerdict::Invariant);
  const auto inv = scale_classification(ql(QLId::H3_Fcc), tau(), -1);
  CHECK(inv.verdict == ScaleVerdict::Invariant);
  CHECK(abs(inv.action.determinant()) == 1);
  CHECK_THROWS_AS(scale_classification(ql(QLId::H4), golden(2), 1), DomainError);
  CHECK_THROWS_AS(scale_classification(ql(QLId::I2_8), tau(), 1), DomainError);
}

TEST_CASE("scale table rows") {
  const auto rep = verify_table1();
  REQUIRE(rep.rows.size() == 7);
  CHECK(rep.passed() == 7);
  const std::vector<int> powers = {1, 1, 1, 3, 1, 1, 1};
  for (std::size_t i = 0; i < 7; ++i) CHECK(rep.rows[i].minimal_power == powers[i]);
  CHECK(rep.rows[0].derived_factor == tau());
  CHECK(rep.rows[3].derived_factor == tau().pow(3));
}

TEST_CASE("density proxy grows finer with the coefficient box") {
  for (QLId id : all_ql_ids()) {
    const auto m = ql(id);
    std::vector<double> d;
    for (int b = 1; b <= 4; ++b) d.push_back(min_pairwise_distance(m, b));
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] <= d[i - 1] + 1e-12);
    CHECK(d[3] < d[0]);
    // I2-12 and H3-primitive plateau between boxes 2 and 3; the others
    // decrease at every step.
    const bool plateau = id == QLId::I2_12 || id == QLId::H3_Primitive;
    if (plateau) {
      CHECK(d[2] == doctest::Approx(d[1]).epsilon(1e-12));
    } else {
      for (std::size_t i = 1; i < d.size(); ++i) CHECK_MESSAGE(d[i] < d[i - 1] - 1e-12, to_string(id));
    }
  }
}
