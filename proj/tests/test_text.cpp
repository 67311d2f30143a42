#include <doctest.h>

#include <sstream>

#include "qlat/error.hpp"
#include "qlat/text.hpp"

using namespace qlat;

TEST_CASE("parse coordinates") {
  CHECK(parse_exact_vector("1,0,0,0", kGolden) == ExactVector{golden(1), golden(0), golden(0), golden(0)});
  CHECK(parse_exact_vector("t/2,1/2,(t-1)/2,0", kGolden) ==
        ExactVector{golden(0, 1, 2), golden(1, 0, 2), golden(-1, 1, 2), golden(0)});
  CHECK(parse_quadratic("1+2t", kGolden) == golden(1, 2));
  CHECK(parse_quadratic(" -3 t ", kGolden) == golden(0, -3));
  CHECK(parse_quadratic("2*t-1", kGolden) == golden(-1, 2));
  CHECK(parse_quadratic("1+t", 2) == QuadraticNumber::from_sqrt_form(2, 1, 1, 1));
  CHECK(parse_quadratic("(1+t)/2", kGolden) == golden(1, 1, 2));
}

TEST_CASE("malformed coordinates name the token") {
  for (const char* bad : {"1/2,x", "1/2,,0", "(1+t", "1/0", "2**t", "t t", ""}) {
    try {
      parse_exact_vector(bad, kGolden);
      FAIL("expected a parse error for '" << bad << "'");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("malformed coordinate") != std::string::npos);
    }
  }
  try {
    parse_exact_vector("1,2q,0", kGolden);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'2q'") != std::string::npos);
  }
}

TEST_CASE("canonical emission") {
  CHECK(to_text(golden(1, 1, 2)) == "(1+t)/2");
  CHECK(to_text(golden(1, 0, 2)) == "1/2");
  CHECK(to_text(golden(0, 1, 2)) == "t/2");
  CHECK(to_text(golden(0, -1)) == "-t");
  CHECK(to_text(golden(-1, 1, 2)) == "(-1+t)/2");
  CHECK(to_text(golden(0)) == "0");
  CHECK(to_text(golden(1, 2)) == "1+2t");
  CHECK(to_display(QuadraticNumber::from_sqrt_form(2, 1, 1, 1)) == "1+sqrt(2)");
  CHECK(to_display(QuadraticNumber::from_sqrt_form(3, 2, 1, 1)) == "2+sqrt(3)");
}

TEST_CASE("emit -> parse -> emit is a fixed point") {
  for (int kappa : {2, 3, 5}) {
    for (int p = -5; p <= 5; ++p)
      for (int q = -5; q <= 5; ++q)
        for (int d : {1, 2, 3}) {
          const QuadraticNumber x(kappa, p, q, d);
          const std::string s = to_text(x);
          REQUIRE(parse_quadratic(s, kappa) == x);
          REQUIRE(to_text(parse_quadratic(s, kappa)) == s);
        }
  }
  for (const auto& r : roots(RootSystemId::h4())) REQUIRE(parse_exact_vector(to_text(r), kGolden) == r);
}

TEST_CASE("JSON encoding") {
  CHECK(to_json(golden(1, 1, 2)).dump() == "[1,1,2]");
  CHECK(quadratic_from_json(Json::parse("[1,1,2]"), kGolden) == golden(1, 1, 2));
  const Integer big = Integer(1) << 80;
  const QuadraticNumber x(kGolden, big, 1);
  const Json j = to_json(x);
  CHECK(j[0].is_string());
  CHECK(quadratic_from_json(j, kGolden) == x);
  CHECK_THROWS_AS(quadratic_from_json(Json::parse("[1,2]"), kGolden), ParseError);
  CHECK_THROWS_AS(quadratic_from_json(Json::parse("[1,2,0]"), kGolden), ParseError);
  const auto r = roots_json(RootSystemId::h3(), roots(RootSystemId::h3()));
  CHECK(r["count"] == 30);
  CHECK(r["roots"][0]["exact"].size() == 3);
  for (const auto& root : roots(RootSystemId::h3())) CHECK(vector_from_json(to_json(root), kGolden) == root);
}

TEST_CASE("scale table JSON is deterministic") {
  const auto a = table1_json(verify_table1()).dump();
  const auto b = table1_json(verify_table1()).dump();
  CHECK(a == b);
  const auto j = Json::parse(a);
  CHECK(j["passed"] == 7);
  for (const auto& row : j["rows"]) {
    CHECK(row.contains("ql"));
    CHECK(row.contains("expected_factor"));
    CHECK(row.contains("derived_factor"));
    CHECK(row.contains("minimal_power"));
    CHECK(row.contains("pass"));
  }
}

TEST_CASE("patch CSV round trip") {
  const auto p = generate_patch(embedding(QLId::H3_Fcc), Window{}, 4.0);
  std::stringstream ss;
  write_patch_csv(ss, p);
  const auto pts = read_patch_positions(ss);
  REQUIRE(pts.size() == p.points.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) CHECK(pts[i][k] == doctest::Approx(p.points[i].position[k]).epsilon(1e-14));
  std::stringstream bad("x1,x2\n1,abc\n");
  CHECK_THROWS_AS(read_patch_positions(bad), ParseError);
}

TEST_CASE("format_double") {
  CHECK(format_double(1.0 / 3) == "0.333333333333333");
  CHECK(format_double(-0.0) == "0");
}
