#pragma once

// Text and JSON encodings of exact values.
//
// Text: a coordinate is a sum of integer and `t` terms, optionally over an
// integer denominator, e.g. "1/2", "t/2", "(t-1)/2", "1+2t", "-3t".  `t`
// denotes the generator omega of the ring: tau when kappa = 5, sqrt(kappa)
// otherwise.  JSON: [p, q, den] for (p + q*omega)/den.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qlat/cut_project.hpp"
#include "qlat/exact_vector.hpp"
#include "qlat/linalg.hpp"
#include "qlat/quadratic.hpp"
#include "qlat/quasilattice.hpp"
#include "qlat/reflection_group.hpp"

namespace qlat {

using Json = nlohmann::ordered_json;

QuadraticNumber parse_quadratic(std::string_view text, int kappa);
ExactVector parse_exact_vector(std::string_view text, int kappa);
Rational parse_rational(std::string_view text);

std::string to_text(const QuadraticNumber& x);
std::string to_text(const ExactVector& v);  // comma separated
std::string to_text(const Rational& r);
/// Human-oriented rendering: t-form for kappa = 5, "a+b*sqrt(k)" otherwise.
std::string to_display(const QuadraticNumber& x);

/// Shortest round-trip-safe float rendering with 15 significant digits.
std::string format_double(double x);

Json to_json(const Integer& n);  // number when it fits in int64, string otherwise
Json to_json(const QuadraticNumber& x);
Json to_json(const ExactVector& v);
Json to_json(const GroupElement& g);
QuadraticNumber quadratic_from_json(const Json& j, int kappa);
ExactVector vector_from_json(const Json& j, int kappa);

Json roots_json(const RootSystemId& id, const std::vector<ExactVector>& roots);
Json group_json(const ReflectionGroup& g);
Json table1_json(const Table1Report& report);
Json residues_json(const std::vector<H4Residue>& residues);
Json e8_report_json(const E8ProjectionReport& rep);

/// Patch CSV: float parallel coordinates, exact parallel coordinates, source
/// coordinates.
void write_patch_csv(std::ostream& os, const Patch& patch);
/// Reads the float position columns back (x1..xd).
std::vector<FloatVector> read_patch_positions(std::istream& is);

}  // namespace qlat
