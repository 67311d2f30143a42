#include "qlat/text.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "qlat/error.hpp"

namespace qlat {

namespace {

class CoordinateParser {
 public:
  CoordinateParser(std::string_view text, int kappa) : s_(text), kappa_(kappa) {}

  QuadraticNumber parse() {
    skip();
    if (pos_ == s_.size()) fail("empty coordinate");
    QuadraticNumber v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed coordinate '" + std::string(s_) + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  QuadraticNumber expr() {
    QuadraticNumber v(kappa_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (eat('-')) {
        sign = -1;
      } else if (!eat('+') && !first) {
        break;
      }
      QuadraticNumber t = term();
      v += sign < 0 ? -t : t;
      first = false;
      skip();
      if (pos_ == s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return v;
  }

  QuadraticNumber term() {
    QuadraticNumber v = factor();
    while (eat('/')) {
      const Integer d = integer();
      if (d == 0) fail("division by zero");
      v *= Rational(1, d);
    }
    return v;
  }

  QuadraticNumber factor() {
    if (eat('(')) {
      QuadraticNumber v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (peek_digit()) {
      const Integer n = integer();
      const bool star = eat('*');
      if (eat('t')) return QuadraticNumber(kappa_, 0, n);
      if (star) fail("expected 't' after '*'");
      return QuadraticNumber(kappa_, n);
    }
    if (eat('t')) return QuadraticNumber::generator(kappa_);
    skip();
    if (pos_ == s_.size()) fail("unexpected end");
    fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
  }

  std::string_view s_;
  int kappa_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string numerator_text(const Integer& p, const Integer& q) {
  std::string out;
  if (p != 0) out = p.str();
  if (q != 0) {
    const Integer aq = q < 0 ? Integer(-q) : q;
    if (q < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (aq != 1) out += aq.str();
    out += "t";
  }
  return out.empty() ? "0" : out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
      throw ParseError("invalid integer string '" + s + "'");
    }
    return Integer(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json float_json(double x) { return std::stod(format_double(x)); }

}  // namespace

QuadraticNumber parse_quadratic(std::string_view text, int kappa) {
  require_valid_kappa(kappa);
  return CoordinateParser(text, kappa).parse();
}

ExactVector parse_exact_vector(std::string_view text, int kappa) {
  std::vector<QuadraticNumber> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coords.push_back(parse_quadratic(trim(tok), kappa));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ExactVector(std::move(coords));
}

Rational parse_rational(std::string_view text) {
  const std::string t = trim(text);
  const std::size_t slash = t.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos) {
      throw ParseError("malformed rational '" + t + "'");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(t));
  const Integer d = parse_int(t.substr(slash + 1));
  if (d == 0) throw ParseError("malformed rational '" + t + "': zero denominator");
  return Rational(parse_int(t.substr(0, slash)), d);
}

std::string to_text(const QuadraticNumber& x) {
  const std::string num = numerator_text(x.p(), x.q());
  if (x.den() == 1) return num;
  const bool single = x.p() == 0 || x.q() == 0;
  return (single ? num : "(" + num + ")") + "/" + x.den().str();
}

std::string to_text(const ExactVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += to_text(v[i]);
  }
  return out;
}

std::string to_text(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_display(const QuadraticNumber& x) {
  if (x.kappa() == kGolden) return to_text(x);
  const auto f = x.sqrt_form();
  std::string num;
  if (f.a != 0) num = f.a.str();
  if (f.b != 0) {
    const Integer ab = f.b < 0 ? Integer(-f.b) : f.b;
    num += f.b < 0 ? "-" : (num.empty() ? "" : "+");
    if (ab != 1) num += ab.str() + "*";
    num += "sqrt(" + std::to_string(x.kappa()) + ")";
  }
  if (num.empty()) num = "0";
  if (f.d == 1) return num;
  return "(" + num + ")/" + f.d.str();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

Json to_json(const Integer& n) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
  return n.str();
}

Json to_json(const QuadraticNumber& x) { return Json::array({to_json(x.p()), to_json(x.q()), to_json(x.den())}); }

Json to_json(const ExactVector& v) {
  Json a = Json::array();
  for (const auto& c : v.coords()) a.push_back(to_json(c));
  return a;
}

Json to_json(const GroupElement& g) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < g.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.dim(); ++c) row.push_back(to_json(g(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QuadraticNumber quadratic_from_json(const Json& j, int kappa) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected [p, q, den], got " + j.dump());
  const Integer den = integer_from_json(j[2]);
  if (den <= 0) throw ParseError("denominator must be positive in " + j.dump());
  return QuadraticNumber(kappa, integer_from_json(j[0]), integer_from_json(j[1]), den);
}

ExactVector vector_from_json(const Json& j, int kappa) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of [p, q, den]");
  std::vector<QuadraticNumber> c;
  for (const auto& e : j) c.push_back(quadratic_from_json(e, kappa));
  return ExactVector(std::move(c));
}

Json roots_json(const RootSystemId& id, const std::vector<ExactVector>& rs) {
  const Frame f = frame(id);
  Json out;
  out["system"] = id.name();
  out["kappa"] = id.kappa();
  out["count"] = rs.size();
  Json list = Json::array();
  for (const auto& r : rs) {
    Json fl = Json::array();
    for (double x : f.embed(r)) fl.push_back(float_json(x));
    list.push_back({{"text", to_text(r)}, {"exact", to_json(r)}, {"float", std::move(fl)}});
  }
  out["roots"] = std::move(list);
  return out;
}

Json group_json(const ReflectionGroup& g) {
  Json out;
  out["system"] = g.system().name();
  out["kappa"] = g.frame().kappa;
  out["order"] = g.order();
  Json metric = Json::array();
  for (const auto& m : g.frame().metric) metric.push_back(to_json(m));
  out["metric"] = std::move(metric);
  Json els = Json::array();
  for (const auto& e : g.elements()) els.push_back(to_json(e));
  out["elements"] = std::move(els);
  return out;
}

Json table1_json(const Table1Report& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"ql", to_string(r.id)},
                    {"kappa", r.kappa},
                    {"fundamental_unit", to_text(r.fundamental_unit)},
                    {"expected_factor", to_text(r.expected_factor)},
                    {"derived_factor", to_text(r.derived_factor)},
                    {"minimal_power", r.minimal_power},
                    {"negation_invariant", r.negation_invariant},
                    {"pass", r.pass}});
  }
  return {{"rows", std::move(rows)}, {"passed", report.passed()}, {"total", report.rows.size()}};
}

Json residues_json(const std::vector<H4Residue>& residues) {
  Json list = Json::array();
  for (const auto& r : residues) {
    Json item;
    item["m"] = r.m;
    item["n"] = r.n;
    item["vector"] = to_text(residue_vector(r));
    const auto w = golden_multiple_of_root(r);
    if (w) {
      item["multiplier"] = to_text(w->multiplier);
      item["root"] = to_text(w->root);
    }
    list.push_back(std::move(item));
  }
  return {{"count", residues.size()}, {"residues", std::move(list)}};
}

Json e8_report_json(const E8ProjectionReport& rep) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < rep.source_gram.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < rep.source_gram.cols(); ++j) row.push_back(to_text(rep.source_gram(i, j)));
    gram.push_back(std::move(row));
  }
  return {{"root_count", rep.root_count},
          {"integer_type", rep.integer_type},
          {"half_type", rep.half_type},
          {"source_gram", std::move(gram)},
          {"gram_integral", rep.gram_integral},
          {"gram_even", rep.gram_even},
          {"gram_determinant", to_text(rep.gram_determinant)},
          {"min_norm", to_text(rep.min_norm)},
          {"minimal_vectors", rep.minimal_vectors},
          {"isometry_bijective", rep.isometry_bijective},
          {"outer_shell", rep.outer_shell},
          {"inner_shell", rep.inner_shell},
          {"outer_shell_is_unit_icosians", rep.outer_shell_is_unit_icosians}};
}

void write_patch_csv(std::ostream& os, const Patch& patch) {
  if (patch.points.empty()) {
    os << "x1\n";
    return;
  }
  const std::size_t d = patch.points.front().position.size();
  const std::size_t n = patch.points.front().source.size();
  for (std::size_t i = 0; i < d; ++i) os << (i ? "," : "") << "x" << i + 1;
  for (std::size_t i = 0; i < d; ++i) os << ",exact" << i + 1;
  for (std::size_t i = 0; i < n; ++i) os << ",source" << i + 1;
  os << "\n";
  for (const auto& p : patch.points) {
    for (std::size_t i = 0; i < d; ++i) os << (i ? "," : "") << format_double(p.position[i]);
    for (std::size_t i = 0; i < d; ++i) os << "," << to_text(p.parallel[i]);
    for (std::size_t i = 0; i < n; ++i) os << "," << to_text(p.source[i]);
    os << "\n";
  }
}

std::vector<FloatVector> read_patch_positions(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("patch CSV is empty");
  std::size_t d = 0;
  {
    std::stringstream header(line);
    std::string col;
    while (std::getline(header, col, ',')) {
      col = trim(col);
      if (col.size() > 1 && col[0] == 'x' && col.find_first_not_of("0123456789", 1) == std::string::npos) ++d;
    }
  }
  if (d == 0) throw ParseError("patch CSV header has no x columns");
  std::vector<FloatVector> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::stringstream row(line);
    std::string cell;
    FloatVector p;
    for (std::size_t i = 0; i < d; ++i) {
      if (!std::getline(row, cell, ',')) throw ParseError("patch CSV line " + std::to_string(lineno) + " is short");
      try {
        std::size_t used = 0;
        p.push_back(std::stod(cell, &used));
        if (trim(cell.substr(used)).size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("patch CSV line " + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qlat
