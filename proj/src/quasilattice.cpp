#include "qlat/quasilattice.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cctype>
#include <cmath>
#include <limits>

#include "qlat/error.hpp"
#include "qlat/reflection_group.hpp"

namespace qlat {

namespace {

struct QLInfo {
  QLId id;
  const char* name;
  CoefficientRule rule;
};

constexpr QLInfo kInfo[] = {
    {QLId::I2_5, "I2-5", CoefficientRule::Unrestricted},
    {QLId::I2_8, "I2-8", CoefficientRule::Unrestricted},
    {QLId::I2_12, "I2-12", CoefficientRule::Unrestricted},
    {QLId::H3_Primitive, "H3-primitive", CoefficientRule::Unrestricted},
    {QLId::H3_Fcc, "H3-fcc", CoefficientRule::EvenSum},
    {QLId::H3_Bcc, "H3-bcc", CoefficientRule::AllIntegerOrAllHalf},
    {QLId::H4, "H4", CoefficientRule::H4Parity},
};

const QLInfo& info(QLId id) {
  for (const auto& i : kInfo) {
    if (i.id == id) return i;
  }
  throw DomainError("unknown quasilattice id");
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

bool is_half_integer(const Rational& r) { return denominator(r) == 2; }

// Icosahedral vertices {1, +-tau, 0} and their cyclic permutations.
std::vector<ExactVector> icosahedral_basis() {
  const QuadraticNumber o = golden(0), one = golden(1), t = tau();
  return {ExactVector{one, t, o},  ExactVector{one, -t, o}, ExactVector{o, one, t},
          ExactVector{o, one, -t}, ExactVector{t, o, one},  ExactVector{-t, o, one}};
}

std::vector<ExactVector> h4_half_basis() {
  std::vector<ExactVector> out;
  for (const QuadraticNumber& s : {golden(1, 0, 2), golden(0, 1, 2)}) {
    for (std::size_t i = 0; i < 4; ++i) {
      ExactVector v(kGolden, 4);
      v[i] = s;
      out.push_back(v);
    }
  }
  return out;
}

// Powers 1, zeta, zeta^2, zeta^3 of the n-th root of unity in the I2 frame.
std::vector<ExactVector> cyclotomic_basis(int n) {
  const RootSystemId sys = RootSystemId::i2(n);
  const Frame fr = frame(sys);
  ExactVector zeta;
  switch (n) {
    case 5: zeta = ExactVector{golden(-1, 1, 2), golden(1)}; break;  // zeta_10^2 = (cos 72, 1)
    case 8: zeta = ExactVector{QuadraticNumber::from_sqrt_form(2, 0, 1, 2), QuadraticNumber::from_sqrt_form(2, 0, 1, 2)}; break;
    case 12: zeta = ExactVector{QuadraticNumber::from_sqrt_form(3, 0, 1, 2), QuadraticNumber(3, 1, 0, 2)}; break;
    default: throw UnsupportedError("no quadratic cyclotomic basis for n = " + std::to_string(n));
  }
  const QuadraticNumber& m = fr.metric[1];
  std::vector<ExactVector> out;
  ExactVector z{QuadraticNumber(fr.kappa, 1), QuadraticNumber(fr.kappa)};
  for (int k = 0; k < 4; ++k) {
    out.push_back(z);
    z = ExactVector{z[0] * zeta[0] - m * z[1] * zeta[1], z[0] * zeta[1] + z[1] * zeta[0]};
  }
  return out;
}

std::vector<RationalVector> expand_all(const std::vector<ExactVector>& vs) {
  std::vector<RationalVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.expand());
  return out;
}

}  // namespace

const std::vector<QLId>& all_ql_ids() {
  static const std::vector<QLId> ids = {QLId::I2_5,  QLId::I2_8,   QLId::I2_12, QLId::H3_Primitive,
                                        QLId::H3_Fcc, QLId::H3_Bcc, QLId::H4};
  return ids;
}

std::string to_string(QLId id) { return info(id).name; }

QLId parse_ql_id(std::string_view text) {
  const std::string s = lower(text);
  if (s == "i2-5" || s == "i2-10" || s == "i2(5)" || s == "i2(10)") return QLId::I2_5;
  if (s == "i2-8" || s == "i2(8)") return QLId::I2_8;
  if (s == "i2-12" || s == "i2(12)") return QLId::I2_12;
  if (s == "h3-primitive" || s == "h3-1" || s == "h3^1") return QLId::H3_Primitive;
  if (s == "h3-fcc" || s == "h3-2" || s == "h3^2") return QLId::H3_Fcc;
  if (s == "h3-bcc" || s == "h3-3" || s == "h3^3") return QLId::H3_Bcc;
  if (s == "h4") return QLId::H4;
  throw ParseError("unknown quasilattice '" + std::string(text) +
                   "' (expected I2-5, I2-8, I2-12, H3-primitive, H3-fcc, H3-bcc or H4)");
}

RootSystemId root_system_of(QLId id) {
  switch (id) {
    case QLId::I2_5: return RootSystemId::i2(5);
    case QLId::I2_8: return RootSystemId::i2(8);
    case QLId::I2_12: return RootSystemId::i2(12);
    case QLId::H4: return RootSystemId::h4();
    default: return RootSystemId::h3();
  }
}

std::string to_string(CoefficientRule rule) {
  switch (rule) {
    case CoefficientRule::Unrestricted: return "unrestricted";
    case CoefficientRule::EvenSum: return "even-sum";
    case CoefficientRule::AllIntegerOrAllHalf: return "all-int-or-all-half";
    case CoefficientRule::H4Parity: return "h4-parity";
  }
  return "?";
}

std::vector<RationalVector> span_basis(const std::vector<ExactVector>& generators) {
  return lattice_basis(expand_all(generators));
}

QLModule ql(QLId id) {
  QLModule m;
  m.id_ = id;
  m.system_ = root_system_of(id);
  m.frame_ = frame(m.system_);
  m.rule_ = info(id).rule;
  switch (id) {
    case QLId::I2_5: m.basis_ = cyclotomic_basis(5); break;
    case QLId::I2_8: m.basis_ = cyclotomic_basis(8); break;
    case QLId::I2_12: m.basis_ = cyclotomic_basis(12); break;
    case QLId::H4: m.basis_ = h4_half_basis(); break;
    default: m.basis_ = icosahedral_basis(); break;
  }

  const RationalMatrix basis_matrix = RationalMatrix::from_columns(expand_all(m.basis_));
  if (basis_matrix.rank() != m.rank()) throw Error("published basis is not integrally independent");
  m.basis_inverse_ = basis_matrix.inverse();

  // Generators of the module implied by the coefficient rule.
  std::vector<ExactVector> gens;
  const auto& b = m.basis_;
  switch (m.rule_) {
    case CoefficientRule::Unrestricted:
      gens = b;
      break;
    case CoefficientRule::EvenSum:
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j) {
          gens.push_back(b[i] + b[j]);
          gens.push_back(b[i] - b[j]);
        }
      break;
    case CoefficientRule::AllIntegerOrAllHalf: {
      gens = b;
      ExactVector half_sum(m.kappa(), m.dim());
      for (const auto& v : b) half_sum += v;
      gens.push_back(half_sum * QuadraticNumber(m.kappa(), 1, 0, 2));
      break;
    }
    case CoefficientRule::H4Parity:
      for (const auto& v : b) gens.push_back(v * golden(2));
      for (const auto& r : enumerate_h4_residues()) gens.push_back(residue_vector(r));
      break;
  }
  for (const auto& row : span_basis(gens)) m.lattice_basis_.push_back(ExactVector::collapse(m.kappa(), row));
  if (m.lattice_basis_.size() != m.rank()) throw Error("module generators have the wrong rank");
  m.lattice_inverse_ = RationalMatrix::from_columns(expand_all(m.lattice_basis_)).inverse();
  return m;
}

void QLModule::check_vector(const ExactVector& v) const {
  if (v.dim() != dim()) {
    throw DomainError(to_string(id_) + " expects " + std::to_string(dim()) + "D vectors, got " +
                      std::to_string(v.dim()) + "D");
  }
  if (v.kappa() != kappa()) {
    throw DomainError(to_string(id_) + " lives in Q(sqrt " + std::to_string(kappa()) +
                      "), vector is over Q(sqrt " + std::to_string(v.kappa()) + ")");
  }
}

Membership QLModule::membership(const ExactVector& v) const {
  check_vector(v);
  Membership out;
  if (rule_ == CoefficientRule::H4Parity) {
    std::array<Integer, 4> mm, nn;
    for (std::size_t i = 0; i < 4; ++i) {
      const QuadraticNumber& c = v[i];
      if (c.den() != 1 && c.den() != 2) {
        out.reason = "form: coordinate " + std::to_string(i) + " is outside (1/2)Z[tau]";
        return out;
      }
      const Integer f = 2 / c.den();
      mm[i] = c.p() * f;
      nn[i] = c.q() * f;
    }
    for (std::size_t i = 0; i < 4; ++i) out.coefficients.push_back(Rational(mm[i]));
    for (std::size_t i = 0; i < 4; ++i) out.coefficients.push_back(Rational(nn[i]));
    if (!satisfies_h4_parity(mm, nn)) {
      out.reason = "parity: (m, n) mod 2 is not an allowed residue";
      return out;
    }
    out.member = true;
    return out;
  }

  out.coefficients = basis_inverse_ * v.expand();
  const auto& c = out.coefficients;
  switch (rule_) {
    case CoefficientRule::Unrestricted:
      if (!all_integers(c)) out.reason = "coefficients are not all integers";
      break;
    case CoefficientRule::EvenSum: {
      if (!all_integers(c)) {
        out.reason = "coefficients are not all integers";
        break;
      }
      Integer sum = 0;
      for (const auto& x : c) sum += numerator(x);
      if (sum % 2 != 0) out.reason = "coefficient sum is odd";
      break;
    }
    case CoefficientRule::AllIntegerOrAllHalf: {
      const bool ints = all_integers(c);
      const bool halves = std::all_of(c.begin(), c.end(), is_half_integer);
      if (!ints && !halves) out.reason = "coefficients are neither all integers nor all half-integers";
      break;
    }
    case CoefficientRule::H4Parity:
      break;
  }
  out.member = out.reason.empty();
  return out;
}

std::optional<IntegerVector> QLModule::lattice_coordinates(const ExactVector& v) const {
  check_vector(v);
  const RationalVector c = lattice_inverse_ * v.expand();
  if (!all_integers(c)) return std::nullopt;
  IntegerVector out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(numerator(x));
  return out;
}

ExactVector QLModule::from_lattice_coordinates(const std::vector<long long>& c) const {
  if (c.size() != rank()) throw DomainError("lattice coordinate vector has wrong length");
  ExactVector v(kappa(), dim());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) v += lattice_basis_[i] * QuadraticNumber(kappa(), c[i]);
  }
  return v;
}

ExactVector QLModule::sample(std::mt19937_64& rng, int box) const {
  std::uniform_int_distribution<long long> dist(-box, box);
  std::vector<long long> c(rank());
  for (auto& x : c) x = dist(rng);
  return from_lattice_coordinates(c);
}

std::vector<FloatVector> QLModule::float_lattice_basis() const {
  std::vector<FloatVector> out;
  for (const auto& v : lattice_basis_) out.push_back(frame_.embed(v));
  return out;
}

// --- H4 residues ---------------------------------------------------------------

bool satisfies_h4_parity(const std::array<Integer, 4>& m, const std::array<Integer, 4>& n) {
  auto even = [](const Integer& x) { return x % 2 == 0; };
  for (const auto& p : even_permutations4()) {
    const int a = p[0], b = p[1], c = p[2], d = p[3];
    if (!even(m[a] + m[b] + m[c] + m[d])) return false;
    if (!even(n[a] + n[b] + n[c] + n[d])) return false;
    if (!even(m[a] + n[a] + m[b] + n[c])) return false;
  }
  return true;
}

bool is_allowed_residue(const H4Residue& r) {
  std::array<Integer, 4> m, n;
  for (std::size_t i = 0; i < 4; ++i) {
    m[i] = r.m[i];
    n[i] = r.n[i];
  }
  return satisfies_h4_parity(m, n);
}

std::vector<H4Residue> enumerate_h4_residues() {
  std::vector<H4Residue> out;
  for (unsigned bits = 0; bits < 256; ++bits) {
    H4Residue r;
    for (std::size_t i = 0; i < 4; ++i) {
      r.m[i] = (bits >> i) & 1;
      r.n[i] = (bits >> (4 + i)) & 1;
    }
    if (is_allowed_residue(r)) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<H4Residue> residue_of(const ExactVector& v) {
  if (v.dim() != 4 || v.kappa() != kGolden) throw DomainError("H4 residues need 4D golden vectors");
  H4Residue r;
  for (std::size_t i = 0; i < 4; ++i) {
    const QuadraticNumber& c = v[i];
    if (c.den() != 1 && c.den() != 2) return std::nullopt;
    const Integer f = 2 / c.den();
    const Integer m = c.p() * f, n = c.q() * f;
    r.m[i] = static_cast<int>(((m % 2) + 2) % 2);
    r.n[i] = static_cast<int>(((n % 2) + 2) % 2);
  }
  return r;
}

ExactVector residue_vector(const H4Residue& r) {
  ExactVector v(kGolden, 4);
  for (std::size_t i = 0; i < 4; ++i) v[i] = golden(r.m[i], r.n[i], 2);
  return v;
}

std::optional<GoldenMultipleWitness> golden_multiple_of_root(const H4Residue& r) {
  if (!is_allowed_residue(r)) throw DomainError("residue does not satisfy the H4 parity constraints");
  static const std::vector<ExactVector> h4_roots = roots(RootSystemId::h4());
  // Golden integers mod 2 are represented by a + b tau with a, b in {0, 1}.
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) {
      const QuadraticNumber g = golden(a, b);
      for (const auto& root : h4_roots) {
        if (residue_of(root * g) == r) return GoldenMultipleWitness{g, root};
      }
    }
  return std::nullopt;
}

bool residue_is_golden_multiple_of_root(const H4Residue& r) {
  return golden_multiple_of_root(r).has_value();
}

// --- Scale invariance -----------------------------------------------------------

std::string to_string(ScaleVerdict v) {
  switch (v) {
    case ScaleVerdict::Invariant: return "invariant";
    case ScaleVerdict::ProperSublattice: return "proper-sublattice";
    case ScaleVerdict::NotClosed: return "not-closed";
  }
  return "?";
}

ScaleClassification scale_classification(const QLModule& ql, const QuadraticNumber& factor,
                                         long long power) {
  if (factor.kappa() != ql.kappa()) {
    throw DomainError("scale factor lives in Q(sqrt " + std::to_string(factor.kappa()) + ") but " +
                      to_string(ql.id()) + " lives in Q(sqrt " + std::to_string(ql.kappa()) + ")");
  }
  if (!factor.is_unit()) throw DomainError("scale factor must be a unit of the ring of integers");
  const QuadraticNumber eta = factor.pow(power);
  const std::size_t r = ql.rank();
  RationalMatrix lattice = RationalMatrix::from_columns(expand_all(ql.lattice_basis()));
  const RationalMatrix inv = lattice.inverse();
  std::vector<RationalVector> images;
  for (const auto& b : ql.lattice_basis()) images.push_back(inv * (b * eta).expand());
  ScaleClassification out;
  out.action = RationalMatrix::from_columns(images);
  if (!out.action.is_integral()) {
    out.verdict = ScaleVerdict::NotClosed;
    return out;
  }
  const Rational det = out.action.determinant();
  out.index = abs(numerator(det));
  out.verdict = out.index == 1 ? ScaleVerdict::Invariant : ScaleVerdict::ProperSublattice;
  (void)r;
  return out;
}

std::size_t Table1Report::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Table1Row& r) { return r.pass; }));
}

Table1Report verify_table1() {
  struct Expected {
    QLId id;
    int kappa;
    QuadraticNumber factor;
    int power;
  };
  const std::vector<Expected> table = {
      {QLId::I2_5, 5, tau(), 1},
      {QLId::I2_8, 2, QuadraticNumber::from_sqrt_form(2, 1, 1, 1), 1},
      {QLId::I2_12, 3, QuadraticNumber::from_sqrt_form(3, 2, 1, 1), 1},
      {QLId::H3_Primitive, 5, tau().pow(3), 3},
      {QLId::H3_Fcc, 5, tau(), 1},
      {QLId::H3_Bcc, 5, tau(), 1},
      {QLId::H4, 5, tau(), 1},
  };
  constexpr int kMaxPower = 12;
  Table1Report report;
  for (const auto& e : table) {
    const QLModule m = ql(e.id);
    Table1Row row{e.id, e.kappa, fundamental_unit(e.kappa).unit, e.factor, e.power,
                  QuadraticNumber(e.kappa), 0, false, false};
    for (int k = 1; k <= kMaxPower; ++k) {
      if (scale_classification(m, row.fundamental_unit, k).verdict == ScaleVerdict::Invariant) {
        row.minimal_power = k;
        row.derived_factor = row.fundamental_unit.pow(k);
        break;
      }
    }
    row.negation_invariant =
        scale_classification(m, QuadraticNumber(e.kappa, -1), 1).verdict == ScaleVerdict::Invariant;
    row.pass = row.minimal_power == e.power && row.derived_factor == e.factor && row.negation_invariant;
    report.rows.push_back(std::move(row));
  }
  return report;
}

// --- Root containment ---------------------------------------------------------------

RootCopyWitness contains_root_copy(const QLModule& ql) {
  const auto rs = roots(ql.system());
  const Frame& fr = ql.frame();
  auto copy_inside = [&](const QuadraticNumber& c) {
    return std::all_of(rs.begin(), rs.end(), [&](const ExactVector& s) { return ql.contains(s * c); });
  };
  std::vector<ExactVector> members = ql.basis();
  for (const auto& v : ql.lattice_basis()) members.push_back(v);
  const QuadraticNumber two(ql.kappa(), 2);
  for (const auto& m : members) {
    if (!ql.contains(m)) continue;
    for (const auto& r : rs) {
      const QuadraticNumber c = (two * fr.inner(m, r) / fr.norm2(r)).abs();
      if (c.is_zero()) continue;
      // m - reflect(m, r) == c r is a member by invariance and closure.
      if (!ql.contains(m - reflect(m, r, fr))) continue;
      if (!copy_inside(c)) continue;
      RootCopyWitness w{true, c, m, r};
      while (copy_inside(w.scale / two)) w.scale = w.scale / two;
      return w;
    }
  }
  return {};
}

double min_nonzero_norm(const QLModule& ql, int box) {
  const auto basis = ql.float_lattice_basis();
  const std::size_t d = ql.dim();
  double best = std::numeric_limits<double>::infinity();
  // Coordinates are fixed from the last one down, with running partial sums.
  // v and -v have the same norm, so the highest nonzero coordinate is kept
  // positive.
  std::function<void(std::size_t, const std::array<double, 4>&, bool)> walk =
      [&](std::size_t level, const std::array<double, 4>& acc, bool all_zero) {
        const auto& b = basis[level];
        const long long lo = all_zero ? 0 : -box;
        std::array<double, 4> cur = acc;
        for (std::size_t k = 0; k < d; ++k) cur[k] += static_cast<double>(lo) * b[k];
        for (long long c = lo; c <= box; ++c) {
          const bool zero = all_zero && c == 0;
          if (level == 0) {
            if (!zero) {
              double n2 = 0;
              for (std::size_t k = 0; k < d; ++k) n2 += cur[k] * cur[k];
              if (n2 < best) best = n2;
            }
          } else {
            walk(level - 1, cur, zero);
          }
          for (std::size_t k = 0; k < d; ++k) cur[k] += b[k];
        }
      };
  if (!basis.empty() && box > 0) walk(basis.size() - 1, {}, true);
  return std::sqrt(best);
}

namespace {

// Smallest nonzero squared norm of sum_i c_i b_i with every c_i drawn from
// `values`; when `even_sum`, only integer c with even sum count.
double min_norm_over_box(const std::vector<FloatVector>& basis, std::size_t d,
                         const std::vector<double>& values, bool even_sum) {
  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, const std::array<double, 4>&, bool, long long)> walk =
      [&](std::size_t level, const std::array<double, 4>& acc, bool all_zero, long long sum) {
        const auto& b = basis[level];
        for (double c : values) {
          // v and -v have the same norm: keep the highest nonzero coefficient positive.
          if (all_zero && c < 0) continue;
          std::array<double, 4> cur = acc;
          for (std::size_t k = 0; k < d; ++k) cur[k] += c * b[k];
          const bool zero = all_zero && c == 0;
          const long long s = sum + static_cast<long long>(std::llround(c));
          if (level == 0) {
            if (zero || (even_sum && s % 2 != 0)) continue;
            double n2 = 0;
            for (std::size_t k = 0; k < d; ++k) n2 += cur[k] * cur[k];
            best = std::min(best, n2);
          } else {
            walk(level - 1, cur, zero, s);
          }
        }
      };
  walk(basis.size() - 1, {}, true, 0);
  return best;
}

// H4 coordinates decouple per axis: |v|^2 = sum_i ((m_i + n_i tau) / 2)^2.
double h4_min_norm(int box) {
  struct Pair {
    double value;
    int m, n;
  };
  std::vector<Pair> pairs;
  const double t = (1 + std::sqrt(5.0)) / 2;
  for (int m = -box; m <= box; ++m)
    for (int n = -box; n <= box; ++n) {
      const double x = (m + n * t) / 2;
      pairs.push_back({x * x, m, n});
    }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.value < b.value; });
  double best = std::numeric_limits<double>::infinity();
  std::array<Integer, 4> mm, nn;
  std::function<void(std::size_t, double, bool)> walk = [&](std::size_t axis, double partial, bool all_zero) {
    for (const auto& p : pairs) {
      if (partial + p.value >= best) break;
      mm[axis] = p.m;
      nn[axis] = p.n;
      const bool zero = all_zero && p.m == 0 && p.n == 0;
      if (axis == 3) {
        if (!zero && satisfies_h4_parity(mm, nn)) best = partial + p.value;
      } else {
        walk(axis + 1, partial + p.value, zero);
      }
    }
  };
  walk(0, 0.0, true);
  return best;
}

}  // namespace

double min_pairwise_distance(const QLModule& ql, int box) {
  if (box < 1) throw DomainError("coefficient box must be at least 1");
  const int wide = 2 * box;
  if (ql.rule() == CoefficientRule::H4Parity) return std::sqrt(h4_min_norm(wide));
  std::vector<FloatVector> basis;
  for (const auto& b : ql.basis()) basis.push_back(ql.frame().embed(b));
  std::vector<double> ints;
  for (int c = -wide; c <= wide; ++c) ints.push_back(c);
  double best = min_norm_over_box(basis, ql.dim(), ints, ql.rule() == CoefficientRule::EvenSum);
  if (ql.rule() == CoefficientRule::AllIntegerOrAllHalf) {
    std::vector<double> halves;
    for (int c = -wide; c < wide; ++c) halves.push_back(c + 0.5);
    best = std::min(best, min_norm_over_box(basis, ql.dim(), halves, false));
  }
  return std::sqrt(best);
}

}  // namespace qlat
