#include "qlat/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <unordered_set>

#include "qlat/error.hpp"

namespace qlat {

namespace {

bool is_exact_dihedral(int n) { return n == 5 || n == 8 || n == 10 || n == 12; }

int dihedral_kappa(int n) {
  switch (n) {
    case 8: return 2;
    case 12: return 3;
    default: return kGolden;
  }
}

// Complex multiplication of (x1 + i*s*y1)(x2 + i*s*y2) in a frame whose second
// axis has squared length m = s^2.
ExactVector complex_mul(const ExactVector& a, const ExactVector& b, const QuadraticNumber& m) {
  return ExactVector{a[0] * b[0] - m * a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
}

// Primitive root of unity of the dihedral frame: zeta_10 for n in {5, 10}.
ExactVector dihedral_zeta(int n) {
  switch (n) {
    case 5:
    case 10:
      // (cos 36, sin 36 / sin 72) = (tau/2, tau - 1)
      return ExactVector{golden(0, 1, 2), golden(-1, 1)};
    case 8: {
      const QuadraticNumber c = QuadraticNumber::from_sqrt_form(2, 0, 1, 2);
      return ExactVector{c, c};
    }
    case 12:
      return ExactVector{QuadraticNumber::from_sqrt_form(3, 0, 1, 2), QuadraticNumber(3, 1, 0, 2)};
    default:
      throw UnsupportedError("no exact dihedral frame for n = " + std::to_string(n));
  }
}

// Exact dihedral roots in ring order: first ring, then second ring.
std::vector<std::vector<ExactVector>> dihedral_rings(int n) {
  const Frame fr = frame(RootSystemId::i2(n));
  const QuadraticNumber m = fr.metric[1];
  const ExactVector zeta = dihedral_zeta(n);
  const int order = (n == 5) ? 10 : n;  // the frame's root of unity order
  std::vector<ExactVector> powers;
  ExactVector z{QuadraticNumber(fr.kappa, 1), QuadraticNumber(fr.kappa)};
  for (int k = 0; k < order; ++k) {
    powers.push_back(z);
    z = complex_mul(z, zeta, m);
  }
  std::vector<std::vector<ExactVector>> rings;
  if (n % 2 == 1) {
    // n odd: the 2n-th roots of unity.
    rings.push_back(powers);
    return rings;
  }
  rings.push_back(powers);
  std::vector<ExactVector> second;
  for (int k = 0; k < order; ++k) second.push_back(powers[k] + powers[(k + 1) % order]);
  rings.push_back(std::move(second));
  return rings;
}

std::vector<ExactVector> signed_permutations(const std::vector<ExactVector>& bases,
                                             const std::vector<std::vector<int>>& perms) {
  std::set<ExactVector> out;
  for (const auto& base : bases) {
    const std::size_t d = base.dim();
    for (const auto& perm : perms) {
      ExactVector permuted(base.kappa(), d);
      for (std::size_t i = 0; i < d; ++i) permuted[i] = base[perm[i]];
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        ExactVector v = permuted;
        bool redundant = false;
        for (std::size_t i = 0; i < d; ++i) {
          if (!(mask & (1u << i))) continue;
          if (v[i].is_zero()) redundant = true;
          v[i] = -v[i];
        }
        if (!redundant) out.insert(std::move(v));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> cyclic_permutations3() { return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}; }

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

RootSystemId RootSystemId::i2(int n) {
  if (n < 5 || n == 6) {
    throw DomainError("I2(n) requires n >= 5 and n != 6 (crystallographic or degenerate), got n = " +
                      std::to_string(n));
  }
  return {Family::I2, n};
}

RootSystemId RootSystemId::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(c)));
  }
  if (s == "H3") return h3();
  if (s == "H4") return h4();
  if (s.size() > 2 && s.rfind("I2", 0) == 0) {
    std::string rest = s.substr(2);
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '_' || rest.front() == '(')) {
      rest.erase(rest.begin());
    }
    if (!rest.empty() && rest.back() == ')') rest.pop_back();
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return i2(std::stoi(rest));
    }
  }
  throw ParseError("unknown root system '" + std::string(text) + "' (expected H3, H4 or I2-<n>)");
}

int RootSystemId::rank() const {
  switch (family) {
    case Family::H3: return 3;
    case Family::H4: return 4;
    default: return 2;
  }
}

bool RootSystemId::is_quadratic() const { return family != Family::I2 || is_exact_dihedral(n); }

int RootSystemId::kappa() const {
  if (!is_quadratic()) throw UnsupportedError(name() + " has no exact quadratic coordinates");
  return family == Family::I2 ? dihedral_kappa(n) : kGolden;
}

std::string RootSystemId::name() const {
  switch (family) {
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    default: return "I2-" + std::to_string(n);
  }
}

Frame frame(const RootSystemId& id) {
  Frame f = Frame::euclidean(id.kappa(), static_cast<std::size_t>(id.rank()));
  if (id.family == Family::I2 && (id.n == 5 || id.n == 10)) {
    // second axis scaled by sin 72; sin^2 72 = (2 + tau) / 4
    f.metric[1] = golden(2, 1, 4);
    f.axis_scale[1] = std::sin(2.0 * std::numbers::pi / 5.0);
  }
  return f;
}

std::vector<std::vector<int>> even_permutations4() {
  const std::vector<std::vector<int>> generators = {{1, 2, 0, 3}, {0, 2, 3, 1}};
  std::vector<std::vector<int>> found = {{0, 1, 2, 3}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& g : generators) {
      auto next = compose(found[i], g);
      if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(std::move(next));
    }
  }
  return found;
}

std::vector<ExactVector> roots(const RootSystemId& id) {
  switch (id.family) {
    case Family::H3: {
      const std::vector<ExactVector> bases = {
          ExactVector{golden(1), golden(0), golden(0)},
          ExactVector{golden(0, 1, 2), golden(1, 0, 2), golden(-1, 1, 2)},
      };
      return signed_permutations(bases, cyclic_permutations3());
    }
    case Family::H4: {
      const std::vector<ExactVector> bases = {
          ExactVector{golden(1), golden(0), golden(0), golden(0)},
          ExactVector{golden(1, 0, 2), golden(1, 0, 2), golden(1, 0, 2), golden(1, 0, 2)},
          ExactVector{golden(0), golden(0, 1, 2), golden(1, 0, 2), golden(-1, 1, 2)},
      };
      return signed_permutations(bases, even_permutations4());
    }
    case Family::I2: {
      if (!is_exact_dihedral(id.n)) {
        throw UnsupportedError("I2-" + std::to_string(id.n) +
                               " has no exact coordinates over a quadratic field (exact I2-n needs n in 5, 8, 10, 12)");
      }
      std::vector<ExactVector> all;
      for (auto& ring : dihedral_rings(id.n))
        for (auto& r : ring) all.push_back(std::move(r));
      std::sort(all.begin(), all.end());
      return all;
    }
  }
  return {};
}

std::vector<int> dihedral_ring_index(const RootSystemId& id) {
  const auto rs = roots(id);
  std::vector<int> idx(rs.size(), 0);
  if (id.family != Family::I2 || id.n % 2 == 1) return idx;
  const Frame fr = frame(id);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    idx[i] = fr.norm2(rs[i]) == QuadraticNumber(fr.kappa, 1) ? 0 : 1;
  }
  return idx;
}

std::vector<FloatVector> float_roots(const RootSystemId& id) {
  if (id.family != Family::I2 || is_exact_dihedral(id.n)) {
    const Frame fr = frame(id);
    std::vector<FloatVector> out;
    for (const auto& r : roots(id)) out.push_back(fr.embed(r));
    return out;
  }
  const double pi = std::numbers::pi;
  std::vector<FloatVector> out;
  if (id.n % 2 == 1) {
    for (int k = 1; k <= 2 * id.n; ++k) {
      const double a = 2 * pi * k / (2 * id.n);
      out.push_back({std::cos(a), std::sin(a)});
    }
  } else {
    for (int k = 1; k <= id.n; ++k) {
      const double a = 2 * pi * k / id.n;
      out.push_back({std::cos(a), std::sin(a)});
    }
    for (int k = 1; k <= id.n; ++k) {
      const double a = 2 * pi * k / id.n;
      const double b = 2 * pi * (k + 1) / id.n;
      out.push_back({std::cos(a) + std::cos(b), std::sin(a) + std::sin(b)});
    }
  }
  return out;
}

std::vector<ExactVector> simple_roots(const RootSystemId& id) {
  // A generic functional; no root is orthogonal to it.
  static constexpr double kFunctional[4] = {1.0, 0.2718281828, 0.0314159265, 0.0057721566};
  const Frame fr = frame(id);
  const auto rs = roots(id);
  auto height = [&](const ExactVector& v) {
    const FloatVector x = fr.embed(v);
    double h = 0;
    for (std::size_t i = 0; i < x.size(); ++i) h += kFunctional[i] * x[i];
    return h;
  };
  std::vector<ExactVector> positive;
  for (const auto& r : rs) {
    if (height(r) > 0) positive.push_back(r);
  }
  // r is simple iff its reflection sends exactly one positive root (r itself)
  // to a negative root.
  std::vector<ExactVector> simple;
  for (const auto& r : positive) {
    int flipped = 0;
    for (const auto& s : positive) {
      if (height(reflect(s, r, fr)) < 0) ++flipped;
      if (flipped > 1) break;
    }
    if (flipped == 1) simple.push_back(r);
  }
  if (simple.size() != static_cast<std::size_t>(id.rank())) {
    throw Error("simple root extraction found " + std::to_string(simple.size()) + " roots for " +
                id.name());
  }
  return simple;
}

}  // namespace qlat
