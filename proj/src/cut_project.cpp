#include "qlat/cut_project.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <unordered_set>

#include "qlat/error.hpp"
#include "qlat/parallel.hpp"

namespace qlat {

namespace {

using FloatMatrix = std::vector<std::vector<double>>;

QuadraticNumber det_small(const std::vector<std::vector<QuadraticNumber>>& m, int kappa) {
  const std::size_t n = m.size();
  if (n == 0) return QuadraticNumber(kappa, 1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  QuadraticNumber s(kappa);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<QuadraticNumber>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QuadraticNumber> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const QuadraticNumber term = m[0][c] * det_small(minor, kappa);
    if (c % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

// Normal of the hyperplane spanned by d-1 vectors in dimension d.
ExactVector generalized_cross(const std::vector<ExactVector>& vs, std::size_t d, int kappa) {
  ExactVector n(kappa, d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::vector<QuadraticNumber>> m;
    for (const auto& v : vs) {
      std::vector<QuadraticNumber> row;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) row.push_back(v[j]);
      }
      m.push_back(std::move(row));
    }
    n[i] = det_small(m, kappa);
    if (i % 2 == 1) n[i] = -n[i];
  }
  return n;
}

// Scale so that the first nonzero coordinate is 1.
ExactVector canonical_direction(const ExactVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v[i].is_zero()) return v * v[i].inverse();
  }
  return v;
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double dot(const FloatVector& a, const FloatVector& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

FloatVector embed(const ExactVector& v) {
  FloatVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i].to_double();
  return out;
}

// Zonotope facets of the cell-image window.
struct WindowGeometry {
  std::vector<ExactVector> normals;
  std::vector<QuadraticNumber> support;  // half-width along each normal at scale 1
  std::vector<FloatVector> float_normals;
  std::vector<double> float_support;
  double circumradius = 0;  // at scale 1
};

WindowGeometry window_geometry(const Embedding& emb) {
  WindowGeometry g;
  const auto& gens = emb.perpendicular_columns;
  const std::size_t d = emb.dim;
  const int kappa = gens.front().kappa();
  std::set<ExactVector> seen;
  combinations(gens.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<ExactVector> vs;
    for (auto i : idx) vs.push_back(gens[i]);
    ExactVector n = generalized_cross(vs, d, kappa);
    if (n.is_zero()) return;
    n = canonical_direction(n);
    if (!seen.insert(n).second) return;
    QuadraticNumber h(kappa);
    for (const auto& gk : gens) h += qlat::dot(n, gk).abs();
    h *= Rational(1, 2);
    g.normals.push_back(n);
    g.support.push_back(h);
    g.float_normals.push_back(embed(n));
    g.float_support.push_back(h.to_double());
  });
  for (const auto& gk : gens) g.circumradius += 0.5 * float_norm(embed(gk));
  return g;
}

bool in_window_exact(const WindowGeometry& g, const Window& w, const ExactVector& y) {
  const int kappa = y.kappa();
  const Rational s(w.scale);
  if (w.shape == WindowShape::Ball) {
    return (qlat::dot(y, y) - QuadraticNumber::from_rational(kappa, s * s)).sign() <= 0;
  }
  for (std::size_t f = 0; f < g.normals.size(); ++f) {
    const QuadraticNumber t = qlat::dot(g.normals[f], y);
    const QuadraticNumber h = g.support[f] * s;
    if ((t - h).sign() >= 0) return false;
    if ((t + h).sign() < 0) return false;
  }
  return true;
}

// -1 outside, +1 inside, 0 undecided by floats.
int in_window_float(const WindowGeometry& g, const Window& w, const FloatVector& y) {
  if (w.shape == WindowShape::Ball) {
    const double r2 = dot(y, y), s2 = w.scale * w.scale;
    const double tol = 1e-9 * (1 + s2);
    if (r2 < s2 - tol) return 1;
    if (r2 > s2 + tol) return -1;
    return 0;
  }
  int result = 1;
  for (std::size_t f = 0; f < g.float_normals.size(); ++f) {
    const double t = dot(g.float_normals[f], y);
    const double h = g.float_support[f] * w.scale;
    const double tol = 1e-9 * (1 + std::abs(h));
    if (t > h + tol || t < -h - tol) return -1;
    if (t > h - tol || t < -h + tol) result = 0;
  }
  return result;
}

FloatMatrix float_inverse(FloatMatrix m) {
  const std::size_t n = m.size();
  FloatMatrix inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (std::abs(m[piv][c]) < 1e-300) throw DomainError("singular float matrix");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    const double p = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const double f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Rows: parallel coordinates then perpendicular coordinates; columns: ambient axes.
FloatMatrix stacked_map(const Embedding& emb) {
  const std::size_t n = emb.source_rank, d = emb.dim;
  FloatMatrix m(2 * d, std::vector<double>(n));
  for (std::size_t c = 0; c < n; ++c) {
    const FloatVector par = embed(emb.parallel_columns[c]);
    const FloatVector perp = embed(emb.perpendicular_columns[c]);
    for (std::size_t r = 0; r < d; ++r) {
      m[r][c] = par[r];
      m[d + r][c] = perp[r];
    }
  }
  return m;
}

RationalVector ambient_from_basis(const std::vector<RationalVector>& basis,
                                  const std::vector<long long>& k) {
  RationalVector s(basis.front().size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += basis[j][i] * k[j];
  }
  return s;
}

std::vector<RationalVector> unit_vectors(std::size_t n) {
  std::vector<RationalVector> out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace

ExactVector Embedding::parallel(const RationalVector& x) const {
  if (x.size() != source_rank) throw DomainError("source vector has wrong length");
  ExactVector v(parallel_columns.front().kappa(), dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) v += parallel_columns[i] * QuadraticNumber::from_rational(v.kappa(), x[i]);
  }
  return v;
}

ExactVector Embedding::perpendicular(const RationalVector& x) const {
  if (x.size() != source_rank) throw DomainError("source vector has wrong length");
  ExactVector v(perpendicular_columns.front().kappa(), dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) v += perpendicular_columns[i] * QuadraticNumber::from_rational(v.kappa(), x[i]);
  }
  return v;
}

Embedding embedding(QLId target) {
  if (target == QLId::I2_5 || target == QLId::I2_8 || target == QLId::I2_12) {
    throw UnsupportedError("cut-and-project embeddings are provided for the 3D and 4D modules only");
  }
  const QLModule m = ql(target);
  Embedding e;
  e.target = target;
  e.dim = m.dim();
  e.source_rank = m.rank();
  e.parallel_columns = m.basis();
  for (const auto& c : e.parallel_columns) e.perpendicular_columns.push_back(c.conjugate());
  const std::size_t n = e.source_rank;
  switch (target) {
    case QLId::H3_Primitive:
      e.source_name = "Z^6 (primitive cubic)";
      e.source_basis = unit_vectors(n);
      break;
    case QLId::H3_Fcc: {
      e.source_name = "D6 (fcc)";
      std::vector<RationalVector> gens;
      const auto units = unit_vectors(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          RationalVector a = units[i], b = units[i];
          a[j] += 1;
          b[j] -= 1;
          gens.push_back(a);
          gens.push_back(b);
        }
      e.source_basis = lattice_basis(gens);
      break;
    }
    case QLId::H3_Bcc: {
      e.source_name = "Z^6 + (1/2)^6 (bcc)";
      std::vector<RationalVector> gens = unit_vectors(n);
      gens.push_back(RationalVector(n, Rational(1, 2)));
      e.source_basis = lattice_basis(gens);
      break;
    }
    case QLId::H4:
      e.source_name = "E8 (icosian coefficient lattice)";
      for (const auto& b : m.lattice_basis()) e.source_basis.push_back(m.membership(b).coefficients);
      break;
    default:
      break;
  }
  return e;
}

std::string to_string(WindowShape s) { return s == WindowShape::Ball ? "ball" : "cell"; }

WindowShape parse_window_shape(const std::string& text) {
  if (text == "cell" || text == "cell-image") return WindowShape::CellImage;
  if (text == "ball") return WindowShape::Ball;
  throw ParseError("unknown window shape '" + text + "' (expected cell or ball)");
}

bool in_window(const Embedding& emb, const Window& window, const ExactVector& perp) {
  if (!(window.scale > 0)) throw DomainError("window scale must be positive");
  return in_window_exact(window_geometry(emb), window, perp);
}

std::vector<std::vector<long long>> enumerate_short_vectors(const FloatMatrix& gram, double bound) {
  const std::size_t n = gram.size();
  // q holds the Cholesky-style quadratic form decomposition:
  // x^T G x = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
  FloatMatrix q = gram;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw DomainError("Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  const double limit = bound * (1 + 1e-9) + 1e-9;
  std::vector<std::vector<long long>> out;
  std::vector<long long> x(n, 0);
  std::function<void(std::size_t, double)> recurse = [&](std::size_t level, double remaining) {
    const std::size_t i = level - 1;
    double center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<double>(x[j]);
    const double width = std::sqrt(std::max(0.0, remaining / q[i][i]));
    const long long lo = static_cast<long long>(std::ceil(center - width - 1e-9));
    const long long hi = static_cast<long long>(std::floor(center + width + 1e-9));
    for (long long v = lo; v <= hi; ++v) {
      const double diff = static_cast<double>(v) - center;
      const double rest = remaining - q[i][i] * diff * diff;
      if (rest < -1e-9 * (1 + limit)) continue;
      x[i] = v;
      if (i == 0) {
        out.push_back(x);
      } else {
        recurse(i, rest);
      }
    }
    x[i] = 0;
  };
  if (n > 0) recurse(n, limit);
  return out;
}

Patch generate_patch(const Embedding& emb, const Window& window, double radius) {
  if (!(window.scale > 0)) throw DomainError("window scale must be positive");
  if (!(radius > 0)) throw DomainError("patch radius must be positive");
  const std::size_t n = emb.source_rank, d = emb.dim;
  const int kappa = emb.parallel_columns.front().kappa();
  const WindowGeometry geom = window_geometry(emb);
  const FloatMatrix m = stacked_map(emb);

  // Columns of A = M S: full images of the source basis vectors.
  FloatMatrix a(2 * d, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < 2 * d; ++r)
      for (std::size_t k = 0; k < n; ++k) a[r][j] += m[r][k] * emb.source_basis[j][k].convert_to<double>();
  FloatMatrix gram(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < 2 * d; ++r) gram[i][j] += a[r][i] * a[r][j];

  const double wmax = window.shape == WindowShape::Ball ? window.scale : window.scale * geom.circumradius;
  const double bound = radius * radius + wmax * wmax;
  const Rational radius_exact(radius);
  const QuadraticNumber r2 = QuadraticNumber::from_rational(kappa, radius_exact * radius_exact);

  Patch patch;
  patch.target = emb.target;
  patch.window = window;
  patch.radius = radius;
  for (const auto& k : enumerate_short_vectors(gram, bound)) {
    FloatVector par(d, 0.0), perp(d, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (k[j] == 0) continue;
      for (std::size_t r = 0; r < d; ++r) {
        par[r] += a[r][j] * static_cast<double>(k[j]);
        perp[r] += a[d + r][j] * static_cast<double>(k[j]);
      }
    }
    const double p2 = dot(par, par);
    const double tol = 1e-9 * (1 + radius * radius);
    if (p2 > radius * radius + tol) continue;
    const int win = in_window_float(geom, window, perp);
    if (win < 0) continue;

    RationalVector source = ambient_from_basis(emb.source_basis, k);
    ExactVector x = emb.parallel(source);
    if (p2 > radius * radius - tol && (qlat::dot(x, x) - r2).sign() > 0) continue;
    if (win == 0 && !in_window_exact(geom, window, emb.perpendicular(source))) continue;
    patch.points.push_back({std::move(x), par, std::move(source)});
  }
  return patch;
}

ReciprocalPoint reciprocal_point(const Embedding& emb, const std::vector<long long>& dual_coords) {
  const std::size_t n = emb.source_rank, d = emb.dim;
  if (dual_coords.size() != n) throw DomainError("dual coordinate vector has wrong length");
  // Dual basis in ambient coordinates: columns of S^{-T}.
  const RationalMatrix s = RationalMatrix::from_columns(emb.source_basis);
  const RationalMatrix dual = s.inverse().transpose();
  RationalVector coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = dual_coords[i];
  const RationalVector amb = dual * coords;

  const FloatMatrix minv = float_inverse(stacked_map(emb));
  // k = 2 pi M^{-T} amb
  FloatVector k(2 * d, 0.0);
  for (std::size_t r = 0; r < 2 * d; ++r)
    for (std::size_t c = 0; c < n; ++c) k[r] += minv[c][r] * amb[c].convert_to<double>();
  for (auto& x : k) x *= 2 * std::numbers::pi;
  return {FloatVector(k.begin(), k.begin() + static_cast<long>(d)),
          FloatVector(k.begin() + static_cast<long>(d), k.end())};
}

double structure_factor(const std::vector<FloatVector>& points, const FloatVector& k) {
  if (points.empty()) throw DomainError("structure factor of an empty point set");
  double re = 0, im = 0;
  for (const auto& x : points) {
    if (x.size() != k.size()) throw DomainError("k vector has wrong dimension");
    const double phase = dot(k, x);
    re += std::cos(phase);
    im += std::sin(phase);
  }
  const double n = static_cast<double>(points.size());
  return (re * re + im * im) / (n * n);
}

double structure_factor(const Patch& patch, const FloatVector& k) {
  std::vector<FloatVector> pts;
  pts.reserve(patch.points.size());
  for (const auto& p : patch.points) pts.push_back(p.position);
  return structure_factor(pts, k);
}

std::vector<double> structure_factors(const std::vector<FloatVector>& points,
                                      const std::vector<FloatVector>& ks) {
  std::vector<double> out(ks.size());
  parallel_for(ks.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = structure_factor(points, ks[i]);
  });
  return out;
}

// --- E8 -------------------------------------------------------------------------

std::vector<RationalVector> e8_roots() {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (int si : {-1, 1})
        for (int sj : {-1, 1}) {
          RationalVector v(8);
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    RationalVector v(8);
    for (std::size_t i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational icosian_e8_form(const ExactVector& a, const ExactVector& b) {
  static const QuadraticNumber mu = golden(4, 2, 5);
  return (mu * qlat::dot(a, b)).trace();
}

namespace {

using FormFn = std::function<Rational(const RationalVector&, const RationalVector&)>;

RationalVector reflect_rational(const RationalVector& x, const RationalVector& r, const FormFn& form) {
  const Rational c = 2 * form(x, r) / form(r, r);
  RationalVector out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= c * r[i];
  return out;
}

std::vector<RationalVector> simple_system(const std::vector<RationalVector>& rs, const FormFn& form) {
  static constexpr double kWeights[8] = {1.0,          0.5772156649, 0.3183098862, 0.1414213562,
                                         0.0271828183, 0.0086602540, 0.0017320508, 0.0003141593};
  auto height = [](const RationalVector& v) {
    double h = 0;
    for (std::size_t i = 0; i < v.size(); ++i) h += kWeights[i] * v[i].convert_to<double>();
    return h;
  };
  std::vector<RationalVector> positive;
  for (const auto& r : rs)
    if (height(r) > 0) positive.push_back(r);
  std::vector<RationalVector> simple;
  for (const auto& r : positive) {
    int flipped = 0;
    for (const auto& s : positive) {
      if (height(reflect_rational(s, r, form)) < 0 && ++flipped > 1) break;
    }
    if (flipped == 1) simple.push_back(r);
  }
  return simple;
}

}  // namespace

E8ProjectionReport project_e8() {
  E8ProjectionReport rep;
  const auto std_roots = e8_roots();
  rep.root_count = std_roots.size();
  for (const auto& r : std_roots) {
    if (denominator(r[0]) == 2) {
      ++rep.half_type;
    } else {
      ++rep.integer_type;
    }
  }

  const Embedding emb = embedding(QLId::H4);
  const std::size_t n = emb.source_rank;
  std::vector<ExactVector> basis_images;
  for (const auto& s : emb.source_basis) basis_images.push_back(emb.parallel(s));
  rep.source_gram = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rep.source_gram(i, j) = icosian_e8_form(basis_images[i], basis_images[j]);
  rep.gram_integral = rep.source_gram.is_integral();
  rep.gram_even = rep.gram_integral;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_integer(rep.source_gram(i, i)) || numerator(rep.source_gram(i, i)) % 2 != 0) rep.gram_even = false;
  }
  rep.gram_determinant = rep.source_gram.determinant();

  // Short vectors in lattice coordinates.
  FloatMatrix fgram(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fgram[i][j] = rep.source_gram(i, j).convert_to<double>();
  auto form_k = [&](const RationalVector& x, const RationalVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] != 0) s += x[i] * rep.source_gram(i, j) * y[j];
      }
    }
    return s;
  };
  std::vector<RationalVector> minimal;
  Rational min_norm = -1;
  for (const auto& k : enumerate_short_vectors(fgram, 2.0)) {
    RationalVector kr(k.begin(), k.end());
    const Rational v = form_k(kr, kr);
    if (v == 0) continue;
    if (min_norm < 0 || v < min_norm) {
      min_norm = v;
      minimal.clear();
    }
    if (v == min_norm) minimal.push_back(std::move(kr));
  }
  rep.min_norm = min_norm;
  rep.minimal_vectors = minimal.size();

  // Match simple systems: standard E8 (dot product) vs minimal icosians.
  const FormFn std_form = [](const RationalVector& x, const RationalVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  const auto std_simple = simple_system(std_roots, std_form);
  const auto ico_simple = simple_system(minimal, form_k);
  if (std_simple.size() != n || ico_simple.size() != n) return rep;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool matched = false;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = std_form(std_simple[i], std_simple[j]) == form_k(ico_simple[perm[i]], ico_simple[perm[j]]);
    if (ok) {
      matched = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!matched) return rep;

  std::vector<RationalVector> target_cols;
  for (std::size_t i = 0; i < n; ++i) target_cols.push_back(ico_simple[perm[i]]);
  const RationalMatrix to_lattice =
      RationalMatrix::from_columns(target_cols) * RationalMatrix::from_columns(std_simple).inverse();
  const RationalMatrix source = RationalMatrix::from_columns(emb.source_basis);
  rep.isometry = source * to_lattice;

  std::set<RationalVector> minimal_set(minimal.begin(), minimal.end());
  std::set<RationalVector> hit;
  bool all_minimal = true;
  const QuadraticNumber one = golden(1), inner = golden(2, -1);
  const auto h4 = roots(RootSystemId::h4());
  std::set<ExactVector> h4_set(h4.begin(), h4.end()), outer;
  for (const auto& r : std_roots) {
    const RationalVector k = to_lattice * r;
    if (!all_integers(k) || !minimal_set.count(k)) all_minimal = false;
    hit.insert(k);
    ExactVector x = emb.parallel(source * k);
    const QuadraticNumber len2 = qlat::dot(x, x);
    if (len2 == one) {
      ++rep.outer_shell;
      outer.insert(x);
    } else if (len2 == inner) {
      ++rep.inner_shell;
    }
    rep.images.push_back(std::move(x));
  }
  rep.isometry_bijective = all_minimal && hit.size() == std_roots.size() && minimal.size() == std_roots.size();
  rep.outer_shell_is_unit_icosians = outer == h4_set;
  return rep;
}

}  // namespace qlat
