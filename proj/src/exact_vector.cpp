#include "qlat/exact_vector.hpp"

#include <cmath>
#include <string>

#include <boost/functional/hash.hpp>

#include "qlat/error.hpp"

namespace qlat {

ExactVector::ExactVector(std::vector<QuadraticNumber> coords) : coords_(std::move(coords)) {
  if (!coords_.empty()) kappa_ = coords_.front().kappa();
  for (const auto& c : coords_) {
    if (c.kappa() != kappa_) throw DomainError("vector coordinates from different fields");
  }
}

void ExactVector::check(const ExactVector& o) const {
  if (dim() != o.dim()) {
    throw DomainError("dimension mismatch: " + std::to_string(dim()) + " vs " +
                      std::to_string(o.dim()));
  }
  if (kappa_ != o.kappa_) throw DomainError("vectors from different quadratic fields");
}

bool ExactVector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

ExactVector ExactVector::operator-() const {
  ExactVector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

ExactVector& ExactVector::operator+=(const ExactVector& o) {
  check(o);
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

ExactVector& ExactVector::operator-=(const ExactVector& o) {
  check(o);
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

ExactVector& ExactVector::operator*=(const QuadraticNumber& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::strong_ordering operator<=>(const ExactVector& a, const ExactVector& b) {
  a.check(b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto c = a.coords_[i] <=> b.coords_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<Rational> ExactVector::expand() const {
  std::vector<Rational> out;
  out.reserve(2 * dim());
  for (const auto& c : coords_) {
    out.push_back(c.rational_part());
    out.push_back(c.generator_part());
  }
  return out;
}

ExactVector ExactVector::collapse(int kappa, const std::vector<Rational>& expanded) {
  if (expanded.size() % 2 != 0) throw DomainError("expanded vector must have even length");
  std::vector<QuadraticNumber> coords;
  coords.reserve(expanded.size() / 2);
  for (std::size_t i = 0; i < expanded.size(); i += 2) {
    QuadraticNumber c = QuadraticNumber::from_rational(kappa, expanded[i]);
    c += QuadraticNumber::from_rational(kappa, expanded[i + 1]) * QuadraticNumber::generator(kappa);
    coords.push_back(std::move(c));
  }
  ExactVector v(std::move(coords));
  v.kappa_ = kappa;
  return v;
}

ExactVector ExactVector::conjugate() const {
  ExactVector r = *this;
  for (auto& c : r.coords_) c = c.conjugate();
  return r;
}

std::size_t ExactVector::hash() const {
  std::size_t seed = coords_.size();
  for (const auto& c : coords_) boost::hash_combine(seed, c.hash());
  return seed;
}

QuadraticNumber dot(const ExactVector& a, const ExactVector& b) {
  if (a.dim() != b.dim()) throw DomainError("dimension mismatch in dot product");
  QuadraticNumber s(a.kappa());
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Frame Frame::euclidean(int kappa, std::size_t dim) {
  Frame f;
  f.kappa = kappa;
  f.metric.assign(dim, QuadraticNumber(kappa, 1));
  f.axis_scale.assign(dim, 1.0);
  return f;
}

bool Frame::is_euclidean() const {
  for (const auto& m : metric) {
    if (m != QuadraticNumber(kappa, 1)) return false;
  }
  return true;
}

QuadraticNumber Frame::inner(const ExactVector& a, const ExactVector& b) const {
  if (a.dim() != dim() || b.dim() != dim()) throw DomainError("dimension mismatch with frame");
  QuadraticNumber s(kappa);
  for (std::size_t i = 0; i < dim(); ++i) s += metric[i] * a[i] * b[i];
  return s;
}

FloatVector Frame::embed(const ExactVector& v) const {
  if (v.dim() != dim()) throw DomainError("dimension mismatch with frame");
  FloatVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i].to_double() * axis_scale[i];
  return out;
}

ExactVector reflect(const ExactVector& v, const ExactVector& r) {
  return reflect(v, r, Frame::euclidean(r.kappa(), r.dim()));
}

ExactVector reflect(const ExactVector& v, const ExactVector& r, const Frame& frame) {
  if (r.is_zero()) throw DomainError("reflection in a zero root");
  if (v.dim() != r.dim()) throw DomainError("dimension mismatch in reflection");
  const QuadraticNumber coeff = QuadraticNumber(r.kappa(), 2) * frame.inner(v, r) / frame.norm2(r);
  return v - r * coeff;
}

double float_norm(const FloatVector& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace qlat
