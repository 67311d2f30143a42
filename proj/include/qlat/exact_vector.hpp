#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qlat/quadratic.hpp"

namespace qlat {

/// Plain float rendering of an exact vector; display and diffraction only.
using FloatVector = std::vector<double>;

/// A vector of exact coordinates in one quadratic field.
class ExactVector {
 public:
  ExactVector() = default;
  ExactVector(int kappa, std::size_t dim) : kappa_(kappa), coords_(dim, QuadraticNumber(kappa)) {}
  explicit ExactVector(std::vector<QuadraticNumber> coords);
  ExactVector(std::initializer_list<QuadraticNumber> coords)
      : ExactVector(std::vector<QuadraticNumber>(coords)) {}

  int kappa() const { return kappa_; }
  std::size_t dim() const { return coords_.size(); }
  const QuadraticNumber& operator[](std::size_t i) const { return coords_[i]; }
  QuadraticNumber& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<QuadraticNumber>& coords() const { return coords_; }

  bool is_zero() const;

  ExactVector operator-() const;
  ExactVector& operator+=(const ExactVector& o);
  ExactVector& operator-=(const ExactVector& o);
  ExactVector& operator*=(const QuadraticNumber& s);
  friend ExactVector operator+(ExactVector a, const ExactVector& b) { return a += b; }
  friend ExactVector operator-(ExactVector a, const ExactVector& b) { return a -= b; }
  friend ExactVector operator*(ExactVector a, const QuadraticNumber& s) { return a *= s; }
  friend ExactVector operator*(const QuadraticNumber& s, ExactVector a) { return a *= s; }

  friend bool operator==(const ExactVector& a, const ExactVector& b) {
    return a.kappa_ == b.kappa_ && a.coords_ == b.coords_;
  }
  /// Lexicographic on exact coordinate values.
  friend std::strong_ordering operator<=>(const ExactVector& a, const ExactVector& b);

  /// Rational coordinates over the basis {1, w} per component (length 2*dim):
  /// [p0/d0, q0/d0, p1/d1, q1/d1, ...].
  std::vector<Rational> expand() const;
  static ExactVector collapse(int kappa, const std::vector<Rational>& expanded);

  /// Galois conjugate of each coordinate.
  ExactVector conjugate() const;

  std::size_t hash() const;

 private:
  void check(const ExactVector& o) const;

  int kappa_ = kGolden;
  std::vector<QuadraticNumber> coords_;
};

struct ExactVectorHash {
  std::size_t operator()(const ExactVector& v) const { return v.hash(); }
};

/// Euclidean dot product on raw coordinates.
QuadraticNumber dot(const ExactVector& a, const ExactVector& b);

/// Coordinate frame of a root system.  Coordinates may be stored against
/// rescaled axes so that every root is exact in the field; the metric
/// holds the squared axis lengths and axis_scale their float values.
/// For the pentagonal dihedral systems the second axis is scaled by
/// sin(72 deg), which is not in Q(sqrt 5) while its square is.
struct Frame {
  int kappa = kGolden;
  std::vector<QuadraticNumber> metric;
  std::vector<double> axis_scale;

  static Frame euclidean(int kappa, std::size_t dim);
  std::size_t dim() const { return metric.size(); }
  bool is_euclidean() const;

  QuadraticNumber inner(const ExactVector& a, const ExactVector& b) const;
  QuadraticNumber norm2(const ExactVector& a) const { return inner(a, a); }
  FloatVector embed(const ExactVector& v) const;
};

/// Reflection of v in the hyperplane orthogonal to r: v - 2 (v.r)/(r.r) r.
ExactVector reflect(const ExactVector& v, const ExactVector& r);
ExactVector reflect(const ExactVector& v, const ExactVector& r, const Frame& frame);

/// Euclidean float norm of a float vector.
double float_norm(const FloatVector& v);

}  // namespace qlat
