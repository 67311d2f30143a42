#pragma once

#include <vector>

#include "qlat/exact_vector.hpp"

namespace qlat {

/// Quaternion w + x i + y j + z k over the golden field, scalar first.
class Quaternion {
 public:
  Quaternion() : w_(kGolden), x_(kGolden), y_(kGolden), z_(kGolden) {}
  Quaternion(QuadraticNumber w, QuadraticNumber x, QuadraticNumber y, QuadraticNumber z);
  /// From a 4D exact vector (w, x, y, z).
  explicit Quaternion(const ExactVector& v);

  static Quaternion one() { return {golden(1), golden(0), golden(0), golden(0)}; }
  static Quaternion i() { return {golden(0), golden(1), golden(0), golden(0)}; }
  static Quaternion j() { return {golden(0), golden(0), golden(1), golden(0)}; }
  static Quaternion k() { return {golden(0), golden(0), golden(0), golden(1)}; }

  const QuadraticNumber& w() const { return w_; }
  const QuadraticNumber& x() const { return x_; }
  const QuadraticNumber& y() const { return y_; }
  const QuadraticNumber& z() const { return z_; }

  ExactVector to_vector() const { return ExactVector{w_, x_, y_, z_}; }

  Quaternion conj() const { return {w_, -x_, -y_, -z_}; }
  /// q * conj(q) = w^2 + x^2 + y^2 + z^2.
  QuadraticNumber norm() const;

  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }
  Quaternion operator*(const QuadraticNumber& s) const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

 private:
  QuadraticNumber w_, x_, y_, z_;
};

inline Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }
inline Quaternion qconj(const Quaternion& a) { return a.conj(); }
inline QuadraticNumber qnorm(const Quaternion& a) { return a.norm(); }

/// The 120 unit icosians: the H4 roots read as quaternions, same order.
std::vector<Quaternion> unit_icosians();

/// Membership in the icosian ring (integer span of the unit icosians).
bool is_in_icosian_ring(const Quaternion& q);

struct IcosianClosure {
  std::size_t products = 0;
  std::size_t failures = 0;  // products that are not unit icosians
};
/// Multiplies every ordered pair of unit icosians.
IcosianClosure icosian_closure();

}  // namespace qlat
