#include "qlat/icosian.hpp"

#include <unordered_set>

#include "qlat/error.hpp"
#include "qlat/quasilattice.hpp"
#include "qlat/root_system.hpp"

namespace qlat {

Quaternion::Quaternion(QuadraticNumber w, QuadraticNumber x, QuadraticNumber y, QuadraticNumber z)
    : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  for (const auto* c : {&w_, &x_, &y_, &z_}) {
    if (c->kappa() != kGolden) throw DomainError("quaternion coordinates must lie in Q(sqrt 5)");
  }
}

Quaternion::Quaternion(const ExactVector& v) {
  if (v.dim() != 4) throw DomainError("a quaternion needs a 4D vector");
  *this = Quaternion(v[0], v[1], v[2], v[3]);
}

QuadraticNumber Quaternion::norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {w_ * o.w_ - x_ * o.x_ - y_ * o.y_ - z_ * o.z_,
          w_ * o.x_ + x_ * o.w_ + y_ * o.z_ - z_ * o.y_,
          w_ * o.y_ - x_ * o.z_ + y_ * o.w_ + z_ * o.x_,
          w_ * o.z_ + x_ * o.y_ - y_ * o.x_ + z_ * o.w_};
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  return {w_ + o.w_, x_ + o.x_, y_ + o.y_, z_ + o.z_};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  return {w_ - o.w_, x_ - o.x_, y_ - o.y_, z_ - o.z_};
}

Quaternion Quaternion::operator*(const QuadraticNumber& s) const {
  return {w_ * s, x_ * s, y_ * s, z_ * s};
}

std::vector<Quaternion> unit_icosians() {
  std::vector<Quaternion> out;
  for (const auto& r : roots(RootSystemId::h4())) out.emplace_back(r);
  return out;
}

bool is_in_icosian_ring(const Quaternion& q) {
  static const QLModule h4 = ql(QLId::H4);
  return h4.membership(q.to_vector()).member;
}

IcosianClosure icosian_closure() {
  const auto units = unit_icosians();
  std::unordered_set<ExactVector, ExactVectorHash> set;
  for (const auto& u : units) set.insert(u.to_vector());
  IcosianClosure out;
  for (const auto& a : units)
    for (const auto& b : units) {
      ++out.products;
      if (!set.count((a * b).to_vector())) ++out.failures;
    }
  return out;
}

}  // namespace qlat
