#include "qlat/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include <boost/functional/hash.hpp>

#include "qlat/error.hpp"
#include "qlat/icosian.hpp"

namespace qlat {

GroupElement::GroupElement(int kappa, std::size_t dim)
    : kappa_(kappa), dim_(dim), a_(dim * dim, QuadraticNumber(kappa)) {}

GroupElement GroupElement::identity(int kappa, std::size_t dim) {
  GroupElement m(kappa, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = QuadraticNumber(kappa, 1);
  return m;
}

GroupElement GroupElement::reflection(const ExactVector& r, const Frame& frame) {
  if (r.is_zero()) throw DomainError("reflection in a zero root");
  const std::size_t d = r.dim();
  // M = I - 2 r (G r)^T / (r^T G r)
  const QuadraticNumber scale = QuadraticNumber(r.kappa(), 2) / frame.norm2(r);
  GroupElement m = identity(r.kappa(), d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) -= scale * r[i] * frame.metric[j] * r[j];
  return m;
}

GroupElement GroupElement::from_columns(const std::vector<ExactVector>& columns) {
  if (columns.empty()) throw DomainError("empty column list");
  const std::size_t d = columns.size();
  GroupElement m(columns.front().kappa(), d);
  for (std::size_t c = 0; c < d; ++c) {
    if (columns[c].dim() != d) throw DomainError("matrix must be square");
    for (std::size_t r = 0; r < d; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (dim_ != o.dim_) throw DomainError("matrix dimension mismatch");
  GroupElement p(kappa_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const QuadraticNumber& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const QuadraticNumber& bkj = o(k, j);
        if (!bkj.is_zero()) p(i, j) += aik * bkj;
      }
    }
  return p;
}

ExactVector GroupElement::operator*(const ExactVector& v) const {
  if (v.dim() != dim_) throw DomainError("matrix-vector dimension mismatch");
  ExactVector out(kappa_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
    }
  return out;
}

GroupElement GroupElement::transpose() const {
  GroupElement t(kappa_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QuadraticNumber GroupElement::determinant() const {
  // Fraction-free enough for d <= 4: Gaussian elimination over the field.
  std::vector<QuadraticNumber> m = a_;
  QuadraticNumber det(kappa_, 1);
  const std::size_t n = dim_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c].is_zero()) ++piv;
    if (piv == n) return QuadraticNumber(kappa_);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[c * n + j], m[piv * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r * n + c].is_zero()) continue;
      const QuadraticNumber f = m[r * n + c] / m[c * n + c];
      for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

bool GroupElement::is_identity() const { return *this == identity(kappa_, dim_); }

bool GroupElement::is_orthogonal(const Frame& frame) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      QuadraticNumber s(kappa_);
      for (std::size_t k = 0; k < dim_; ++k) s += (*this)(k, i) * frame.metric[k] * (*this)(k, j);
      const QuadraticNumber expected = i == j ? frame.metric[i] : QuadraticNumber(kappa_);
      if (s != expected) return false;
    }
  return true;
}

int GroupElement::order(int max_order) const {
  GroupElement p = *this;
  for (int k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
  return 0;
}

std::size_t GroupElement::hash() const {
  std::size_t seed = dim_;
  for (const auto& x : a_) boost::hash_combine(seed, x.hash());
  return seed;
}

ReflectionGroup ReflectionGroup::generate(const RootSystemId& id) {
  if (!id.is_quadratic()) {
    throw UnsupportedError(id.name() + " is not quadratic; exact group generation unsupported");
  }
  ReflectionGroup g;
  g.id_ = id;
  g.frame_ = qlat::frame(id);
  for (const auto& r : simple_roots(id)) g.generators_.push_back(GroupElement::reflection(r, g.frame_));

  const GroupElement e = GroupElement::identity(g.frame_.kappa, g.frame_.dim());
  g.index_.emplace(e, 0);
  g.elements_.push_back(e);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : g.generators_) {
      GroupElement next = s * g.elements_[head];
      if (g.index_.count(next)) continue;
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

ReflectionGroup ReflectionGroup::from_elements(const RootSystemId& id,
                                               std::vector<GroupElement> elements) {
  ReflectionGroup g;
  g.id_ = id;
  g.frame_ = qlat::frame(id);
  for (auto& m : elements) {
    if (g.index_.count(m)) continue;
    g.index_.emplace(m, g.elements_.size());
    g.elements_.push_back(std::move(m));
  }
  return g;
}

std::vector<ExactVector> ReflectionGroup::orbit(const ExactVector& v) const {
  if (v.dim() != frame_.dim()) throw DomainError("orbit vector has wrong dimension");
  std::set<ExactVector> out;
  for (const auto& m : elements_) out.insert(m * v);
  return {out.begin(), out.end()};
}

GroupElement h4_element_from_quaternions(const Quaternion& q1, const Quaternion& q2,
                                         bool conjugating) {
  const QuadraticNumber one = golden(1);
  if (q1.norm() != one || q2.norm() != one) {
    throw DomainError("quaternion-pair maps require unit quaternions");
  }
  const Quaternion q1bar = q1.conj();
  std::vector<ExactVector> columns;
  for (const Quaternion& basis : {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
    const Quaternion arg = conjugating ? basis.conj() : basis;
    columns.push_back((q1bar * arg * q2).to_vector());
  }
  return GroupElement::from_columns(columns);
}

QuaternionPairCensus h4_quaternion_pair_census() {
  const auto icosians = unit_icosians();
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> fibers;
  QuaternionPairCensus census;
  for (bool conjugating : {false, true})
    for (const auto& q1 : icosians)
      for (const auto& q2 : icosians) {
        GroupElement m = h4_element_from_quaternions(q1, q2, conjugating);
        ++census.parameterizations;
        auto [it, inserted] = fibers.emplace(m, 0);
        if (inserted) census.elements.push_back(std::move(m));
        ++it->second;
      }
  census.distinct = census.elements.size();
  census.min_fiber = census.parameterizations;
  for (const auto& [m, count] : fibers) {
    census.max_fiber = std::max(census.max_fiber, count);
    census.min_fiber = std::min(census.min_fiber, count);
  }
  return census;
}

}  // namespace qlat
