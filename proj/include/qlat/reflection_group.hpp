#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "qlat/exact_vector.hpp"
#include "qlat/root_system.hpp"

namespace qlat {

class Quaternion;

/// A d x d matrix over a quadratic field acting on column vectors.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(int kappa, std::size_t dim);
  static GroupElement identity(int kappa, std::size_t dim);
  /// Matrix of v -> reflect(v, r) in the given frame.
  static GroupElement reflection(const ExactVector& r, const Frame& frame);
  /// Matrix whose columns are the given vectors.
  static GroupElement from_columns(const std::vector<ExactVector>& columns);

  int kappa() const { return kappa_; }
  std::size_t dim() const { return dim_; }
  const QuadraticNumber& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  QuadraticNumber& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }

  GroupElement operator*(const GroupElement& o) const;
  ExactVector operator*(const ExactVector& v) const;
  GroupElement transpose() const;
  QuadraticNumber determinant() const;
  bool is_identity() const;
  /// M^T G M == G for the frame's metric G (plain orthogonality when Euclidean).
  bool is_orthogonal(const Frame& frame) const;
  /// Smallest k >= 1 with M^k = I, or 0 when none is found up to max_order.
  int order(int max_order = 1000) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }
  std::size_t hash() const;
  const std::vector<QuadraticNumber>& entries() const { return a_; }

 private:
  int kappa_ = kGolden;
  std::size_t dim_ = 0;
  std::vector<QuadraticNumber> a_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

/// A finite reflection group given by all of its elements.
class ReflectionGroup {
 public:
  /// Breadth-first closure of the simple reflections; exact deduplication.
  static ReflectionGroup generate(const RootSystemId& id);
  /// Builds a group object from an explicit element list (deduplicated).
  static ReflectionGroup from_elements(const RootSystemId& id, std::vector<GroupElement> elements);

  const RootSystemId& system() const { return id_; }
  const Frame& frame() const { return frame_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  bool contains(const GroupElement& g) const { return index_.count(g) != 0; }

  /// Exact orbit of v, sorted.
  std::vector<ExactVector> orbit(const ExactVector& v) const;

 private:
  RootSystemId id_;
  Frame frame_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

/// Matrix of Q -> conj(q1) Q q2, or Q -> conj(q1) conj(Q) q2 when conjugating.
/// Throws DomainError unless both quaternions have norm 1.
GroupElement h4_element_from_quaternions(const Quaternion& q1, const Quaternion& q2,
                                         bool conjugating);

/// Enumeration of all 120 x 120 x 2 quaternion-pair maps.
struct QuaternionPairCensus {
  std::size_t parameterizations = 0;  // raw (q1, q2, flag) triples
  std::size_t distinct = 0;           // distinct matrices
  std::size_t max_fiber = 0;          // largest number of triples giving one matrix
  std::size_t min_fiber = 0;
  std::vector<GroupElement> elements; // distinct matrices in discovery order
};
QuaternionPairCensus h4_quaternion_pair_census();

}  // namespace qlat
