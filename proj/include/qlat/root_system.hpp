#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlat/exact_vector.hpp"

namespace qlat {

enum class Family { I2, H3, H4 };

/// A non-crystallographic root system: I2(n) (n >= 5, n != 6), H3 or H4.
struct RootSystemId {
  Family family = Family::H3;
  int n = 0;  // polygon order, I2 only

  static RootSystemId i2(int n);
  static RootSystemId h3() { return {Family::H3, 0}; }
  static RootSystemId h4() { return {Family::H4, 0}; }
  /// Accepts "H3", "H4", "I2-5", "I2(5)", "I2_5".
  static RootSystemId parse(std::string_view text);

  int rank() const;
  /// True when exact coordinates exist in a real quadratic field.
  bool is_quadratic() const;
  /// Quadratic field of the exact coordinates (quadratic systems only).
  int kappa() const;
  std::string name() const;

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
};

/// Coordinate frame in which roots(id) is expressed.
Frame frame(const RootSystemId& id);

/// Exact roots, lexicographically sorted.  Throws UnsupportedError for
/// non-quadratic I2(n).
std::vector<ExactVector> roots(const RootSystemId& id);

/// Float roots for any valid id (n arbitrary for I2).
std::vector<FloatVector> float_roots(const RootSystemId& id);

/// rank(id) roots whose reflections generate G(id); chosen as the simple
/// system of a fixed generic linear functional.
std::vector<ExactVector> simple_roots(const RootSystemId& id);

/// The twelve even permutations of (0,1,2,3), generated as the orbit of the
/// identity under the 3-cycles (0 1 2) and (1 2 3), in discovery order.
std::vector<std::vector<int>> even_permutations4();

/// For even n the dihedral roots split into two rings; this returns the
/// ring index (0 or 1) of each exact root for I2(n), matching roots(id).
std::vector<int> dihedral_ring_index(const RootSystemId& id);

}  // namespace qlat
