#pragma once

// Small dense exact linear algebra over Q and Z.

#include <cstddef>
#include <optional>
#include <vector>

#include "qlat/quadratic.hpp"

namespace qlat {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalVector row(std::size_t r) const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalVector operator*(const RationalVector& v) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::size_t rank() const;
  Rational determinant() const;
  /// Throws DomainError when singular.
  RationalMatrix inverse() const;
  /// Unique solution of A x = b for square nonsingular A; nullopt otherwise.
  std::optional<RationalVector> solve(const RationalVector& b) const;

  bool is_integral() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

bool is_integer(const Rational& r);
bool all_integers(const RationalVector& v);

/// A Z-basis (as rows, Hermite normal form) of the Z-span of the given
/// rational generators.  The returned rows are ordered by pivot column.
std::vector<RationalVector> lattice_basis(const std::vector<RationalVector>& generators);

/// Hermite normal form of an integer matrix given by rows; zero rows dropped.
std::vector<IntegerVector> hermite_normal_form(std::vector<IntegerVector> rows);

}  // namespace qlat
