#include "qlat/linalg.hpp"

#include <utility>

#include "qlat/error.hpp"

namespace qlat {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

bool all_integers(const RationalVector& v) {
  for (const auto& x : v) {
    if (!is_integer(x)) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns) {
  if (columns.empty()) return {};
  RationalMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) throw DomainError("ragged column list");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DomainError("ragged row list");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
  RationalMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += aik * o(k, j);
    }
  return p;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (v[k] != 0) out[i] += (*this)(i, k) * v[k];
    }
  return out;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rank;
    while (piv < rows_ && m(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(rank, j), m(piv, j));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  RationalMatrix m = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && m(piv, c) == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(c, j), m(piv, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix m = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(c, j), m(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    }
    const Rational p = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::optional<RationalVector> RationalMatrix::solve(const RationalVector& b) const {
  if (rows_ != cols_ || b.size() != rows_) return std::nullopt;
  try {
    return inverse() * b;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

bool RationalMatrix::is_integral() const { return all_integers(a_); }

std::vector<IntegerVector> hermite_normal_form(std::vector<IntegerVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < ncols && pivot_row < rows.size(); ++c) {
    // Euclid on column c among rows pivot_row..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const Integer f = rows[r][c] / rows[pivot_row][c];
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] -= f * rows[pivot_row][j];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    // Reduce the entries above the pivot into [0, pivot).
    const Integer& p = rows[pivot_row][c];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer f = rows[r][c] / p;
      if (rows[r][c] - f * p < 0) f -= 1;
      if (f == 0) continue;
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] -= f * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<RationalVector> lattice_basis(const std::vector<RationalVector>& generators) {
  if (generators.empty()) return {};
  Integer lcm = 1;
  for (const auto& g : generators)
    for (const auto& x : g) lcm = boost::multiprecision::lcm(lcm, Integer(denominator(x)));
  std::vector<IntegerVector> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    IntegerVector row(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) row[j] = numerator(g[j] * lcm);
    rows.push_back(std::move(row));
  }
  std::vector<RationalVector> basis;
  for (const auto& row : hermite_normal_form(std::move(rows))) {
    RationalVector b(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) b[j] = Rational(row[j], lcm);
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace qlat
