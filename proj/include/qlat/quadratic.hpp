#pragma once

// Exact arithmetic in real quadratic fields Q(sqrt(kappa)).
//
// A QuadraticNumber stores (p + q*w) / den where w is the generator of the
// ring of integers of Q(sqrt(kappa)):
//
//   w = (1 + sqrt(kappa)) / 2   when kappa = 1 (mod 4)   (w = tau for kappa = 5)
//   w = sqrt(kappa)             otherwise
//
// With this choice the ring of integers is exactly {den == 1}, and the
// golden-half numbers (m + n*tau)/2 that carry every H3/H4 coordinate have
// den in {1, 2}.  Values are kept canonical: den > 0, gcd(p, q, den) == 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlat {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Golden field parameter.
inline constexpr int kGolden = 5;

bool is_square_free(std::int64_t n);

/// Throws DomainError unless kappa is a square-free integer > 1.
void require_valid_kappa(int kappa);

class QuadraticNumber {
 public:
  /// Zero of Q(sqrt(5)).
  QuadraticNumber() : QuadraticNumber(kGolden) {}
  explicit QuadraticNumber(int kappa) : kappa_(kappa), p_(0), q_(0), den_(1) {}
  QuadraticNumber(int kappa, Integer p, Integer q = 0, Integer den = 1);

  static QuadraticNumber from_rational(int kappa, const Rational& r);
  /// The ring generator w (tau when kappa = 5).
  static QuadraticNumber generator(int kappa) { return {kappa, 0, 1, 1}; }
  /// sqrt(kappa) expressed in the w basis.
  static QuadraticNumber sqrt_kappa(int kappa);
  /// (a + b*sqrt(kappa)) / d.
  static QuadraticNumber from_sqrt_form(int kappa, const Integer& a, const Integer& b,
                                        const Integer& d);

  int kappa() const { return kappa_; }
  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }
  /// Member of the ring of integers.
  bool is_integral() const { return den_ == 1; }
  /// |norm| == 1 and integral.
  bool is_unit() const;

  Rational rational_part() const { return Rational(p_, den_); }
  Rational generator_part() const { return Rational(q_, den_); }
  Rational to_rational() const;  // DomainError if irrational

  /// Galois conjugate sqrt(kappa) -> -sqrt(kappa).
  QuadraticNumber conjugate() const;
  /// x * conjugate(x).
  Rational norm() const;
  /// x + conjugate(x).
  Rational trace() const;

  /// Canonical (a, b, d) with value (a + b*sqrt(kappa)) / d, d > 0, gcd = 1.
  struct SqrtForm {
    Integer a, b, d;
  };
  SqrtForm sqrt_form() const;

  double to_double() const;
  /// -1, 0 or +1, decided exactly.
  int sign() const;
  QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }
  QuadraticNumber inverse() const;
  QuadraticNumber pow(long long e) const;

  QuadraticNumber operator-() const { return {kappa_, -p_, -q_, den_, Canonical{}}; }
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const Rational& r);

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const Rational& r) { return a *= r; }
  friend QuadraticNumber operator*(const Rational& r, QuadraticNumber a) { return a *= r; }

  /// Structural equality (includes kappa).
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.kappa_ == b.kappa_ && a.p_ == b.p_ && a.q_ == b.q_ && a.den_ == b.den_;
  }
  /// Ordering by exact real value; kappa must match.
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

  std::size_t hash() const;

  /// Integer multiplication table constants: w^2 = c1*w + c0.
  static int c1(int kappa) { return kappa % 4 == 1 ? 1 : 0; }
  static Integer c0(int kappa) { return kappa % 4 == 1 ? Integer((kappa - 1) / 4) : Integer(kappa); }

 private:
  struct Canonical {};
  QuadraticNumber(int kappa, Integer p, Integer q, Integer den, Canonical)
      : kappa_(kappa), p_(std::move(p)), q_(std::move(q)), den_(std::move(den)) {}
  void normalize();
  void check_kappa(const QuadraticNumber& o) const;

  int kappa_;
  Integer p_, q_, den_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x);

/// Golden-field shortcuts.
inline QuadraticNumber golden(long long p, long long q = 0, long long den = 1) {
  return {kGolden, p, q, den};
}
inline QuadraticNumber tau() { return QuadraticNumber::generator(kGolden); }

/// Result of the Pell-equation search for the fundamental unit of Z[w].
struct FundamentalUnitResult {
  QuadraticNumber unit;  // > 1
  Integer a, b;          // smallest positive solution of a^2 - delta*b^2 = +-4
  Integer delta;         // field discriminant
  int norm_sign = 1;     // (a^2 - delta*b^2) / 4
};

/// Field discriminant: kappa if kappa = 1 (mod 4), 4*kappa otherwise.
std::int64_t discriminant(int kappa);

FundamentalUnitResult fundamental_unit(int kappa);

std::uint64_t totient(std::uint64_t n);

struct QuadraticNumberHash {
  std::size_t operator()(const QuadraticNumber& x) const { return x.hash(); }
};

}  // namespace qlat
