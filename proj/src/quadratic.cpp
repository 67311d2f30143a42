#include "qlat/quadratic.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <boost/functional/hash.hpp>

#include "qlat/error.hpp"

namespace qlat {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Sign of a + b*sqrt(k), exactly.
int sign_sqrt(const Integer& a, const Integer& b, int k) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with k*b^2.
  const Integer lhs = a * a;
  const Integer rhs = Integer(k) * b * b;
  if (lhs == rhs) return 0;  // impossible for square-free k > 1, kept for safety
  return lhs > rhs ? sa : sb;
}

}  // namespace

bool is_square_free(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

void require_valid_kappa(int kappa) {
  if (kappa <= 1 || !is_square_free(kappa)) {
    throw DomainError("kappa must be a square-free integer > 1, got " + std::to_string(kappa));
  }
}

QuadraticNumber::QuadraticNumber(int kappa, Integer p, Integer q, Integer den)
    : kappa_(kappa), p_(std::move(p)), q_(std::move(q)), den_(std::move(den)) {
  if (kappa != 5 && kappa != 2 && kappa != 3) require_valid_kappa(kappa);
  if (den_ == 0) throw DomainError("zero denominator");
  normalize();
}

void QuadraticNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    p_ = -p_;
    q_ = -q_;
  }
  if (den_ == 1) return;
  if (p_ == 0 && q_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(abs_int(p_), abs_int(q_));
  g = boost::multiprecision::gcd(g, den_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
    den_ /= g;
  }
}

void QuadraticNumber::check_kappa(const QuadraticNumber& o) const {
  if (kappa_ != o.kappa_) {
    throw DomainError("mismatched quadratic fields: kappa " + std::to_string(kappa_) + " vs " +
                      std::to_string(o.kappa_));
  }
}

QuadraticNumber QuadraticNumber::from_rational(int kappa, const Rational& r) {
  return {kappa, numerator(r), 0, denominator(r)};
}

QuadraticNumber QuadraticNumber::sqrt_kappa(int kappa) { return from_sqrt_form(kappa, 0, 1, 1); }

QuadraticNumber QuadraticNumber::from_sqrt_form(int kappa, const Integer& a, const Integer& b,
                                                const Integer& d) {
  if (c1(kappa) == 1) {
    // sqrt(kappa) = 2w - 1
    return {kappa, a - b, 2 * b, d};
  }
  return {kappa, a, b, d};
}

bool QuadraticNumber::is_unit() const {
  if (!is_integral() || is_zero()) return false;
  const Rational n = norm();
  return n == 1 || n == -1;
}

Rational QuadraticNumber::to_rational() const {
  if (q_ != 0) throw DomainError("value is irrational");
  return Rational(p_, den_);
}

QuadraticNumber QuadraticNumber::conjugate() const {
  return {kappa_, p_ + q_ * c1(kappa_), -q_, den_, Canonical{}};
}

Rational QuadraticNumber::norm() const {
  const Integer num = p_ * p_ + p_ * q_ * c1(kappa_) - q_ * q_ * c0(kappa_);
  return Rational(num, den_ * den_);
}

Rational QuadraticNumber::trace() const { return Rational(2 * p_ + q_ * c1(kappa_), den_); }

QuadraticNumber::SqrtForm QuadraticNumber::sqrt_form() const {
  Integer a, b, d;
  if (c1(kappa_) == 1) {
    a = 2 * p_ + q_;
    b = q_;
    d = 2 * den_;
  } else {
    a = p_;
    b = q_;
    d = den_;
  }
  Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs_int(a), abs_int(b)), d);
  if (g > 1) {
    a /= g;
    b /= g;
    d /= g;
  }
  return {a, b, d};
}

double QuadraticNumber::to_double() const {
  const SqrtForm s = sqrt_form();
  const long double root = std::sqrt(static_cast<long double>(kappa_));
  const long double v = (s.a.convert_to<long double>() + s.b.convert_to<long double>() * root) /
                        s.d.convert_to<long double>();
  return static_cast<double>(v);
}

int QuadraticNumber::sign() const {
  if (c1(kappa_) == 1) return sign_sqrt(2 * p_ + q_, q_, kappa_);
  return sign_sqrt(p_, q_, kappa_);
}

QuadraticNumber QuadraticNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return conjugate() * Rational(1 / norm());
}

QuadraticNumber QuadraticNumber::pow(long long e) const {
  QuadraticNumber base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  QuadraticNumber result(kappa_, 1);
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  check_kappa(o);
  if (den_ == o.den_) {
    p_ += o.p_;
    q_ += o.q_;
  } else {
    p_ = p_ * o.den_ + o.p_ * den_;
    q_ = q_ * o.den_ + o.q_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  check_kappa(o);
  if (den_ == o.den_) {
    p_ -= o.p_;
    q_ -= o.q_;
  } else {
    p_ = p_ * o.den_ - o.p_ * den_;
    q_ = q_ * o.den_ - o.q_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  check_kappa(o);
  const Integer qq = q_ * o.q_;
  Integer np = p_ * o.p_ + qq * c0(kappa_);
  Integer nq = p_ * o.q_ + q_ * o.p_;
  if (c1(kappa_) == 1) nq += qq;
  p_ = std::move(np);
  q_ = std::move(nq);
  den_ *= o.den_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  check_kappa(o);
  return *this *= o.inverse();
}

QuadraticNumber& QuadraticNumber::operator*=(const Rational& r) {
  p_ *= numerator(r);
  q_ *= numerator(r);
  den_ *= denominator(r);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  a.check_kappa(b);
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t QuadraticNumber::hash() const {
  std::size_t seed = static_cast<std::size_t>(kappa_);
  boost::hash_combine(seed, hash_value(p_));
  boost::hash_combine(seed, hash_value(q_));
  boost::hash_combine(seed, hash_value(den_));
  return seed;
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) {
  os << "(" << x.p() << (x.q() < 0 ? "-" : "+") << abs_int(x.q())
     << (x.kappa() == kGolden ? "t" : "w") << ")/" << x.den();
  return os;
}

std::int64_t discriminant(int kappa) { return kappa % 4 == 1 ? kappa : 4 * std::int64_t{kappa}; }

FundamentalUnitResult fundamental_unit(int kappa) {
  require_valid_kappa(kappa);
  const Integer delta = discriminant(kappa);
  constexpr long long kMaxB = 10'000'000;
  for (long long bi = 1; bi <= kMaxB; ++bi) {
    const Integer b = bi;
    const Integer db2 = delta * b * b;
    // For fixed b the -4 branch yields the smaller a.
    for (int s : {-4, 4}) {
      const Integer a2 = db2 + s;
      if (a2 <= 0) continue;
      const Integer a = boost::multiprecision::sqrt(a2);
      if (a * a != a2) continue;
      FundamentalUnitResult r;
      r.a = a;
      r.b = b;
      r.delta = delta;
      r.norm_sign = s > 0 ? 1 : -1;
      // u = (a + b*sqrt(delta)) / 2 with sqrt(delta) = sqrt(kappa) or 2*sqrt(kappa).
      r.unit = delta == kappa ? QuadraticNumber::from_sqrt_form(kappa, a, b, 2)
                              : QuadraticNumber::from_sqrt_form(kappa, a, 2 * b, 2);
      return r;
    }
  }
  throw UnsupportedError("fundamental unit search exceeded b <= 10^7 for kappa " +
                         std::to_string(kappa));
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw DomainError("totient requires n >= 1");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    while (m % f == 0) m /= f;
    result -= result / f;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace qlat
