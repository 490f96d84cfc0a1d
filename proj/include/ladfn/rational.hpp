#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "ladfn/errors.hpp"

namespace ladfn {

// Arbitrary-precision signed integer.  Function arguments are positive
// integers; operations reject 0 where the domain demands it.
using Int = boost::multiprecision::cpp_int;

/// Exact reduced fraction: gcd(|num|, den) == 1 and den >= 1 at all times,
/// with the sign carried by the numerator.  Equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(Int n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n) {}             // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  /// Nonnegative integer power; pow(0) == 1, including for the zero value.
  Rational pow(unsigned k) const {
    if (k == 0) return Rational(1);
    using boost::multiprecision::pow;
    return Rational(pow(num_, k), pow(den_, k));
  }

  /// "a" when integral, "a/b" otherwise; negatives render as "-a/b".
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);  // gcd of magnitudes, always >= 0 here
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_{0};
  Int den_{1};
};

/// Canonical form of num/den, rejecting den == 0.
inline Rational rat_normalize(Int num, Int den) {
  return Rational(std::move(num), std::move(den));
}

}  // namespace ladfn
