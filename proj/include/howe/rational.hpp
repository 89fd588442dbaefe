#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace howe {

// Exact rational scalar backed by GMP. Kept canonical at all times:
// lowest terms, denominator > 0. Fixed-width integers are not enough here;
// exact elimination over Q(zeta_L) grows numerators fast.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}          // NOLINT: implicit by design
  Rational(int n) : q_(n) {}           // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  // Parses "a" or "a/b".
  explicit Rational(const std::string& s) {
    q_ = mpq_class(s);
    if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("Rational: zero to negative power");
      Rational inv = Rational(1) / *this;
      return inv.pow(-e);
    }
    Rational r(1), base(*this);
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  double to_double() const { return q_.get_d(); }

  // "a" for integers, "a/b" otherwise.
  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace howe
