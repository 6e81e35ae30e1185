#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace semicomm {

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always kept in lowest terms. Thin value wrapper around
/// GMP's mpq_class so that Eigen never sees gmpxx expression templates.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                      // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ + b.v_;
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ - b.v_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ * b.v_;
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Canonical text form: "p" or "p/q" with q > 1, lowest terms, sign on the
/// numerator. This is the on-disk entry format used by every JSON schema.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (sign allowed on the numerator only, denominator
/// nonzero). Throws std::invalid_argument on anything else.
Rational rational_from_string(std::string_view text);

}  // namespace semicomm

namespace Eigen {

template <>
struct NumTraits<semicomm::Rational> : GenericNumTraits<semicomm::Rational> {
  typedef semicomm::Rational Real;
  typedef semicomm::Rational NonInteger;
  typedef semicomm::Rational Nested;
  static inline Real epsilon() { return semicomm::Rational(0); }
  static inline Real dummy_precision() { return semicomm::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen
