#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace dageom {

using Flt = double;
using Cx = std::complex<Flt>;

// Exact rational scalar backed by arbitrary-precision integers.
// Canonical form is maintained after every operation: positive denominator,
// gcd(|numerator|, denominator) = 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::domain_error("division by zero");
    v_.canonicalize();
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend int sgn(const Rat& a) { return sgn(a.v_); }
  friend Rat abs(const Rat& a) { return Rat(mpq_class(abs(a.v_))); }

  double to_d() const { return v_.get_d(); }

  // "p" or "p/q" in lowest terms.
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Canonical reduced rational n/d; rejects d = 0.
inline Rat rat_normalize(const mpz_class& n, const mpz_class& d) {
  return Rat(n, d);
}

inline int sgn(double x) { return (x > 0.0) - (x < 0.0); }
inline double to_double(const Rat& x) { return x.to_d(); }
inline double to_double(double x) { return x; }

// Parses "p/q", an integer, or a plain decimal ("-1.25") as an exact
// rational. Decimal digits become an exact power-of-ten fraction.
Rat parse_rat(const std::string& text);

// Principal-branch complex logarithm, imaginary part in (-pi, pi].
inline Cx cx_log(const Cx& z) {
  if (z == Cx(0.0, 0.0)) throw std::domain_error("log of zero");
  return std::log(z);
}

}  // namespace dageom
