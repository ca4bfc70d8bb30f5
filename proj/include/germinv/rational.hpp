// Exact rational scalar on top of GMP's mpq_class.
//
// The wrapper exists for two reasons: mpq_class does not canonicalize values
// constructed from a numerator/denominator pair, and gmpxx expression
// templates are easy to misuse (results must be materialized before member
// calls). Every Rational is stored in lowest terms with a positive
// denominator.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "germinv/errors.hpp"

namespace germinv {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
    if (den == 0) throw MathError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "123", "-7", "2/6" (canonicalized to 1/3). Throws MathError on a
  // malformed literal or zero denominator.
  static Rational from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw MathError("malformed rational literal '" + text + "'");
    if (q.get_den() == 0)
      throw MathError("rational with zero denominator '" + text + "'");
    q.canonicalize();
    return Rational(Canonical{}, q);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(Canonical{}, mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(Canonical{}, mpq_class(::abs(v_))); }

  // Reduced form: "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    mpq_class c = v_;  // materialized; get_str on temporaries is unsafe
    return c.get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  struct Canonical {};  // tag: value already canonical
  Rational(Canonical, const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

// FNV-1a 64-bit digest used for the CLI's input fingerprint.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace germinv
