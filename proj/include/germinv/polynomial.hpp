// Sparse exact-rational multivariate polynomials.
//
// Terms live in a structurally ordered map, so equality and iteration are
// order-independent and canonical; the zero polynomial has an empty map and
// no stored coefficient is ever zero. Leading terms are computed on demand
// against a caller-supplied MonomialOrder.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "germinv/monomial.hpp"
#include "germinv/order.hpp"
#include "germinv/rational.hpp"

namespace germinv {

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialStructuralLess>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational constant_term() const;
  // Maximum total degree over the support; -1 for the zero polynomial.
  long total_degree() const;
  // Minimum total degree over the support (the multiplicity/order at 0);
  // throws MathError on the zero polynomial.
  long order_at_origin() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(long k) const;  // k >= 0

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Order-maximal term; throws MathError on the zero polynomial.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;

  Polynomial derivative(int var) const;

  // Substitute ring variables by polynomials over a target ring. Unassigned
  // variables map to the like-named variable of the target ring; a missing
  // name is a ring-incompatibility error. All assignment values must share
  // one ring, which becomes the result ring (defaults to this ring when the
  // assignment is empty).
  Polynomial substitute(const std::map<int, Polynomial>& assignment) const;
  Polynomial substitute_scalars(const std::map<int, Rational>& assignment) const;

  // Canonical printing: terms descending under ord, coefficients as reduced
  // fractions, explicit '*' between factors (reparses to the same value).
  std::string str(const MonomialOrder& ord) const;
  std::string str() const { return str(MonomialOrder::global_degrevlex()); }

  // Adds c * x^m, erasing the entry if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

 private:
  RingPtr ring_;
  TermMap terms_;
};

// Lifts p into a super-ring (every variable of p's ring must occur in target).
Polynomial lift_to_ring(const Polynomial& p, const RingPtr& target);

}  // namespace germinv
