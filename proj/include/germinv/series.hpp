#pragma once

#include <map>
#include <optional>
#include <vector>

#include "germinv/polynomial.hpp"

namespace germinv {

// Order of vanishing of a truncated series: either known exactly, or only
// known to be at least the truncation bound. The at_least case is an
// explicit indeterminate outcome, never silently treated as infinity.
struct Valuation {
  long bound;
  bool exact;

  static Valuation finite(long v) { return {v, true}; }
  static Valuation at_least(long b) { return {b, false}; }
  bool operator==(const Valuation&) const = default;
};

// Element of the formal power-series ring in the arc parameter, known
// exactly below `trunc`. No stored coefficient is zero and every stored
// exponent is < trunc; arithmetic keeps both invariants and truncates to the
// smaller bound of the operands.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(long trunc);

  static TruncatedSeries zero(long trunc) { return TruncatedSeries(trunc); }
  static TruncatedSeries constant(const Rational& c, long trunc);
  // p must live in a one-variable ring (the arc parameter).
  static TruncatedSeries from_polynomial(const Polynomial& p, long trunc);

  long trunc() const { return trunc_; }
  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  bool known_zero() const { return coeffs_.empty(); }

  void add_term(long exp, const Rational& c);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Rational& c) const;
  TruncatedSeries pow(long k) const;

  // Smallest stored exponent, or at_least(trunc) for the empty series.
  Valuation valuation() const;

  std::string str() const;

 private:
  std::map<long, Rational> coeffs_;
  long trunc_;
};

// A curve through the origin: one series per ambient variable (including the
// deformation parameter when family conditions are tested). Every component
// vanishes at 0 — constant terms are rejected.
struct Arc {
  std::vector<TruncatedSeries> components;
  long trunc;
};

Arc make_arc(std::vector<TruncatedSeries> components);

// Exact composition p(gamma(s)) truncated at the arc's bound. The ring of p
// must have exactly one variable per arc component.
TruncatedSeries compose_poly_arc(const Polynomial& p, const Arc& g);

enum class Outcome { Holds, Fails, Indeterminate };
const char* outcome_name(Outcome o);

// Valuation test behind the deformation conditions: compare the valuation of
// h on the arc against the infimum of the generator valuations. Truncation
// turns each valuation into an interval; comparisons that the intervals
// cannot decide come back indeterminate (raise trunc to resolve).
struct ValuationCriterion {
  Valuation h_val;
  std::vector<Valuation> gen_vals;
  Outcome strict;  // v(h.gamma) >  inf_i v(gen_i.gamma)
  Outcome weak;    // v(h.gamma) >= inf_i v(gen_i.gamma)
};

ValuationCriterion valuation_criterion_test(const Polynomial& h,
                                            const std::vector<Polynomial>& gens,
                                            const Arc& g);

}  // namespace germinv
