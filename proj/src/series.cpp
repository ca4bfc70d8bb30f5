#include "germinv/series.hpp"

#include <algorithm>

#include "germinv/errors.hpp"

namespace germinv {

TruncatedSeries::TruncatedSeries(long trunc) : trunc_(trunc) {
  if (trunc < 1) throw MathError("truncation bound must be positive");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long trunc) {
  TruncatedSeries s(trunc);
  s.add_term(0, c);
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, long trunc) {
  if (p.ring()->nvars() != 1)
    throw MathError("series conversion needs a one-variable ring");
  TruncatedSeries s(trunc);
  for (const auto& [m, c] : p.terms()) s.add_term(m.e[0], c);
  return s;
}

void TruncatedSeries::add_term(long exp, const Rational& c) {
  if (exp < 0) throw MathError("negative series exponent");
  if (exp >= trunc_ || c.is_zero()) return;
  auto it = coeffs_.find(exp);
  if (it == coeffs_.end()) {
    coeffs_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(trunc_, o.trunc_));
  for (const auto& [e, c] : coeffs_) r.add_term(e, c);
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(trunc_, o.trunc_));
  for (const auto& [e, c] : coeffs_) r.add_term(e, c);
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(trunc_, o.trunc_));
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : o.coeffs_) {
      if (ea + eb >= r.trunc_) break;  // exponents ascend within the inner map
      r.add_term(ea + eb, ca * cb);
    }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries r(trunc_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : coeffs_) r.add_term(e, k * c);
  return r;
}

TruncatedSeries TruncatedSeries::pow(long k) const {
  if (k < 0) throw MathError("negative series power");
  TruncatedSeries acc = constant(Rational(1), trunc_);
  TruncatedSeries base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Valuation TruncatedSeries::valuation() const {
  if (coeffs_.empty()) return Valuation::at_least(trunc_);
  return Valuation::finite(coeffs_.begin()->first);
}

std::string TruncatedSeries::str() const {
  if (coeffs_.empty()) return "O(s^" + std::to_string(trunc_) + ")";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        out += "-";
        a = a.abs();
      }
      first = false;
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      a = a.abs();
    }
    if (e == 0) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += e == 1 ? "s" : "s^" + std::to_string(e);
    }
  }
  out += " + O(s^" + std::to_string(trunc_) + ")";
  return out;
}

Arc make_arc(std::vector<TruncatedSeries> components) {
  if (components.empty()) throw MathError("arc needs at least one component");
  long trunc = components.front().trunc();
  for (const auto& c : components) {
    if (c.trunc() != trunc) throw MathError("arc components must share one truncation");
    if (c.coeffs().count(0))
      throw MathError("arc component has a constant term; arcs pass through the origin");
  }
  return Arc{std::move(components), trunc};
}

TruncatedSeries compose_poly_arc(const Polynomial& p, const Arc& g) {
  if (p.ring()->nvars() != g.components.size())
    throw MathError("polynomial ring and arc have different variable counts");
  TruncatedSeries acc = TruncatedSeries::zero(g.trunc);
  for (const auto& [m, c] : p.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(c, g.trunc);
    for (std::size_t i = 0; i < g.components.size() && !term.known_zero(); ++i)
      if (m.e[i] > 0) term = term * g.components[i].pow(m.e[i]);
    acc = acc + term;
  }
  return acc;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    default: return "indeterminate";
  }
}

namespace {

// Valuation as an interval [lo, hi] with hi possibly unbounded.
struct Interval {
  long lo;
  std::optional<long> hi;
};

Interval to_interval(const Valuation& v) {
  if (v.exact) return {v.bound, v.bound};
  return {v.bound, std::nullopt};
}

}  // namespace

ValuationCriterion valuation_criterion_test(const Polynomial& h,
                                            const std::vector<Polynomial>& gens,
                                            const Arc& g) {
  if (gens.empty()) throw MathError("valuation criterion needs at least one generator");

  ValuationCriterion out{compose_poly_arc(h, g).valuation(), {}, Outcome::Indeterminate,
                         Outcome::Indeterminate};
  out.gen_vals.reserve(gens.size());
  for (const auto& p : gens)
    out.gen_vals.push_back(compose_poly_arc(p, g).valuation());

  // inf over the generator intervals: lo = min of lows, hi = min of the
  // finite uppers (unbounded only when every generator is unresolved).
  Interval inf = to_interval(out.gen_vals.front());
  for (std::size_t i = 1; i < out.gen_vals.size(); ++i) {
    Interval v = to_interval(out.gen_vals[i]);
    inf.lo = std::min(inf.lo, v.lo);
    if (v.hi) inf.hi = inf.hi ? std::min(*inf.hi, *v.hi) : *v.hi;
  }
  Interval hv = to_interval(out.h_val);

  // strict: v(h) > inf
  if (inf.hi && hv.lo > *inf.hi)
    out.strict = Outcome::Holds;
  else if (hv.hi && *hv.hi <= inf.lo)
    out.strict = Outcome::Fails;

  // weak: v(h) >= inf
  if (inf.hi && hv.lo >= *inf.hi)
    out.weak = Outcome::Holds;
  else if (hv.hi && *hv.hi < inf.lo)
    out.weak = Outcome::Fails;

  return out;
}

}  // namespace germinv
