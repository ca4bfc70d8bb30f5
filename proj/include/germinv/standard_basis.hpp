// Standard bases: Buchberger completion for global orders, Mora completion
// (weak normal forms with ecart selection) for local orders, plus the
// staircase counter that turns leading ideals into quotient dimensions.
#pragma once

#include <set>
#include <vector>

#include "germinv/polynomial.hpp"

namespace germinv {

struct StandardBasis {
  MonomialOrder order;
  std::vector<Polynomial> generators;  // the input ideal, as given
  std::vector<Polynomial> basis;       // completed, monic, deterministic order
  std::set<Monomial, MonomialStructuralLess> leading_ideal;
};

// Global orders: fully (tail-)reduced division remainder — canonical against
// a Groebner basis. Local orders: Mora weak normal form with ecart-minimal
// reducer selection, ties broken by reducer index; zero iff p lies in the
// ideal *when basis is a standard basis*. Reducers must be nonzero and share
// p's ring.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord);

// Completes gens to a standard basis. Pair selection follows the normal
// strategy (order-minimal lcm, ties by generator indices); the Gebauer-Moller
// product and chain criteria prune useless pairs. A zero generator is an
// input error.
StandardBasis standard_basis(const std::vector<Polynomial>& gens,
                             const MonomialOrder& ord);

bool ideal_membership(const Polynomial& p, const StandardBasis& sb);

struct QuotientDim {
  enum class Kind { Finite, Infinite, ExceedsBound } kind;
  long count = 0;  // meaningful for Finite

  static QuotientDim finite(long n) { return {Kind::Finite, n}; }
  static QuotientDim infinite() { return {Kind::Infinite, 0}; }
  static QuotientDim exceeds() { return {Kind::ExceedsBound, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool operator==(const QuotientDim&) const = default;
};

// Counts monomials outside the leading ideal: finite count when every
// variable has a pure power in the leading ideal, infinite when some
// variable has none, exceeds_bound when the count passes `bound`.
QuotientDim quotient_dimension(const StandardBasis& sb, long bound = 10000);

}  // namespace germinv
