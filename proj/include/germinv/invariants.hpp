#pragma once

#include <optional>
#include <vector>

#include "germinv/standard_basis.hpp"

namespace germinv {

// A germ of a vector field, one polynomial component per ring variable.
struct VectorField {
  std::vector<Polynomial> components;
};

// A variety germ given by explicit equations together with user-supplied
// generators of the module of vector fields tangent to it. An empty equation
// list means the ambient space (the absolute case); tangency then holds
// vacuously. Generators are never computed from the equations.
struct VarietyGerm {
  std::vector<Polynomial> equations;
  std::vector<VectorField> theta;
};

// Formal partial derivatives of f, one per variable. Zero entries are kept
// so positions line up with the variables; callers filter them out before
// any basis computation.
std::vector<Polynomial> jacobian_ideal(const Polynomial& f);

// dim of the local quotient by the Jacobian ideal. Requires f(0) = 0.
// Infinite signals a non-isolated singularity.
QuotientDim milnor_number(const Polynomial& f,
                          const MonomialOrder& ord = MonomialOrder::local_negdegrevlex(),
                          long bound = 10000);

// Minimum total degree over the support of f. Requires f != 0.
long multiplicity(const Polynomial& f);

// Sum over j of (df/dx_j) * xi_j. Throws on component-count or ring mismatch.
Polynomial apply_vector_field(const Polynomial& f, const VectorField& xi);

// True iff xi(phi) lies in the principal ideal generated by phi, decided by
// division under a global order. Requires phi != 0.
bool check_tangency(const Polynomial& phi, const VectorField& xi);

// First (field, equation) pair, 0-based, for which the field fails to send
// the equation into the ideal of all equations; nullopt when every field is
// tangent. Membership is tried globally first and, failing that, in the
// local ring (germ semantics).
struct TangencyFailure {
  int field_index;
  int equation_index;
};
std::optional<TangencyFailure> find_tangency_failure(const VarietyGerm& V);

// Throws MathError naming the offending generator (1-based, as declared).
void require_tangency(const VarietyGerm& V);

// dim of the local quotient by the ideal of the df(xi_i) over the supplied
// generators. Requires f(0) = 0 and tangency of every generator; a tangency
// failure is reported with the offending generator index.
QuotientDim bruce_roberts_number(const Polynomial& f, const VarietyGerm& V,
                                 const MonomialOrder& ord = MonomialOrder::local_negdegrevlex(),
                                 long bound = 10000);

// dim O_n / <phi, all 2x2 minors of the 2xn Jacobian of (phi, f)> minus the
// Milnor number of phi. The Milnor number of phi must be finite (isolated
// hypersurface singularity) — violating that is an error, not an infinite
// result; an infinite total dimension makes the value infinite.
struct LeDetail {
  QuotientDim total;   // dim of the minor-ideal quotient
  QuotientDim mu_phi;  // Milnor number of phi
  QuotientDim value;   // total - mu_phi when both are finite
};
LeDetail le_milnor_number(const Polynomial& phi, const Polynomial& f,
                          const MonomialOrder& ord = MonomialOrder::local_negdegrevlex(),
                          long bound = 10000);

// Common weighted degree of the support of f when all monomials agree (and,
// if w.degree is set, additionally equals it); nullopt otherwise.
// Requires f != 0.
std::optional<long> is_quasihomogeneous(const Polynomial& f, const WeightSystem& w);

// Order used for local quotients: the weighted local order when weights are
// supplied and every nonzero generator is quasihomogeneous under them (the
// ecart of every reducer is then zero and the local division terminates
// degree by degree), plain negative degrevlex otherwise.
MonomialOrder pick_local_order(const std::optional<WeightSystem>& w,
                               const std::vector<Polynomial>& gens);

}  // namespace germinv
