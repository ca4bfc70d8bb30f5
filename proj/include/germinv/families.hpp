#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "germinv/invariants.hpp"
#include "germinv/series.hpp"

namespace germinv {

// A one-parameter family F(x, t). F lives in the extended ring (the x
// variables plus the reserved parameter t, t last); base is the member at
// t = 0 over the plain x ring. Validity requires F(0, t) = 0 identically:
// every member of the family is a germ vanishing at the origin.
struct Deformation {
  RingPtr xring;
  RingPtr xt_ring;
  Polynomial F;
  Polynomial base;
};

// F_xt must live in a ring whose last variable is named "t".
Deformation make_deformation(const Polynomial& F_xt);

// Exact substitution t -> t0, result over the x ring.
Polynomial specialize(const Deformation& D, const Rational& t0);

// dF/dt, over the extended ring.
Polynomial deformation_velocity(const Deformation& D);

// The parameter values standing in for "t sufficiently small": pairwise
// distinct exact rationals including 0. Order is preserved as given.
struct SampleSet {
  std::vector<Rational> values;
};

SampleSet make_sample_set(std::vector<Rational> values);
SampleSet default_sample_set();  // {0, 1/7, 1/11, 1/2}

// Exact-sample constancy evidence: the family value at each sample, and
// whether all of them are finite and equal. Evidence over samples, not a
// proof over a punctured disk.
struct ConstancyReport {
  bool constant;
  std::vector<std::pair<Rational, QuotientDim>> values;
};

ConstancyReport mu_br_constancy(const Deformation& D, const VarietyGerm& V,
                                const SampleSet& S,
                                const std::optional<WeightSystem>& weights = std::nullopt,
                                long bound = 10000);

// Conservation-of-numbers probe at one nonzero parameter value: does the
// family value at the origin drop (the polar set splits off points), and do
// user-supplied off-origin points account for the loss. A conservation
// mismatch is reported, not an error.
struct SplitCheck {
  bool split;
  long local_at_origin;
  long base_value;
  std::vector<std::pair<std::vector<Rational>, QuotientDim>> accounted;
  std::optional<bool> conserved;  // set when points were supplied
};

SplitCheck polar_split_check(const Deformation& D, const VarietyGerm& V,
                             const Rational& t0,
                             const std::vector<std::vector<Rational>>& extra_points = {},
                             const std::optional<WeightSystem>& weights = std::nullopt,
                             long bound = 10000);

// Radical membership h in sqrt<gens>. The local power test runs first
// (h^k in <gens> by local normal form, k = 1..k_max); the Rabinowitsch test
// (1 in <gens, 1 - u*h> under a global order) is the fallback. Rabinowitsch
// certifies the polynomial ring's radical, which implies the local one; the
// power test handles the genuinely local cases, and the result records
// which test fired.
struct RadicalResult {
  enum class Kind { MemberPower, FalseUpToKmax, TrueByRabinowitsch } kind;
  long witness_power = 0;  // set for MemberPower
  long k_max = 0;

  bool member() const { return kind != Kind::FalseUpToKmax; }
};

RadicalResult radical_membership(const Polynomial& h,
                                 const std::vector<Polynomial>& gens, long k_max);

// Aggregated report on the six deformation conditions.
//
// (1_r) family-value constancy over the samples: holds / fails with values.
// (2_r) strict valuation inequality over every curve — refutable by a
//       supplied arc, otherwise consistent-with-supplied-arcs.
// (3_r)/(4_r) the weak inequality / integral-closure membership — refuted
//       jointly by an arc whose weak test fails; a refuted (3_r) always
//       refutes (4_r), and refutes (2_r) by contraposition.
// (5_r) radical membership of dF/dt: established (with the firing test) or
//       not established up to k_max — never a conclusive refutation.
// (6_r) no splitting at the probe value t0: holds iff no drop at the origin.
enum class ArcStatus { RefutedWithWitness, ConsistentWithSuppliedArcs };
const char* arc_status_name(ArcStatus s);

struct ConditionReport {
  ConstancyReport constancy;  // (1_r) evidence
  bool c1_holds;

  std::vector<ValuationCriterion> arc_results;  // one per supplied arc
  long arcs_tested;
  ArcStatus c2, c3, c4;
  int c2_witness = -1;   // index of the refuting arc, when refuted
  int c34_witness = -1;

  RadicalResult radical;  // (5_r) evidence
  bool c5_holds;

  SplitCheck split;  // (6_r) evidence at t0
  Rational t0;
  bool c6_holds;
};

ConditionReport condition_report(const Deformation& D, const VarietyGerm& V,
                                 const SampleSet& S, const std::vector<Arc>& arcs,
                                 const Rational& t0,
                                 const std::optional<WeightSystem>& weights = std::nullopt,
                                 long k_max = 12, long bound = 10000);

// The generators dF(xi_i) of the relative Jacobian ideal over the extended
// ring (the fields act in the x directions only), and the same at a fixed
// parameter value over the x ring. Zero entries are kept positionally.
std::vector<Polynomial> relative_jacobian(const Deformation& D, const VarietyGerm& V);
std::vector<Polynomial> relative_jacobian_at(const Deformation& D, const VarietyGerm& V,
                                             const Rational& t0);

}  // namespace germinv
