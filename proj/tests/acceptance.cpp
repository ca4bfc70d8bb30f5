// Acceptance gate. Nine numbered criteria exercise the whole pipeline
// against frozen reference figures, each under a time budget. A criterion
// asserts a list of labeled claims; the binary prints one line per criterion
// and exits 0 exactly when every criterion lands on its recorded side with
// exactly the recorded claims failing.
//
// Three criteria track stated reference figures that exact computation
// refutes: an off-by-one in a family of relative numbers (criterion 2), a
// degenerate family presented as value-constant with a radical membership
// that does not hold (criterion 4), and a miscounted identity triple
// (criterion 7). Those claims are asserted verbatim and EXPECTED to fail so
// the discrepancy stays visible here instead of being edited away; the
// companion claims next to them pin down what the computed values actually
// are. Everything else must pass.
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "germinv/document.hpp"
#include "germinv/parser.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

struct Claim {
  std::string label;
  bool ok;
  std::string detail;
};
using Claims = std::vector<Claim>;

void claim(Claims& c, std::string label, bool ok, std::string detail = "") {
  c.push_back({std::move(label), ok, std::move(detail)});
}

Document load(const std::string& name) {
  std::string path = std::string(GERMINV_CORPUS_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw MathError("cannot open corpus file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string qd_str(const QuotientDim& q) {
  switch (q.kind) {
    case QuotientDim::Kind::Finite: return std::to_string(q.count);
    case QuotientDim::Kind::Infinite: return "infinite";
    default: return "exceeds-bound";
  }
}

// The computation pattern the commands use: tangency first, then the ideal
// of the applied fields under the fastest safe local order.
QuotientDim rel_number(const Polynomial& f, const VarietyGerm& V,
                       const std::optional<WeightSystem>& w) {
  require_tangency(V);
  std::vector<Polynomial> gens;
  for (const auto& xi : V.theta) gens.push_back(apply_vector_field(f, xi));
  return bruce_roberts_number(f, V, pick_local_order(w, gens));
}

QuotientDim mu(const Polynomial& f, const std::optional<WeightSystem>& w) {
  return milnor_number(f, pick_local_order(w, {f}));
}

LeDetail le(const Polynomial& phi, const Polynomial& f,
            const std::optional<WeightSystem>& w) {
  return le_milnor_number(phi, f, pick_local_order(w, {phi, f}));
}

// --- criterion 1: conservation probe on a splitting family ----------------

void crit1(Claims& c) {
  Document d = load("coordinate_plane.germ");
  VarietyGerm W = doc_variety(d, "W");
  Polynomial f0 = doc_poly(d, "f0");
  Deformation D = doc_deformation(d, "F");

  QuotientDim br = rel_number(f0, W, d.weights);
  claim(c, "relative number of the base germ is 3", br == QuotientDim::finite(3),
        "computed " + qd_str(br));

  SplitCheck sc = polar_split_check(
      D, W, Rational(1, 2),
      {{Rational(-1, 4), Rational(0), Rational(0), Rational(0)}}, d.weights);
  claim(c, "at t = 1/2 the value at the origin drops to 1",
        sc.split && sc.base_value == 3 && sc.local_at_origin == 1,
        "origin " + std::to_string(sc.local_at_origin) + " of base " +
            std::to_string(sc.base_value));
  claim(c, "the moved critical point (-1/4, 0, 0, 0) carries value 1",
        sc.accounted.size() == 1 &&
            sc.accounted[0].second == QuotientDim::finite(1));
  claim(c, "origin plus located points account for 2 of 3: not conserved",
        sc.conserved.has_value() && !*sc.conserved);
}

// --- criterion 2: the n+3 figure for the cusp family ----------------------

void crit2(Claims& c) {
  for (long n : {4L, 5L, 6L}) {
    std::string tag = " (n = " + std::to_string(n) + ")";
    Document d = load("cusp_n" + std::to_string(n) + ".germ");
    VarietyGerm V = doc_variety(d, "V");
    Polynomial f0 = doc_poly(d, "f0");

    QuotientDim br = rel_number(f0, V, d.weights);
    // Stated figure; exact computation lands one higher for every n.
    claim(c, "the stated value n + 3 is attained" + tag,
          br == QuotientDim::finite(n + 3), "computed " + qd_str(br));
    claim(c, "computed relative number is n + 4" + tag,
          br == QuotientDim::finite(n + 4), "computed " + qd_str(br));

    ConstancyReport rep =
        mu_br_constancy(doc_deformation(d, "F"), V, doc_samples(d, "S"), d.weights);
    bool all_n4 = rep.constant;
    for (const auto& [t, v] : rep.values)
      all_n4 = all_n4 && v == QuotientDim::finite(n + 4);
    claim(c, "the family keeps the value constant over the samples" + tag, all_n4);
  }

  // The n = 4 member also carries arcs; all six conditions come out clean.
  Document d = load("cusp_n4.germ");
  VarietyGerm V = doc_variety(d, "V");
  std::vector<Arc> arcs;
  for (const auto& name : d.arc_order) arcs.push_back(doc_arc(d, name, 50));
  ConditionReport rep = condition_report(doc_deformation(d, "F"), V,
                                         doc_samples(d, "S"), arcs,
                                         Rational(1, 7), d.weights);
  bool arcs_hold = rep.arc_results.size() == 3;
  for (const auto& r : rep.arc_results)
    arcs_hold = arcs_hold && r.strict == Outcome::Holds && r.weak == Outcome::Holds;
  claim(c, "every supplied arc satisfies both valuation inequalities (n = 4)",
        arcs_hold);
  claim(c, "no condition is refuted and the radical test fires (n = 4)",
        rep.c1_holds && rep.c2 == ArcStatus::ConsistentWithSuppliedArcs &&
            rep.c3 == ArcStatus::ConsistentWithSuppliedArcs &&
            rep.c4 == ArcStatus::ConsistentWithSuppliedArcs && rep.c5_holds &&
            rep.c6_holds);
}

// --- criterion 3: an arc separating the strict from the weak test ---------

void crit3(Claims& c) {
  Document d = load("swallowtail.germ");
  VarietyGerm V = doc_variety(d, "V");
  Deformation D = doc_deformation(d, "F2");
  Arc gamma = doc_arc(d, "gamma", 50);

  ConditionReport rep = condition_report(D, V, doc_samples(d, "S"), {gamma},
                                         Rational(1, 7), d.weights);
  bool const5 = rep.c1_holds;
  for (const auto& [t, v] : rep.constancy.values)
    const5 = const5 && v == QuotientDim::finite(5);
  claim(c, "family value constant at 5 over the samples", const5);

  claim(c, "on the arc: v(h) = 3 exactly, strict fails, weak holds",
        rep.arc_results.size() == 1 &&
            rep.arc_results[0].h_val == Valuation::finite(3) &&
            rep.arc_results[0].strict == Outcome::Fails &&
            rep.arc_results[0].weak == Outcome::Holds);
  claim(c, "the arc refutes the strict condition and leaves the weak ones",
        rep.c2 == ArcStatus::RefutedWithWitness && rep.c2_witness == 0 &&
            rep.c3 == ArcStatus::ConsistentWithSuppliedArcs &&
            rep.c4 == ArcStatus::ConsistentWithSuppliedArcs);
}

// --- criterion 4: the degenerate member of the surface family -------------

void crit4(Claims& c) {
  Document deg = load("qh_surface_degenerate.germ");
  VarietyGerm V = doc_variety(deg, "V");
  Deformation D = doc_deformation(deg, "F");

  ConstancyReport rep = mu_br_constancy(D, V, default_sample_set(), deg.weights);
  std::string vals;
  for (const auto& [t, v] : rep.values)
    vals += (vals.empty() ? "" : ", ") + qd_str(v);
  // Stated as constant; at t = 0 the relative number is not even finite.
  claim(c, "the degenerate family keeps its value constant", rep.constant,
        "values over the default samples: " + vals);

  Polynomial h = deformation_velocity(D);
  std::vector<Polynomial> gens = relative_jacobian(D, V);
  RadicalResult rad = radical_membership(h, gens, 12);
  // Stated membership; the power test and the global fallback both say no.
  claim(c, "the velocity lies in the radical of the relative Jacobian ideal",
        rad.member(), "false up to k_max = " + std::to_string(rad.k_max));

  Arc gamma = doc_arc(deg, "gamma", 50);
  ValuationCriterion vc = valuation_criterion_test(h, gens, gamma);
  claim(c, "an explicit arc refutes the weak valuation inequality",
        vc.weak == Outcome::Fails);

  // The generic member of the same family is clean.
  Document gen = load("qh_surface.germ");
  VarietyGerm Vg = doc_variety(gen, "V");
  Deformation Dg = doc_deformation(gen, "F");
  ConstancyReport repg = mu_br_constancy(Dg, Vg, default_sample_set(), gen.weights);
  bool all3 = repg.constant;
  for (const auto& [t, v] : repg.values)
    all3 = all3 && v == QuotientDim::finite(3);
  claim(c, "the generic family keeps the value 3 over the samples", all3);
  RadicalResult radg =
      radical_membership(deformation_velocity(Dg), relative_jacobian(Dg, Vg), 12);
  claim(c, "the generic velocity is a radical member with witness power 2",
        radg.kind == RadicalResult::Kind::MemberPower && radg.witness_power == 2);
}

// --- criterion 5: exact generators and valuations on the rescaling family -

void crit5(Claims& c) {
  Document d = load("cusp_rescale.germ");
  VarietyGerm V = doc_variety(d, "V");
  Deformation D = doc_deformation(d, "F");

  std::vector<Polynomial> gens = relative_jacobian(D, V);
  bool match =
      gens.size() == 2 &&
      gens[0] == parse_polynomial("10*x^5 + 6*y^2 + 10*t*x^5", D.xt_ring) &&
      gens[1] == parse_polynomial("10*x^4*y + 6*x^2*y + 10*t*x^4*y", D.xt_ring);
  claim(c, "relative Jacobian generators match the reference polynomials", match);

  Arc alpha = doc_arc(d, "alpha", 50);
  ValuationCriterion vc =
      valuation_criterion_test(deformation_velocity(D), gens, alpha);
  claim(c, "on the axis arc: v(h) = 5 exactly, generators {5, >= 50}",
        vc.h_val == Valuation::finite(5) && vc.gen_vals.size() == 2 &&
            vc.gen_vals[0] == Valuation::finite(5) &&
            vc.gen_vals[1] == Valuation::at_least(50));
  claim(c, "the weak inequality holds while the strict one fails",
        vc.weak == Outcome::Holds && vc.strict == Outcome::Fails);
}

// --- criterion 6: large quotients under the weighted order ----------------

void crit6(Claims& c) {
  Document d = load("brieskorn.germ");
  VarietyGerm W = doc_variety(d, "W");
  Polynomial Phi = doc_poly(d, "Phi");
  Polynomial f0 = doc_poly(d, "f0");
  Deformation D = doc_deformation(d, "ft");

  QuotientDim mp = mu(Phi, d.weights);
  claim(c, "Milnor number of the surface equation is 630",
        mp == QuotientDim::finite(630), "computed " + qd_str(mp));
  long orlik = oracles::milnor_orlik(WeightSystem{{2, 3, 5}, std::nullopt}, 30);
  claim(c, "the weighted product formula agrees", orlik == 630,
        "formula gives " + std::to_string(orlik));

  for (const Rational& t0 : {Rational(1, 5), Rational(1, 3)}) {
    Polynomial ft = specialize(D, t0);
    LeDetail ld = le(Phi, ft, d.weights);
    claim(c, "second relative polar number is 126 at t = " + t0.str(),
          ld.value == QuotientDim::finite(126),
          "total " + qd_str(ld.total) + " minus " + qd_str(ld.mu_phi));
  }

  claim(c, "multiplicity drops from 2 to 1 when t moves off 0",
        multiplicity(f0) == 2 && multiplicity(specialize(D, Rational(1, 5))) == 1);

  QuotientDim br = rel_number(f0, W, d.weights);
  claim(c, "relative number of the base germ is infinite",
        br == QuotientDim::infinite(), "computed " + qd_str(br));
}

// --- criterion 7: the additive identity and its stated digits -------------

void crit7(Claims& c) {
  Document d = load("cusp_n4.germ");
  VarietyGerm V = doc_variety(d, "V");
  Polynomial Phi = doc_poly(d, "Phi");
  Polynomial f0 = doc_poly(d, "f0");

  QuotientDim br = rel_number(f0, V, d.weights);
  QuotientDim m = mu(f0, d.weights);
  LeDetail ld = le(Phi, f0, d.weights);
  std::string got = "computed (" + qd_str(br) + ", " + qd_str(m) + ", " +
                    qd_str(ld.value) + ")";

  claim(c, "relative number = Milnor number + second polar number",
        br.is_finite() && m.is_finite() && ld.value.is_finite() &&
            br.count == m.count + ld.value.count,
        got);
  // Stated digits; the first and last entries are each one too small.
  claim(c, "the stated triple (7, 3, 4) is attained",
        br == QuotientDim::finite(7) && m == QuotientDim::finite(3) &&
            ld.value == QuotientDim::finite(4),
        got);
}

// --- criterion 8: quasihomogeneous bases with constant value and order ----

void crit8(Claims& c) {
  struct Case {
    const char* file;
    const char* deform;
    const char* variety;
    bool doc_samples_named;  // use samples S when present, default otherwise
    WeightSystem qh;
    long value;
  };
  const Case cases[] = {
      {"cusp_n4.germ", "F", "V", true, {{1, 2}, std::nullopt}, 8},
      {"swallowtail.germ", "F2", "V", true, {{2, 3, 4}, std::nullopt}, 5},
      {"qh_surface.germ", "F", "V", false, {{1, 2, 3}, std::nullopt}, 3},
  };
  for (const Case& k : cases) {
    Document d = load(k.file);
    VarietyGerm V = doc_variety(d, k.variety);
    Deformation D = doc_deformation(d, k.deform);
    SampleSet S = k.doc_samples_named ? doc_samples(d, "S") : default_sample_set();

    bool qh = is_quasihomogeneous(D.base, k.qh).has_value();
    ConstancyReport rep = mu_br_constancy(D, V, S, d.weights);
    bool constant = rep.constant;
    for (const auto& [t, v] : rep.values)
      constant = constant && v == QuotientDim::finite(k.value);
    bool mult = true;
    long m0 = multiplicity(D.base);
    for (const Rational& t : S.values)
      mult = mult && multiplicity(specialize(D, t)) == m0;

    claim(c, std::string("weighted-homogeneous base, value and multiplicity "
                         "constant: ") + k.file,
          qh && constant && mult);
  }
}

// --- criterion 9: randomized cross-validation against the oracles ---------

void crit9(Claims& c) {
  std::string diag;
  int f1 = oracles::check_quotient_dim_vs_macaulay(100, 20260815u, diag);
  claim(c, "quotient dimensions match dense jet counts (100 cases)", f1 == 0, diag);
  diag.clear();
  int f2 = oracles::check_milnor_coordinate_invariance(20, 31337u, diag);
  claim(c, "Milnor numbers survive linear coordinate changes (20 cases)",
        f2 == 0, diag);
  diag.clear();
  int f3 = oracles::check_nf_properties(200, 777u, diag);
  claim(c, "normal forms project onto the quotient (200 cases)", f3 == 0, diag);
  diag.clear();
  int f4 = oracles::check_mu_br_coordinate_fields(30, 424242u, diag);
  claim(c, "ambient variety with coordinate fields reduces to Milnor (30 cases)",
        f4 == 0, diag);
  diag.clear();
  int f5 = oracles::check_pruning_vs_brute_force(40, 999u, diag);
  claim(c, "pair pruning preserves the leading ideal (40 cases)", f5 == 0, diag);
}

// --- driver ----------------------------------------------------------------

struct Criterion {
  int id;
  const char* title;
  long limit_ms;
  void (*run)(Claims&);
  std::vector<std::string> expected_failing;
  const char* expected_reason;  // shown on the FAIL line
};

}  // namespace

int main() {
  const std::vector<Criterion> table = {
      {1, "conservation probe on a splitting family", 5000, crit1, {}, ""},
      {2, "the n + 3 figure for the cusp family", 10000, crit2,
       {"the stated value n + 3 is attained (n = 4)",
        "the stated value n + 3 is attained (n = 5)",
        "the stated value n + 3 is attained (n = 6)"},
       "the stated value n + 3 is off by one; computed n + 4"},
      {3, "an arc separating the strict from the weak test", 10000, crit3, {}, ""},
      {4, "the degenerate member of the surface family", 10000, crit4,
       {"the degenerate family keeps its value constant",
        "the velocity lies in the radical of the relative Jacobian ideal"},
       "the degenerate member is not value-constant and its velocity misses "
       "the radical; the arc refutation and the generic member stay green"},
      {5, "exact generators and valuations on the rescaling family", 2000,
       crit5, {}, ""},
      {6, "large quotients under the weighted order", 60000, crit6, {}, ""},
      {7, "the additive identity and its stated digits", 5000, crit7,
       {"the stated triple (7, 3, 4) is attained"},
       "the stated triple (7, 3, 4) miscounts; computed (8, 3, 5)"},
      {8, "quasihomogeneous bases with constant value and order", 5000, crit8,
       {}, ""},
      {9, "randomized cross-validation against the oracles", 60000, crit9, {}, ""},
  };

  int mismatches = 0;
  for (const Criterion& cr : table) {
    Claims claims;
    std::string aborted;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(claims);
    } catch (const std::exception& e) {
      aborted = e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();

    std::set<std::string> failing;
    for (const Claim& cl : claims)
      if (!cl.ok) failing.insert(cl.label);
    std::set<std::string> expected(cr.expected_failing.begin(),
                                   cr.expected_failing.end());

    bool on_expected_side = aborted.empty() && failing == expected;
    bool in_budget = ms <= cr.limit_ms;

    if (on_expected_side && in_budget) {
      if (expected.empty())
        std::cout << "[" << cr.id << "] PASS (" << ms << " ms) — " << cr.title
                  << "\n";
      else
        std::cout << "[" << cr.id << "] FAIL (expected: " << cr.expected_reason
                  << ") (" << ms << " ms) — " << cr.title << "\n";
      continue;
    }

    ++mismatches;
    std::cout << "[" << cr.id << "] UNEXPECTED (" << ms << " ms) — " << cr.title
              << "\n";
    if (!aborted.empty()) std::cout << "      aborted: " << aborted << "\n";
    if (!in_budget)
      std::cout << "      over budget: " << ms << " ms > " << cr.limit_ms
                << " ms\n";
    for (const Claim& cl : claims) {
      bool exp = expected.count(cl.label) > 0;
      if (cl.ok == !exp) continue;  // this claim landed as recorded
      std::cout << "      " << (cl.ok ? "unexpectedly holds: " : "fails: ")
                << cl.label;
      if (!cl.detail.empty()) std::cout << " [" << cl.detail << "]";
      std::cout << "\n";
    }
  }

  if (mismatches == 0) {
    std::cout << "acceptance: all 9 criteria on their recorded side\n";
    return 0;
  }
  std::cout << "acceptance: " << mismatches << " criterion(s) off their recorded side\n";
  return 1;
}
