#include "germinv/families.hpp"

#include <algorithm>
#include <string>

namespace germinv {

namespace {

constexpr const char* kParam = "t";
constexpr const char* kFreshVar = "rab_u";

std::vector<Polynomial> drop_zeros(const std::vector<Polynomial>& ps) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

QuotientDim local_quotient(const std::vector<Polynomial>& raw_gens,
                           const std::optional<WeightSystem>& weights, long bound) {
  std::vector<Polynomial> gens = drop_zeros(raw_gens);
  if (gens.empty()) return QuotientDim::infinite();
  MonomialOrder ord = pick_local_order(weights, gens);
  return quotient_dimension(standard_basis(gens, ord), bound);
}

long require_finite(const QuotientDim& d, const std::string& what) {
  switch (d.kind) {
    case QuotientDim::Kind::Finite:
      return d.count;
    case QuotientDim::Kind::Infinite:
      throw MathError(what + " is infinite");
    default:
      throw BoundError(what + " exceeds the dimension bound");
  }
}

Polynomial translate(const Polynomial& p, const std::vector<Rational>& point) {
  const RingPtr& R = p.ring();
  if (point.size() != R->nvars())
    throw MathError("point has " + std::to_string(point.size()) +
                    " coordinates, ring has " + std::to_string(R->nvars()) +
                    " variables");
  std::map<int, Polynomial> sub;
  for (std::size_t i = 0; i < R->nvars(); ++i)
    sub[static_cast<int>(i)] =
        Polynomial::variable(R, i) + Polynomial::constant(R, point[i]);
  return p.substitute(sub);
}

}  // namespace

Deformation make_deformation(const Polynomial& F_xt) {
  const RingPtr& XT = F_xt.ring();
  const std::size_t m = XT->nvars();
  if (m < 2 || XT->vars.back() != kParam)
    throw MathError("deformation ring must end with the parameter variable t");
  for (const auto& [mono, c] : F_xt.terms()) {
    bool pure_t = true;
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (mono.e[i] > 0) {
        pure_t = false;
        break;
      }
    if (pure_t)
      throw MathError("deformation does not vanish at the origin for all t");
  }

  Deformation D;
  D.xt_ring = XT;
  D.xring = make_ring(std::vector<std::string>(XT->vars.begin(), XT->vars.end() - 1));
  D.F = F_xt;
  D.base = Polynomial::zero(D.xring);  // placeholder until specialize below
  D.base = specialize(D, Rational(0));
  return D;
}

Polynomial specialize(const Deformation& D, const Rational& t0) {
  std::map<int, Polynomial> sub;
  const std::size_t n = D.xring->nvars();
  for (std::size_t i = 0; i < n; ++i)
    sub[static_cast<int>(i)] = Polynomial::variable(D.xring, i);
  sub[static_cast<int>(n)] = Polynomial::constant(D.xring, t0);
  return D.F.substitute(sub);
}

Polynomial deformation_velocity(const Deformation& D) {
  return D.F.derivative(D.xring->nvars());
}

SampleSet make_sample_set(std::vector<Rational> values) {
  if (values.empty()) throw MathError("sample set is empty");
  bool has_zero = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) has_zero = true;
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j])
        throw MathError("sample values must be pairwise distinct");
  }
  if (!has_zero) throw MathError("sample set must contain 0");
  return SampleSet{std::move(values)};
}

SampleSet default_sample_set() {
  return make_sample_set({Rational(0), Rational(1, 7), Rational(1, 11), Rational(1, 2)});
}

std::vector<Polynomial> relative_jacobian(const Deformation& D, const VarietyGerm& V) {
  std::vector<Polynomial> out;
  out.reserve(V.theta.size());
  for (const auto& xi : V.theta) {
    VectorField lifted;
    lifted.components.reserve(D.xt_ring->nvars());
    for (const auto& c : xi.components)
      lifted.components.push_back(lift_to_ring(c, D.xt_ring));
    lifted.components.push_back(Polynomial::zero(D.xt_ring));  // no t motion
    out.push_back(apply_vector_field(D.F, lifted));
  }
  return out;
}

std::vector<Polynomial> relative_jacobian_at(const Deformation& D, const VarietyGerm& V,
                                             const Rational& t0) {
  Polynomial ft = specialize(D, t0);
  std::vector<Polynomial> out;
  out.reserve(V.theta.size());
  for (const auto& xi : V.theta) out.push_back(apply_vector_field(ft, xi));
  return out;
}

ConstancyReport mu_br_constancy(const Deformation& D, const VarietyGerm& V,
                                const SampleSet& S,
                                const std::optional<WeightSystem>& weights,
                                long bound) {
  if (V.theta.empty())
    throw MathError("variety supplies no tangent vector field generators");
  require_tangency(V);

  ConstancyReport rep{true, {}};
  rep.values.reserve(S.values.size());
  for (const auto& t0 : S.values)
    rep.values.emplace_back(t0, local_quotient(relative_jacobian_at(D, V, t0),
                                               weights, bound));
  for (const auto& [t0, d] : rep.values) {
    if (d.kind == QuotientDim::Kind::ExceedsBound)
      throw BoundError("family value at t = " + t0.str() +
                       " exceeds the dimension bound");
    if (!d.is_finite() || !(d == rep.values.front().second)) rep.constant = false;
  }
  return rep;
}

SplitCheck polar_split_check(const Deformation& D, const VarietyGerm& V,
                             const Rational& t0,
                             const std::vector<std::vector<Rational>>& extra_points,
                             const std::optional<WeightSystem>& weights, long bound) {
  if (t0.is_zero()) throw MathError("split check needs a nonzero parameter value");
  if (V.theta.empty())
    throw MathError("variety supplies no tangent vector field generators");
  require_tangency(V);

  SplitCheck out;
  out.base_value = require_finite(
      local_quotient(relative_jacobian_at(D, V, Rational(0)), weights, bound),
      "base family value");

  std::vector<Polynomial> gens_t = relative_jacobian_at(D, V, t0);
  out.local_at_origin =
      require_finite(local_quotient(gens_t, weights, bound),
                     "family value at the origin for t = " + t0.str());
  out.split = out.local_at_origin < out.base_value;

  if (!extra_points.empty()) {
    long sum = out.local_at_origin;
    bool all_finite = true;
    for (const auto& pt : extra_points) {
      std::vector<Polynomial> moved;
      moved.reserve(gens_t.size());
      for (const auto& g : gens_t) moved.push_back(translate(g, pt));
      QuotientDim d = local_quotient(moved, weights, bound);
      if (d.kind == QuotientDim::Kind::ExceedsBound)
        throw BoundError("family value at a supplied point exceeds the dimension bound");
      out.accounted.emplace_back(pt, d);
      if (d.is_finite())
        sum += d.count;
      else
        all_finite = false;
    }
    out.conserved = all_finite && sum == out.base_value;
  }
  return out;
}

RadicalResult radical_membership(const Polynomial& h,
                                 const std::vector<Polynomial>& gens, long k_max) {
  if (k_max < 1) throw MathError("k_max must be at least 1");
  for (const auto& g : gens)
    if (!same_ring(g.ring(), h.ring()))
      throw MathError("radical test inputs must share one ring");

  RadicalResult res{RadicalResult::Kind::FalseUpToKmax, 0, k_max};
  if (h.is_zero()) {
    res.kind = RadicalResult::Kind::MemberPower;
    res.witness_power = 1;
    return res;
  }
  std::vector<Polynomial> nz = drop_zeros(gens);
  if (nz.empty()) return res;

  // Local power test first: the conditions live in the local ring, where
  // membership can hold even when the polynomial-ring radical misses it.
  auto loc = MonomialOrder::local_negdegrevlex();
  StandardBasis sb = standard_basis(nz, loc);
  Polynomial hk = Polynomial::constant(h.ring(), Rational(1));
  for (long k = 1; k <= k_max; ++k) {
    hk *= h;
    if (normal_form(hk, sb.basis, loc).is_zero()) {
      res.kind = RadicalResult::Kind::MemberPower;
      res.witness_power = k;
      return res;
    }
  }

  // Rabinowitsch fallback in the polynomial ring.
  const RingPtr& R = h.ring();
  if (R->index_of(kFreshVar) >= 0)
    throw MathError("ring already uses the fresh variable name rab_u");
  std::vector<std::string> names = R->vars;
  names.push_back(kFreshVar);
  RingPtr U = make_ring(names);
  std::vector<Polynomial> ext;
  ext.reserve(nz.size() + 1);
  for (const auto& g : nz) ext.push_back(lift_to_ring(g, U));
  Polynomial one = Polynomial::constant(U, Rational(1));
  ext.push_back(one - Polynomial::variable(U, U->nvars() - 1) * lift_to_ring(h, U));

  auto glob = MonomialOrder::global_degrevlex();
  StandardBasis ext_sb = standard_basis(ext, glob);
  if (normal_form(one, ext_sb.basis, glob).is_zero())
    res.kind = RadicalResult::Kind::TrueByRabinowitsch;
  return res;
}

const char* arc_status_name(ArcStatus s) {
  return s == ArcStatus::RefutedWithWitness ? "refuted-with-witness"
                                            : "consistent-with-supplied-arcs";
}

ConditionReport condition_report(const Deformation& D, const VarietyGerm& V,
                                 const SampleSet& S, const std::vector<Arc>& arcs,
                                 const Rational& t0,
                                 const std::optional<WeightSystem>& weights,
                                 long k_max, long bound) {
  ConditionReport rep{
      mu_br_constancy(D, V, S, weights, bound),
      false,
      {},
      static_cast<long>(arcs.size()),
      ArcStatus::ConsistentWithSuppliedArcs,
      ArcStatus::ConsistentWithSuppliedArcs,
      ArcStatus::ConsistentWithSuppliedArcs,
      -1,
      -1,
      RadicalResult{RadicalResult::Kind::FalseUpToKmax, 0, k_max},
      false,
      SplitCheck{},
      t0,
      false};
  rep.c1_holds = rep.constancy.constant;

  Polynomial h = deformation_velocity(D);
  std::vector<Polynomial> gens = relative_jacobian(D, V);

  rep.arc_results.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    rep.arc_results.push_back(valuation_criterion_test(h, gens, arcs[i]));
    const auto& r = rep.arc_results.back();
    if (r.strict == Outcome::Fails && rep.c2 != ArcStatus::RefutedWithWitness) {
      rep.c2 = ArcStatus::RefutedWithWitness;
      rep.c2_witness = static_cast<int>(i);
    }
    if (r.weak == Outcome::Fails && rep.c3 != ArcStatus::RefutedWithWitness) {
      rep.c3 = rep.c4 = ArcStatus::RefutedWithWitness;
      rep.c34_witness = static_cast<int>(i);
    }
  }
  // Logical propagation: a refuted weak inequality refutes the strict one,
  // and (3_r) and (4_r) stand or fall together.
  if (rep.c3 == ArcStatus::RefutedWithWitness) {
    rep.c4 = ArcStatus::RefutedWithWitness;
    if (rep.c2 != ArcStatus::RefutedWithWitness) {
      rep.c2 = ArcStatus::RefutedWithWitness;
      rep.c2_witness = rep.c34_witness;
    }
  }

  rep.radical = radical_membership(h, gens, k_max);
  rep.c5_holds = rep.radical.member();

  rep.split = polar_split_check(D, V, t0, {}, weights, bound);
  rep.c6_holds = !rep.split.split;
  return rep;
}

}  // namespace germinv
