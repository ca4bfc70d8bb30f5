#include "germinv/invariants.hpp"

#include <string>

namespace germinv {

namespace {

std::vector<Polynomial> drop_zeros(const std::vector<Polynomial>& ps) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

// Weighted degree shared by every monomial of f, if there is one.
std::optional<long> common_weighted_degree(const Polynomial& f,
                                           const std::vector<long>& weights) {
  std::optional<long> deg;
  for (const auto& [m, c] : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i) d += weights[i] * m.e[i];
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

}  // namespace

std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
  std::vector<Polynomial> out;
  const std::size_t n = f.ring()->nvars();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.derivative(i));
  return out;
}

QuotientDim milnor_number(const Polynomial& f, const MonomialOrder& ord,
                          long bound) {
  if (!f.is_zero() && !f.constant_term().is_zero())
    throw MathError("milnor number requires a germ vanishing at the origin");
  std::vector<Polynomial> gens = drop_zeros(jacobian_ideal(f));
  if (gens.empty()) return QuotientDim::infinite();
  return quotient_dimension(standard_basis(gens, ord), bound);
}

long multiplicity(const Polynomial& f) {
  if (f.is_zero()) throw MathError("multiplicity of the zero polynomial");
  return f.order_at_origin();
}

Polynomial apply_vector_field(const Polynomial& f, const VectorField& xi) {
  const std::size_t n = f.ring()->nvars();
  if (xi.components.size() != n)
    throw MathError("vector field has " + std::to_string(xi.components.size()) +
                    " components, ring has " + std::to_string(n) + " variables");
  Polynomial acc = Polynomial::zero(f.ring());
  for (std::size_t i = 0; i < n; ++i) {
    if (!same_ring(xi.components[i].ring(), f.ring()))
      throw MathError("vector field component in a different ring");
    acc += f.derivative(i) * xi.components[i];
  }
  return acc;
}

namespace {

// Membership of p in the ideal of eqs: polynomial-ring division first (it is
// cheap and implies local membership), then the local ring if that fails.
bool in_equation_ideal(const Polynomial& p, const std::vector<Polynomial>& eqs) {
  if (p.is_zero()) return true;
  auto glob = MonomialOrder::global_degrevlex();
  if (normal_form(p, standard_basis(eqs, glob).basis, glob).is_zero())
    return true;
  auto loc = MonomialOrder::local_negdegrevlex();
  return normal_form(p, standard_basis(eqs, loc).basis, loc).is_zero();
}

}  // namespace

bool check_tangency(const Polynomial& phi, const VectorField& xi) {
  if (phi.is_zero()) throw MathError("tangency against the zero polynomial");
  Polynomial g = apply_vector_field(phi, xi);
  if (g.is_zero()) return true;
  auto glob = MonomialOrder::global_degrevlex();
  return normal_form(g, {phi}, glob).is_zero();
}

std::optional<TangencyFailure> find_tangency_failure(const VarietyGerm& V) {
  if (V.equations.empty()) return std::nullopt;
  for (std::size_t i = 0; i < V.theta.size(); ++i)
    for (std::size_t j = 0; j < V.equations.size(); ++j) {
      Polynomial g = apply_vector_field(V.equations[j], V.theta[i]);
      if (!in_equation_ideal(g, V.equations))
        return TangencyFailure{static_cast<int>(i), static_cast<int>(j)};
    }
  return std::nullopt;
}

void require_tangency(const VarietyGerm& V) {
  if (auto fail = find_tangency_failure(V))
    throw MathError("vector field generator " +
                    std::to_string(fail->field_index + 1) +
                    " is not tangent to variety equation " +
                    std::to_string(fail->equation_index + 1));
}

QuotientDim bruce_roberts_number(const Polynomial& f, const VarietyGerm& V,
                                 const MonomialOrder& ord, long bound) {
  if (!f.is_zero() && !f.constant_term().is_zero())
    throw MathError("bruce-roberts number requires a germ vanishing at the origin");
  if (V.theta.empty())
    throw MathError("variety supplies no tangent vector field generators");
  require_tangency(V);
  std::vector<Polynomial> raw;
  raw.reserve(V.theta.size());
  for (const auto& xi : V.theta) raw.push_back(apply_vector_field(f, xi));
  std::vector<Polynomial> gens = drop_zeros(raw);
  if (gens.empty()) return QuotientDim::infinite();
  return quotient_dimension(standard_basis(gens, ord), bound);
}

LeDetail le_milnor_number(const Polynomial& phi, const Polynomial& f,
                          const MonomialOrder& ord, long bound) {
  if (!same_ring(phi.ring(), f.ring()))
    throw MathError("le number inputs must share one ring");
  if (phi.is_zero() || !phi.constant_term().is_zero())
    throw MathError("le number requires a hypersurface germ vanishing at the origin");
  if (f.is_zero() || !f.constant_term().is_zero())
    throw MathError("le number requires a germ vanishing at the origin");

  LeDetail d{QuotientDim::infinite(), milnor_number(phi, ord, bound),
             QuotientDim::infinite()};
  if (d.mu_phi.kind == QuotientDim::Kind::Infinite)
    throw MathError("le number requires an isolated hypersurface singularity");

  std::vector<Polynomial> dphi = jacobian_ideal(phi);
  std::vector<Polynomial> df = jacobian_ideal(f);
  std::vector<Polynomial> gens = {phi};
  const std::size_t n = phi.ring()->nvars();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      gens.push_back(dphi[j] * df[k] - dphi[k] * df[j]);
  gens = drop_zeros(gens);
  d.total = gens.empty() ? QuotientDim::infinite()
                         : quotient_dimension(standard_basis(gens, ord), bound);

  if (d.mu_phi.kind == QuotientDim::Kind::ExceedsBound ||
      d.total.kind == QuotientDim::Kind::ExceedsBound)
    d.value = QuotientDim::exceeds();
  else if (d.total.kind == QuotientDim::Kind::Infinite)
    d.value = QuotientDim::infinite();
  else
    d.value = QuotientDim::finite(d.total.count - d.mu_phi.count);
  return d;
}

std::optional<long> is_quasihomogeneous(const Polynomial& f, const WeightSystem& w) {
  if (f.is_zero()) throw MathError("quasihomogeneity of the zero polynomial");
  w.validate(f.ring()->nvars());
  auto deg = common_weighted_degree(f, w.weights);
  if (!deg) return std::nullopt;
  if (w.degree && *w.degree != *deg) return std::nullopt;
  return deg;
}

MonomialOrder pick_local_order(const std::optional<WeightSystem>& w,
                               const std::vector<Polynomial>& gens) {
  if (!w || gens.empty()) return MonomialOrder::local_negdegrevlex();
  w->validate(gens.front().ring()->nvars());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!common_weighted_degree(g, w->weights))
      return MonomialOrder::local_negdegrevlex();
  }
  WeightSystem pure = *w;
  pure.degree.reset();
  return MonomialOrder::weighted_local(pure);
}

}  // namespace germinv
