#include "germinv/order.hpp"

namespace germinv {

MonomialOrder::MonomialOrder(OrderKind kind, std::optional<WeightSystem> weights)
    : kind_(kind), weights_(std::move(weights)) {
  const bool weighted =
      kind_ == OrderKind::WeightedGlobal || kind_ == OrderKind::WeightedLocal;
  if (weighted && !weights_)
    throw MathError("weighted monomial order requires a weight system");
  if (!weighted) weights_.reset();
}

long MonomialOrder::degree(const Monomial& m) const {
  if (!weights_) return m.total_degree();
  const auto& w = weights_->weights;
  long d = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i) d += w[i] * m.e[i];
  return d;
}

namespace {
// Reverse-lexicographic tiebreak shared by all kinds: the monomial whose
// exponent is smaller at the last differing position is the larger one.
int revlex_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.e.size(); i-- > 0;) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}
}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  long da = degree(a);
  long db = degree(b);
  if (da != db) {
    if (is_global()) return da < db ? -1 : 1;  // higher degree wins globally
    return da < db ? 1 : -1;                   // lower degree wins locally
  }
  return revlex_tiebreak(a, b);
}

std::string MonomialOrder::describe() const {
  auto wstr = [this]() {
    std::string s = "(";
    for (std::size_t i = 0; i < weights_->weights.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(weights_->weights[i]);
    }
    return s + ")";
  };
  switch (kind_) {
    case OrderKind::GlobalDegRevLex: return "global-degrevlex";
    case OrderKind::LocalNegDegRevLex: return "local-negdegrevlex";
    case OrderKind::WeightedGlobal: return "weighted-global" + wstr();
    case OrderKind::WeightedLocal: return "weighted-local" + wstr();
  }
  return "?";
}

}  // namespace germinv
