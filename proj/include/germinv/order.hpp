// Monomial orders: global and local, plain and weighted.
//
// Global orders are well-orders (every variable beats 1) and drive Buchberger
// completion; local orders rank 1 above every variable and drive Mora
// completion. The "degree" of a monomial is its total degree for the plain
// kinds and its weighted degree for the weighted kinds; ties are always
// broken reverse-lexicographically (the last variable with a differing
// exponent decides, smaller exponent winning).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germinv/errors.hpp"
#include "germinv/monomial.hpp"

namespace germinv {

struct WeightSystem {
  std::vector<long> weights;            // one positive weight per variable
  std::optional<long> degree;           // expected quasihomogeneous degree

  void validate(std::size_t nvars) const {
    if (weights.size() != nvars)
      throw MathError("weight count does not match variable count");
    for (long w : weights)
      if (w < 1) throw MathError("weights must be positive integers");
  }
};

enum class OrderKind {
  GlobalDegRevLex,
  LocalNegDegRevLex,
  WeightedGlobal,
  WeightedLocal,
};

class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::optional<WeightSystem> weights = std::nullopt);

  static MonomialOrder global_degrevlex() {
    return MonomialOrder(OrderKind::GlobalDegRevLex);
  }
  static MonomialOrder local_negdegrevlex() {
    return MonomialOrder(OrderKind::LocalNegDegRevLex);
  }
  static MonomialOrder weighted_global(WeightSystem w) {
    return MonomialOrder(OrderKind::WeightedGlobal, std::move(w));
  }
  static MonomialOrder weighted_local(WeightSystem w) {
    return MonomialOrder(OrderKind::WeightedLocal, std::move(w));
  }

  OrderKind kind() const { return kind_; }
  bool is_global() const {
    return kind_ == OrderKind::GlobalDegRevLex || kind_ == OrderKind::WeightedGlobal;
  }
  const std::optional<WeightSystem>& weights() const { return weights_; }

  // Total degree for plain kinds, weighted degree for weighted kinds.
  long degree(const Monomial& m) const;

  // Three-way comparison: negative when a is smaller than b under the order,
  // zero when equal, positive when larger.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

 private:
  OrderKind kind_;
  std::optional<WeightSystem> weights_;
};

}  // namespace germinv
