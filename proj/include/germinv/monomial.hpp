// Exponent vectors (monomials) and the ambient polynomial ring descriptor.
#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "germinv/errors.hpp"

namespace germinv {

// A monomial x^e over a fixed ring, stored as its exponent vector. The vector
// length always equals the ring's variable count.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  bool is_constant() const {
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
  }
  long total_degree() const {
    return std::accumulate(e.begin(), e.end(), 0L);
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  bool coprime_with(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && m.e[i] > 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }
  // Exact quotient; caller guarantees m | *this.
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i)
      r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Structural (order-independent) comparison used as the canonical term-map
// key; plain lexicographic on the exponent vector.
struct MonomialStructuralLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.e < b.e;
  }
};

// Ambient ring: an ordered list of variable names. Rings are immutable and
// shared; two rings are interchangeable iff their variable lists coincide.
struct PolyRing {
  std::vector<std::string> vars;

  explicit PolyRing(std::vector<std::string> names) : vars(std::move(names)) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i].empty()) throw MathError("empty variable name");
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j])
          throw MathError("duplicate variable name '" + vars[i] + "'");
    }
  }

  std::size_t nvars() const { return vars.size(); }
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.vars == b.vars;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace germinv
