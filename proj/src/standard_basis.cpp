#include "germinv/standard_basis.hpp"

#include <algorithm>
#include <optional>

namespace germinv {

namespace {

// Kernel representation: terms strictly descending under the active order.
struct OP {
  std::vector<std::pair<Monomial, Rational>> t;

  bool empty() const { return t.empty(); }
  const Monomial& lm() const { return t.front().first; }
  const Rational& lc() const { return t.front().second; }
};

OP to_op(const Polynomial& p, const MonomialOrder& ord) {
  OP r;
  r.t.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) r.t.emplace_back(m, c);
  std::sort(r.t.begin(), r.t.end(), [&ord](const auto& a, const auto& b) {
    return ord.greater(a.first, b.first);
  });
  return r;
}

Polynomial from_op(const OP& h, const RingPtr& ring) {
  Polynomial p(ring);
  for (const auto& [m, c] : h.t) p.add_term(m, c);
  return p;
}

long max_degree(const OP& h, const MonomialOrder& ord) {
  long d = 0;
  for (const auto& [m, c] : h.t) d = std::max(d, ord.degree(m));
  return d;
}

// ecart = deg(p) - deg(lm(p)); zero for (weighted-)homogeneous elements and
// always zero under global degree-compatible orders.
long ecart(const OP& h, const MonomialOrder& ord) {
  return max_degree(h, ord) - ord.degree(h.lm());
}

void make_monic(OP& h) {
  if (h.empty() || h.lc().is_one()) return;
  Rational inv = Rational(1) / h.lc();
  for (auto& [m, c] : h.t) c *= inv;
}

// a[from..] - coef * x^shift * b[bfrom..], both inputs sorted, result sorted.
OP merge_axpy(const OP& a, std::size_t from, const OP& b, std::size_t bfrom,
              const Rational& coef, const Monomial& shift, const MonomialOrder& ord) {
  OP r;
  r.t.reserve(a.t.size() - from + b.t.size() - bfrom);
  std::size_t i = from, j = bfrom;
  while (i < a.t.size() && j < b.t.size()) {
    Monomial bm = b.t[j].first * shift;
    int cmp = ord.compare(a.t[i].first, bm);
    if (cmp > 0) {
      r.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      r.t.emplace_back(std::move(bm), -(coef * b.t[j].second));
      ++j;
    } else {
      Rational c = a.t[i].second - coef * b.t[j].second;
      if (!c.is_zero()) r.t.emplace_back(a.t[i].first, c);
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j)
    r.t.emplace_back(b.t[j].first * shift, -(coef * b.t[j].second));
  return r;
}

// One top-reduction step of h by g (g monic not required): cancels lm(h).
OP reduce_step(const OP& h, const OP& g, const MonomialOrder& ord) {
  Rational coef = h.lc() / g.lc();
  Monomial shift = h.lm() / g.lm();
  return merge_axpy(h, 1, g, 1, coef, shift, ord);
}

// Fully tail-reduced division remainder (canonical against a Groebner basis).
OP global_nf(OP h, const std::vector<OP>& basis, const MonomialOrder& ord) {
  OP out;
  while (!h.empty()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.lm().divides(h.lm())) {
        h = reduce_step(h, g, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.t.push_back(h.t.front());
      h.t.erase(h.t.begin());
    }
  }
  return out;
}

// Mora weak normal form. The reducer set T starts as the basis and grows by
// intermediate results whenever the selected reducer has strictly larger
// ecart; selection is ecart-minimal with ties by position in T.
OP mora_nf(OP h, const std::vector<OP>& basis, const MonomialOrder& ord) {
  struct Red {
    OP p;
    long ecart;
  };
  std::vector<Red> T;
  T.reserve(basis.size() + 8);
  for (const auto& g : basis) T.push_back({g, ecart(g, ord)});

  while (!h.empty()) {
    int best = -1;
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (!T[k].p.lm().divides(h.lm())) continue;
      if (best < 0 || T[k].ecart < T[static_cast<std::size_t>(best)].ecart)
        best = static_cast<int>(k);
    }
    if (best < 0) return h;
    long eh = ecart(h, ord);
    if (T[static_cast<std::size_t>(best)].ecart > eh) T.push_back({h, eh});
    h = reduce_step(h, T[static_cast<std::size_t>(best)].p, ord);
  }
  return h;
}

OP nf_dispatch(OP h, const std::vector<OP>& basis, const MonomialOrder& ord) {
  return ord.is_global() ? global_nf(std::move(h), basis, ord)
                         : mora_nf(std::move(h), basis, ord);
}

// lead-cancelling S-polynomial of monic f, g.
OP spoly(const OP& f, const OP& g, const Monomial& lcm, const MonomialOrder& ord) {
  // x^(lcm-lm f) f - x^(lcm-lm g) g; leads cancel exactly since both monic.
  OP shifted_f;
  shifted_f.t.reserve(f.t.size());
  Monomial sf = lcm / f.lm();
  for (const auto& [m, c] : f.t) shifted_f.t.emplace_back(m * sf, c);
  return merge_axpy(shifted_f, 1, g, 1, Rational(1), lcm / g.lm(), ord);
}

struct Pair {
  int i, j;  // i < j
  Monomial lcm;
};

class Completion {
 public:
  Completion(const MonomialOrder& ord) : ord_(ord) {}

  // Gebauer-Moller update: prune existing pairs against the newcomer, build
  // the newcomer's pairs with the M/F/product criteria, then install it.
  void add(OP g) {
    const int ell = static_cast<int>(G.size());
    const Monomial& lmn = g.lm();

    // Chain-prune old pairs: (i,j) is useless once lm(new) strictly refines
    // its lcm and neither replacement pair shares that lcm.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lmn.divides(p.lcm)) return false;
      return Monomial::lcm(G[static_cast<std::size_t>(p.i)].lm(), lmn) != p.lcm &&
             Monomial::lcm(G[static_cast<std::size_t>(p.j)].lm(), lmn) != p.lcm;
    });

    // Candidate pairs (i, ell).
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool dead = false;
    };
    std::vector<Cand> cands;
    cands.reserve(G.size());
    for (int i = 0; i < ell; ++i) {
      const Monomial& lmi = G[static_cast<std::size_t>(i)].lm();
      cands.push_back({i, Monomial::lcm(lmi, lmn), lmi.coprime_with(lmn)});
    }
    // M criterion: drop candidates whose lcm is strictly divided by another's.
    for (auto& a : cands)
      for (const auto& b : cands) {
        if (a.dead || a.i == b.i) continue;
        if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
          a.dead = true;
          break;
        }
      }
    // F criterion: one representative per lcm — unless some member of the
    // group is coprime (product criterion kills the whole group).
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (cands[x].dead) continue;
      bool coprime_in_group = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y) {
        if (cands[y].dead || cands[y].lcm != cands[x].lcm) continue;
        coprime_in_group = coprime_in_group || cands[y].coprime;
        cands[y].dead = true;  // keep the lowest index only
      }
      if (coprime_in_group) cands[x].dead = true;
    }
    for (const auto& c : cands)
      if (!c.dead) pairs_.push_back({c.i, ell, c.lcm});

    G.push_back(std::move(g));
  }

  // Normal strategy: lcm of minimal (weighted) degree first. Under a global
  // degree order that is exactly the order-minimal lcm; under a local order
  // degree-minimal is the sane reading (the raw order would invert it).
  // Degree ties fall back to the order's own tiebreak, then to the pair
  // indices, so selection is fully deterministic.
  std::optional<Pair> pop() {
    if (pairs_.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      long dk = ord_.degree(pairs_[k].lcm);
      long db = ord_.degree(pairs_[best].lcm);
      bool better;
      if (dk != db) {
        better = dk < db;
      } else {
        int cmp = ord_.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (cmp != 0) {
          better = ord_.is_global() ? cmp < 0 : cmp > 0;
        } else {
          better = std::pair(pairs_[k].i, pairs_[k].j) <
                   std::pair(pairs_[best].i, pairs_[best].j);
        }
      }
      if (better) best = k;
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  std::vector<OP> G;

 private:
  const MonomialOrder& ord_;
  std::vector<Pair> pairs_;
};

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
  if (basis.empty()) throw MathError("normal form needs at least one reducer");
  std::vector<OP> B;
  B.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw MathError("zero polynomial in reducer list");
    if (!same_ring(g.ring(), p.ring()))
      throw MathError("ring mismatch in normal form");
    B.push_back(to_op(g, ord));
  }
  return from_op(nf_dispatch(to_op(p, ord), B, ord), p.ring());
}

StandardBasis standard_basis(const std::vector<Polynomial>& gens,
                             const MonomialOrder& ord) {
  if (gens.empty()) throw MathError("empty generator list");
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens) {
    if (g.is_zero())
      throw MathError("zero polynomial in generator list is an input error");
    if (!same_ring(g.ring(), ring))
      throw MathError("generators must share one ring");
  }

  Completion comp(ord);
  for (const auto& g : gens) {
    OP op = to_op(g, ord);
    make_monic(op);
    comp.add(std::move(op));
  }

  while (auto pr = comp.pop()) {
    OP s = spoly(comp.G[static_cast<std::size_t>(pr->i)],
                 comp.G[static_cast<std::size_t>(pr->j)], pr->lcm, ord);
    if (s.empty()) continue;
    OP r = nf_dispatch(std::move(s), comp.G, ord);
    if (r.empty()) continue;
    make_monic(r);
    comp.add(std::move(r));
  }

  StandardBasis sb{ord, gens, {}, {}};
  sb.basis.reserve(comp.G.size());
  for (const auto& g : comp.G) {
    sb.basis.push_back(from_op(g, ring));
    sb.leading_ideal.insert(g.lm());
  }
  return sb;
}

bool ideal_membership(const Polynomial& p, const StandardBasis& sb) {
  if (p.is_zero()) return true;
  return normal_form(p, sb.basis, sb.order).is_zero();
}

QuotientDim quotient_dimension(const StandardBasis& sb, long bound) {
  if (sb.basis.empty()) throw MathError("quotient of an empty basis");
  const std::size_t n = sb.basis.front().ring()->nvars();

  // Minimal generators of the leading ideal.
  std::vector<Monomial> mins;
  for (const auto& m : sb.leading_ideal) {
    bool dominated = false;
    for (const auto& other : sb.leading_ideal)
      if (other != m && other.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) mins.push_back(m);
  }

  // Finiteness: every variable needs a pure power (the constant monomial, if
  // present, counts as the zeroth power of every variable).
  std::vector<int> box(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : mins) {
      bool pure = true;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && g.e[k] > 0) {
          pure = false;
          break;
        }
      if (pure && (box[i] < 0 || g.e[i] < box[i])) box[i] = g.e[i];
    }
    if (box[i] < 0) return QuotientDim::infinite();
  }

  // Depth-first walk over the staircase box. At depth k, once the prefix
  // (e_0..e_k) is divisible by a generator supported on the first k+1
  // variables, every larger e_k is too — so the loop breaks early.
  long count = 0;
  Monomial cur(n);
  bool exceeded = false;
  auto dominated_prefix = [&](std::size_t upto) {
    for (const auto& g : mins) {
      bool applies = true;
      for (std::size_t k = upto; k < n; ++k)
        if (g.e[k] > 0) {
          applies = false;
          break;
        }
      if (!applies) continue;
      bool div = true;
      for (std::size_t k = 0; k < upto; ++k)
        if (g.e[k] > cur.e[k]) {
          div = false;
          break;
        }
      if (div) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (exceeded) return;
    if (depth == n) {
      if (++count > bound) exceeded = true;
      return;
    }
    for (int v = 0; v < box[depth]; ++v) {
      cur.e[depth] = v;
      if (dominated_prefix(depth + 1)) break;
      self(self, depth + 1);
      if (exceeded) return;
    }
    cur.e[depth] = 0;
  };
  // A constant monomial in the ideal kills everything: dimension 0.
  for (const auto& g : mins)
    if (g.is_constant()) return QuotientDim::finite(0);
  rec(rec, 0);
  if (exceeded) return QuotientDim::exceeds();
  return QuotientDim::finite(count);
}

}  // namespace germinv
