#include "germinv/polynomial.hpp"

#include <algorithm>

namespace germinv {

namespace {
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b))
    throw MathError(std::string("ring mismatch in ") + what);
}
}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->nvars()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= ring->nvars())
    throw MathError("variable index out of range");
  Polynomial p(std::move(ring));
  Monomial m(p.ring_->nvars());
  m.e[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (m.nvars() != p.ring_->nvars())
    throw MathError("monomial arity does not match ring");
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(ring_->nvars()));
  return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

long Polynomial::order_at_origin() const {
  if (is_zero()) throw MathError("order of the zero polynomial is undefined");
  long d = -1;
  for (const auto& [m, c] : terms_) {
    long t = m.total_degree();
    if (d < 0 || t < d) d = t;
  }
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "addition");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "subtraction");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "multiplication");
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::pow(long k) const {
  if (k < 0) throw MathError("negative exponent");
  Polynomial acc = Polynomial::constant(ring_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& ord) const {
  if (is_zero()) throw MathError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || static_cast<std::size_t>(var) >= ring_->nvars())
    throw MathError("derivative variable index out of range");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    int k = m.e[var];
    if (k == 0) continue;
    Monomial d(m);
    d.e[var] -= 1;
    r.add_term(d, c * Rational(k));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& assignment) const {
  RingPtr target = ring_;
  for (const auto& [idx, val] : assignment) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= ring_->nvars())
      throw MathError("substitution index out of range");
    if (target == ring_ && !same_ring(val.ring(), ring_)) target = val.ring();
  }
  for (const auto& [idx, val] : assignment)
    require_same_ring(val.ring(), target, "substitution");

  // Images of all variables in the target ring.
  std::vector<Polynomial> image(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    auto it = assignment.find(static_cast<int>(i));
    if (it != assignment.end()) {
      image[i] = it->second;
    } else {
      int j = target->index_of(ring_->vars[i]);
      if (j < 0)
        throw MathError("variable '" + ring_->vars[i] +
                        "' has no image in the substitution target ring");
      image[i] = Polynomial::variable(target, j);
    }
  }

  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (m.e[i] > 0) t *= image[i].pow(m.e[i]);
    result += t;
  }
  return result;
}

Polynomial Polynomial::substitute_scalars(const std::map<int, Rational>& assignment) const {
  std::map<int, Polynomial> polys;
  for (const auto& [idx, c] : assignment)
    polys.emplace(idx, Polynomial::constant(ring_, c));
  return substitute(polys);
}

std::string Polynomial::str(const MonomialOrder& ord) const {
  if (is_zero()) return "0";
  std::vector<const TermMap::value_type*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&ord](const auto* a, const auto* b) {
              return ord.greater(a->first, b->first);
            });

  std::string out;
  bool first = true;
  for (const auto* t : sorted) {
    const Rational& c = t->second;
    const Monomial& m = t->first;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string monostr;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!monostr.empty()) monostr += "*";
      monostr += ring_->vars[i];
      if (m.e[i] > 1) monostr += "^" + std::to_string(m.e[i]);
    }
    if (monostr.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += monostr;
    } else {
      out += mag.str() + "*" + monostr;
    }
  }
  return out;
}

Polynomial lift_to_ring(const Polynomial& p, const RingPtr& target) {
  if (same_ring(p.ring(), target)) return p;
  std::vector<int> map(p.ring()->nvars());
  for (std::size_t i = 0; i < p.ring()->nvars(); ++i) {
    int j = target->index_of(p.ring()->vars[i]);
    if (j < 0)
      throw MathError("variable '" + p.ring()->vars[i] +
                      "' does not exist in the target ring");
    map[i] = j;
  }
  Polynomial r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial lifted(target->nvars());
    for (std::size_t i = 0; i < map.size(); ++i) lifted.e[map[i]] = m.e[i];
    r.add_term(lifted, c);
  }
  return r;
}

}  // namespace germinv
