#include "chordal/recurrence.hpp"

#include <algorithm>
#include <limits>

namespace chordal {

namespace {

constexpr std::size_t kNoValuation = std::numeric_limits<std::size_t>::max() / 4;

bool nil(const Rational& q) { return sgn(q) == 0; }
bool nil(const YPoly& p) { return p.is_zero(); }

Rational unit_inverse(const Rational& q) {
  if (nil(q)) throw SeriesError("recurrence: reciprocal of a series with zero constant term");
  return 1 / q;
}

YPoly unit_inverse(const YPoly& p) {
  if (p.is_zero() || !p.is_constant()) {
    throw SeriesError("recurrence: reciprocal needs a nonzero constant y^0 term");
  }
  return YPoly(Rational(1 / p[0]));
}

}  // namespace

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::push(Entry e) {
  if (solved_) throw SeriesError("recurrence: system already solved");
  nodes_.push_back(std::move(e));
  return nodes_.size() - 1;
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::constant(const BasicSeries<C>& s) {
  Entry e{.kind = Kind::constant};
  e.input = s;
  e.val = s.valuation();
  return push(std::move(e));
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::constant(const C& c) {
  return constant(BasicSeries<C>::constant(c, 0));
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::unknown(std::string name,
                                                                std::size_t valuation) {
  Entry e{.kind = Kind::unknown};
  e.name = std::move(name);
  e.val = valuation;
  return push(std::move(e));
}

template <class C>
void RecurrenceSystem<C>::define(Node unknown, Node rhs) {
  Entry& e = nodes_.at(unknown);
  if (e.kind != Kind::unknown) throw SeriesError("recurrence: define() on a non-unknown node");
  if (e.defined) throw SeriesError("recurrence: unknown '" + e.name + "' defined twice");
  e.a = rhs;
  e.defined = true;
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::add(Node a, Node b) {
  return push({.kind = Kind::add, .a = a, .b = b, .val = std::min(nodes_.at(a).val, nodes_.at(b).val)});
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::sub(Node a, Node b) {
  return push({.kind = Kind::sub, .a = a, .b = b, .val = std::min(nodes_.at(a).val, nodes_.at(b).val)});
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::scale(Node a, const C& k) {
  Entry e{.kind = Kind::scale, .a = a, .val = nodes_.at(a).val};
  e.k = k;
  return push(std::move(e));
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::mul(Node a, Node b) {
  const std::size_t v = std::min(nodes_.at(a).val + nodes_.at(b).val, kNoValuation);
  return push({.kind = Kind::mul, .a = a, .b = b, .val = v});
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::power(Node a, unsigned k) {
  if (k == 0) return constant(C(1));
  Node r = a;
  for (unsigned i = 1; i < k; ++i) r = mul(r, a);
  return r;
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::shift(Node a, std::size_t m) {
  return push({.kind = Kind::shift, .a = a, .m = m, .val = std::min(nodes_.at(a).val + m, kNoValuation)});
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::exp(Node a) {
  return push({.kind = Kind::exp, .a = a, .val = 0});
}

template <class C>
typename RecurrenceSystem<C>::Node RecurrenceSystem<C>::reciprocal(Node a) {
  return push({.kind = Kind::reciprocal, .a = a, .val = 0});
}

template <class C>
void RecurrenceSystem<C>::solve(std::size_t order) {
  if (solved_) throw SeriesError("recurrence: solve() called twice");
  for (const auto& e : nodes_) {
    if (e.kind == Kind::unknown && !e.defined) {
      throw SeriesError("recurrence: unknown '" + e.name + "' has no definition");
    }
    if (e.kind == Kind::constant && e.input.order() < order && e.input.order() != 0) {
      throw SeriesError("recurrence: constant input of order " + std::to_string(e.input.order()) +
                        " is shorter than the requested order " + std::to_string(order));
    }
  }
  order_ = order;
  binom_.assign(order + 1, {});
  factorial_.assign(order + 1, Rational(1));
  for (std::size_t n = 0; n <= order; ++n) {
    binom_[n].assign(n + 1, Rational(1));
    for (std::size_t k = 1; k < n; ++k) binom_[n][k] = binom_[n - 1][k - 1] + binom_[n - 1][k];
    if (n > 0) factorial_[n] = factorial_[n - 1] * static_cast<unsigned long>(n);
  }
  for (auto& e : nodes_) e.coeff.reserve(order + 1);

  for (std::size_t n = 0; n <= order; ++n) {
    for (Node id = 0; id < nodes_.size(); ++id) get(id, n);
  }
  solved_ = true;

  for (const auto& e : nodes_) {
    if (e.kind != Kind::unknown) continue;
    const auto& rhs = nodes_[e.a].coeff;
    for (std::size_t n = 0; n <= order; ++n) {
      if (!(rhs[n] == e.coeff[n])) {
        throw SeriesError("recurrence: unknown '" + e.name + "' is not a fixed point at order " +
                          std::to_string(n) + " (declared valuation " + std::to_string(e.val) +
                          " too high?)");
      }
    }
  }
}

template <class C>
const C& RecurrenceSystem<C>::get(Node id, std::size_t n) {
  Entry& e = nodes_[id];
  if (e.coeff.size() > n) return e.coeff[n];
  if (e.coeff.size() < n) {
    throw SeriesError("recurrence: internal ordering error at node " + std::to_string(id));
  }
  if (e.busy == static_cast<long>(n)) {
    throw SeriesError("recurrence: not a contraction; coefficient " + std::to_string(n) +
                      " of node " + std::to_string(id) +
                      (e.name.empty() ? std::string() : " ('" + e.name + "')") +
                      " depends on itself");
  }
  e.busy = static_cast<long>(n);
  C value = compute(id, n);
  e.busy = -1;
  e.coeff.push_back(std::move(value));
  return e.coeff[n];
}

template <class C>
C RecurrenceSystem<C>::compute(Node id, std::size_t n) {
  const bool scaled = scaling_ == Scaling::exponential;
  Entry& e = nodes_[id];
  switch (e.kind) {
    case Kind::constant: {
      if (n > e.input.order()) return C(0);
      return scaled ? C(e.input[n] * factorial_[n]) : C(e.input[n]);
    }
    case Kind::unknown:
      if (n < e.val) return C(0);
      return get(e.a, n);
    case Kind::add:
      return get(e.a, n) + get(e.b, n);
    case Kind::sub:
      return get(e.a, n) - get(e.b, n);
    case Kind::scale:
      return get(e.a, n) * e.k;
    case Kind::shift: {
      if (n < e.m) return C(0);
      C v = get(e.a, n - e.m);
      if (scaled) v *= Rational(factorial_[n] / factorial_[n - e.m]);
      return v;
    }
    case Kind::mul: {
      const Node a = e.a, b = e.b;
      const std::size_t va = nodes_[a].val, vb = nodes_[b].val;
      C acc(0);
      if (va + vb > n) return acc;
      for (std::size_t k = va; k + vb <= n; ++k) {
        const C& x = get(a, k);
        if (nil(x)) continue;
        const C& y = get(b, n - k);
        if (nil(y)) continue;
        if (scaled) {
          acc += (x * binom(n, k)) * y;
        } else {
          acc += x * y;
        }
      }
      return acc;
    }
    case Kind::exp: {
      const Node a = e.a;
      if (n == 0) {
        if (!nil(get(a, 0))) throw SeriesError("recurrence: exp of a series with nonzero constant term");
        return C(1);
      }
      C acc(0);
      for (std::size_t k = 1; k <= n; ++k) {
        const C& x = get(a, k);
        if (nil(x)) continue;
        const C& w = get(id, n - k);
        if (scaled) {
          acc += (x * binom(n - 1, k - 1)) * w;
        } else {
          acc += (x * Rational(static_cast<long>(k))) * w;
        }
      }
      if (!scaled) acc *= Rational(1, static_cast<long>(n));
      return acc;
    }
    case Kind::reciprocal: {
      const Node a = e.a;
      if (n == 0) {
        C inv = unit_inverse(get(a, 0));
        nodes_[id].k = inv;
        return inv;
      }
      C acc(0);
      for (std::size_t k = 1; k <= n; ++k) {
        const C& x = get(a, k);
        if (nil(x)) continue;
        const C& r = get(id, n - k);
        if (scaled) {
          acc += (x * binom(n, k)) * r;
        } else {
          acc += x * r;
        }
      }
      return -(acc * nodes_[id].k);
    }
  }
  throw SeriesError("recurrence: unknown node kind");
}

template <class C>
BasicSeries<C> RecurrenceSystem<C>::series(Node id) const {
  if (!solved_) throw SeriesError("recurrence: series() before solve()");
  const Entry& e = nodes_.at(id);
  BasicSeries<C> s(order_);
  for (std::size_t n = 0; n <= order_; ++n) {
    s[n] = scaling_ == Scaling::exponential ? C(e.coeff[n] * Rational(1 / factorial_[n])) : e.coeff[n];
  }
  return s;
}

template class RecurrenceSystem<Rational>;
template class RecurrenceSystem<YPoly>;

}  // namespace chordal
