#include "chordal/graphs.hpp"

#include <stdexcept>

#include "chordal/recurrence.hpp"

namespace chordal {

TruncatedSeries ternary_series(std::size_t order) {
  RecurrenceSystem<Rational> sys;
  auto s = sys.unknown("S", 1);
  auto q = sys.add(sys.constant(Rational(1)), s);
  sys.define(s, sys.shift(sys.power(q, 3), 1));
  sys.solve(order);
  return sys.series(s);
}

TruncatedSeries rooted_triangulation_series(std::size_t order) {
  return shift(ternary_series(order), 1) * Rational(1, 2);
}

TruncatedSeries unrooted_triangulation_series(std::size_t order) {
  TruncatedSeries s = ternary_series(order);
  return shift(s - s * s, 3) * Rational(1, 24);
}

Integer count_3connected(unsigned n) {
  if (n < 4) throw std::domain_error("count_3connected: no 3-connected graph with fewer than 4 vertices");
  Integer r = binomial(n, 3) * factorial(3 * n - 9);
  return r / factorial(2 * n - 4);
}

namespace {

// E = y exp(x E^2 (1 + Sigma/2)), Sigma = x E^3 (1 + Sigma)^3, where Sigma
// stands for S(x E^3); this is the network equation with T(xE^3)/E expanded.
template <class C>
std::pair<BasicSeries<C>, BasicSeries<C>> network_system(std::size_t order, const C& y) {
  RecurrenceSystem<C> sys(Scaling::exponential);
  auto e = sys.unknown("E", 0);
  auto sigma = sys.unknown("Sigma", 1);
  auto one = sys.constant(C(1));
  auto e2 = sys.mul(e, e);
  auto e3 = sys.mul(e2, e);
  auto p = sys.add(one, sys.scale(sigma, C(Rational(1, 2))));
  auto q = sys.add(one, sigma);
  sys.define(e, sys.scale(sys.exp(sys.shift(sys.mul(e2, p), 1)), y));
  sys.define(sigma, sys.shift(sys.mul(e3, sys.power(q, 3)), 1));
  sys.solve(order);
  return {sys.series(e), sys.series(sigma)};
}

}  // namespace

BivariateSeries network_series(std::size_t order) {
  return network_system<YPoly>(order, YPoly::y()).first;
}

TruncatedSeries network_series_y1(std::size_t order) {
  return network_system<Rational>(order, Rational(1)).first;
}

TruncatedSeries two_connected_series_closed(std::size_t order) {
  auto [e, sigma] = network_system<Rational>(order, Rational(1));
  TruncatedSeries k = sigma * sigma + sigma * Rational(5) + TruncatedSeries::constant(8, order);
  TruncatedSeries e3 = e * e * e;
  return shift(e, 2) * Rational(1, 2) - shift(e3 * k, 3) * Rational(1, 24);
}

BivariateSeries two_connected_series_bivariate(std::size_t order) {
  BivariateSeries e = network_series(order);
  return shift(integrate_y(divide_by_y(e)), 2) * Rational(1, 2);
}

BivariateSeries connected_pointed_series(std::size_t order) {
  BivariateSeries bx = derivative(two_connected_series_bivariate(order + 1));
  auto phi = [&](const BivariateSeries& w) {
    return shift(exp(compose(bx, w)), 1);
  };
  return solve_fixed_point<YPoly>(phi, order);
}

BivariateSeries connected_series(std::size_t order) {
  BivariateSeries cp = connected_pointed_series(order);
  BivariateSeries c(order);
  for (std::size_t n = 1; n <= order; ++n) c[n] = cp[n] * Rational(1, static_cast<long>(n));
  return c;
}

BivariateSeries all_graphs_series(std::size_t order) { return exp(connected_series(order)); }

GraphSeriesY1 graph_series_y1(std::size_t order) {
  GraphSeriesY1 out;
  out.network = network_series_y1(order);
  out.two_connected = two_connected_series_closed(order);

  // C* = W with W = x exp(B'(W)). B'(u) is expanded in terms of E(u),
  // Sigma(u) and their u-derivatives, which in turn are expressed through
  // Eh = E(W) and Sh = Sigma(W) by differentiating their defining equations
  // (a 2x2 linear system, solved by Cramer's rule).
  using R = Rational;
  RecurrenceSystem<R> sys(Scaling::exponential);
  auto w = sys.unknown("W", 1);
  auto eh = sys.unknown("E(W)", 0);
  auto sh = sys.unknown("Sigma(W)", 1);
  auto one = sys.constant(R(1));
  auto e2 = sys.mul(eh, eh);
  auto e3 = sys.mul(e2, eh);
  auto p = sys.add(one, sys.scale(sh, R(1, 2)));
  auto q = sys.add(one, sh);
  auto q2 = sys.mul(q, q);
  auto q3 = sys.mul(q2, q);
  sys.define(eh, sys.exp(sys.mul(w, sys.mul(e2, p))));
  sys.define(sh, sys.mul(w, sys.mul(e3, q3)));

  auto a11 = sys.sub(one, sys.scale(sys.mul(w, sys.mul(e2, p)), R(2)));
  auto a12 = sys.scale(sys.mul(w, e3), R(-1, 2));
  auto a21 = sys.scale(sys.mul(w, sys.mul(e2, q3)), R(-3));
  auto a22 = sys.sub(one, sys.scale(sys.mul(w, sys.mul(e3, q2)), R(3)));
  auto r1 = sys.mul(e3, p);
  auto r2 = sys.mul(e3, q3);
  auto inv = sys.reciprocal(sys.sub(sys.mul(a11, a22), sys.mul(a12, a21)));
  auto ep = sys.mul(sys.sub(sys.mul(r1, a22), sys.mul(a12, r2)), inv);
  auto sp = sys.mul(sys.sub(sys.mul(a11, r2), sys.mul(a21, r1)), inv);

  auto k = sys.add(sys.add(sys.mul(sh, sh), sys.scale(sh, R(5))), sys.constant(R(8)));
  auto w2 = sys.mul(w, w);
  auto w3 = sys.mul(w2, w);
  auto t1 = sys.mul(w, eh);
  auto t2 = sys.scale(sys.mul(w2, ep), R(1, 2));
  auto t3 = sys.scale(sys.mul(w2, sys.mul(e3, k)), R(-1, 8));
  auto inner = sys.add(sys.scale(sys.mul(e2, sys.mul(ep, k)), R(3)),
                       sys.mul(e3, sys.mul(sys.add(sys.scale(sh, R(2)), sys.constant(R(5))), sp)));
  auto t4 = sys.scale(sys.mul(w3, inner), R(-1, 24));
  auto bprime = sys.add(sys.add(t1, t2), sys.add(t3, t4));
  sys.define(w, sys.shift(sys.exp(bprime), 1));
  sys.solve(order);

  out.connected_pointed = sys.series(w);
  out.connected = TruncatedSeries(order);
  for (std::size_t n = 1; n <= order; ++n) {
    out.connected[n] = out.connected_pointed[n] * R(1, static_cast<long>(n));
  }
  out.all = exp(out.connected);
  return out;
}

std::string to_string(GraphFamily f) {
  switch (f) {
    case GraphFamily::all: return "all";
    case GraphFamily::connected: return "connected";
    case GraphFamily::two_connected: return "2conn";
    case GraphFamily::three_connected: return "3conn";
    case GraphFamily::triangulations_unrooted: return "triangulations";
    case GraphFamily::networks: return "networks";
  }
  return "?";
}

GraphFamily parse_graph_family(const std::string& s) {
  for (GraphFamily f : {GraphFamily::all, GraphFamily::connected, GraphFamily::two_connected,
                        GraphFamily::three_connected, GraphFamily::triangulations_unrooted,
                        GraphFamily::networks}) {
    if (s == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown graph family '" + s + "'");
}

CountTable count_table(GraphFamily family, unsigned n_max, std::size_t order) {
  if (n_max > order) {
    throw std::invalid_argument("count_table: n_max " + std::to_string(n_max) +
                                " exceeds the truncation order " + std::to_string(order));
  }
  CountTable t{to_string(family), {}};
  std::vector<Integer> counts;
  switch (family) {
    case GraphFamily::three_connected:
      for (unsigned n = 1; n <= n_max; ++n) t.rows.emplace_back(n, n < 4 ? Integer(0) : count_3connected(n));
      return t;
    case GraphFamily::triangulations_unrooted:
      counts = egf_counts(unrooted_triangulation_series(order));
      break;
    case GraphFamily::networks:
      counts = egf_counts(network_series_y1(order));
      break;
    case GraphFamily::two_connected:
      counts = egf_counts(two_connected_series_closed(order));
      break;
    case GraphFamily::connected:
      counts = egf_counts(graph_series_y1(order).connected);
      break;
    case GraphFamily::all:
      counts = egf_counts(graph_series_y1(order).all);
      break;
  }
  for (unsigned n = 1; n <= n_max; ++n) t.rows.emplace_back(n, counts[n]);
  return t;
}

}  // namespace chordal
