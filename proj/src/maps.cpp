#include "chordal/maps.hpp"

#include <stdexcept>

#include "chordal/recurrence.hpp"

namespace chordal {

namespace {

using R = Rational;
using Node = RecurrenceSystem<R>::Node;

// Adds D(u) = 1/(1 - u^2 D^4 (1 + Sigma)), Sigma = u^3 D^6 (1 + Sigma)^3 to
// `sys`, where Sigma stands for S(u^3 D^6). Returns the node of D.
Node add_core(RecurrenceSystem<R>& sys, Node u) {
  auto d = sys.unknown("D", 0);
  auto sigma = sys.unknown("Sigma", 3);
  auto one = sys.constant(R(1));
  auto d2 = sys.mul(d, d);
  auto d4 = sys.mul(d2, d2);
  auto d6 = sys.mul(d4, d2);
  auto u2 = sys.mul(u, u);
  auto u3 = sys.mul(u2, u);
  auto q = sys.add(one, sigma);
  sys.define(sigma, sys.mul(u3, sys.mul(d6, sys.power(q, 3))));
  sys.define(d, sys.reciprocal(sys.sub(one, sys.mul(u2, sys.mul(d4, q)))));
  return d;
}

}  // namespace

TruncatedSeries map_core_series(std::size_t order) {
  RecurrenceSystem<R> sys;
  auto z = sys.constant(TruncatedSeries::variable(order));
  auto d = add_core(sys, z);
  sys.solve(order);
  return sys.series(d);
}

TruncatedSeries two_connected_maps_series(std::size_t order) {
  return shift(map_core_series(order), 1);
}

TruncatedSeries all_maps_series(std::size_t order) {
  // M = u D(u) with u = z (1 + M)^2.
  RecurrenceSystem<R> sys;
  auto m = sys.unknown("M", 1);
  auto q = sys.add(sys.constant(R(1)), m);
  auto u = sys.shift(sys.mul(q, q), 1);
  auto d = add_core(sys, u);
  sys.define(m, sys.mul(u, d));
  sys.solve(order);
  return sys.series(m);
}

std::string to_string(MapFamily f) {
  return f == MapFamily::all_maps ? "maps" : "2conn-maps";
}

MapFamily parse_map_family(const std::string& s) {
  if (s == "maps") return MapFamily::all_maps;
  if (s == "2conn-maps") return MapFamily::two_connected_maps;
  throw std::invalid_argument("unknown map family '" + s + "'");
}

CountTable map_count_table(MapFamily family, unsigned n_max, std::size_t order) {
  if (n_max > order) {
    throw std::invalid_argument("map_count_table: n_max " + std::to_string(n_max) +
                                " exceeds the truncation order " + std::to_string(order));
  }
  TruncatedSeries s = family == MapFamily::all_maps ? all_maps_series(order) : two_connected_maps_series(order);
  auto counts = ogf_counts(s);
  CountTable t{to_string(family), {}};
  for (unsigned n = 1; n <= n_max; ++n) t.rows.emplace_back(n, counts[n]);
  return t;
}

}  // namespace chordal
