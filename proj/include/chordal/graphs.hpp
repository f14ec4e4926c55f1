#pragma once

// Generating functions for labelled chordal planar graphs.
//
// All graph series are exponential in x (vertices) and ordinary in y (edges).
// Series come in two flavours: bivariate (x, y) for moderate orders, and
// univariate at y = 1, computed by a composition-free recurrence that scales
// to a few hundred terms.

#include <string>
#include <utility>
#include <vector>

#include "chordal/series.hpp"

namespace chordal {

/// S = z (1 + S)^3.
TruncatedSeries ternary_series(std::size_t order);
/// T = z S / 2.
TruncatedSeries rooted_triangulation_series(std::size_t order);
/// U = z^3/24 (S - S^2).
TruncatedSeries unrooted_triangulation_series(std::size_t order);
/// binom(n,3) (3n-9)! / (2n-4)!; throws for n < 4.
Integer count_3connected(unsigned n);

/// E(x,y) = y exp(x E^2 + T(x E^3) / E).
BivariateSeries network_series(std::size_t order);
/// E(x,1), computed directly without the y variable.
TruncatedSeries network_series_y1(std::size_t order);

/// B(x) at y = 1 from the closed expression in E and S(x E^3).
TruncatedSeries two_connected_series_closed(std::size_t order);
/// B(x,y) = x^2/2 * integral_0^y E(x,t)/t dt.
BivariateSeries two_connected_series_bivariate(std::size_t order);

/// C*(x,y) = x exp(B_x(C*(x,y), y)). Substitution-based; intended for small orders.
BivariateSeries connected_pointed_series(std::size_t order);
/// C = integral of C* / x in x.
BivariateSeries connected_series(std::size_t order);
/// G = exp(C).
BivariateSeries all_graphs_series(std::size_t order);

/// Univariate (y = 1) counterparts of the three series above, by recurrence.
struct GraphSeriesY1 {
  TruncatedSeries network;       // E(x)
  TruncatedSeries two_connected; // B(x)
  TruncatedSeries connected_pointed;
  TruncatedSeries connected;
  TruncatedSeries all;
};
GraphSeriesY1 graph_series_y1(std::size_t order);

enum class GraphFamily { all, connected, two_connected, three_connected, triangulations_unrooted, networks };

std::string to_string(GraphFamily f);
/// Accepts the CLI spellings: all, connected, 2conn, 3conn, triangulations, networks.
GraphFamily parse_graph_family(const std::string& s);

struct CountTable {
  std::string family;
  std::vector<std::pair<unsigned, Integer>> rows;
};

/// Counts for n = 1..n_max. `order` is the series truncation order (>= n_max).
CountTable count_table(GraphFamily family, unsigned n_max, std::size_t order);
inline CountTable count_table(GraphFamily family, unsigned n_max) {
  return count_table(family, n_max, n_max);
}

}  // namespace chordal
