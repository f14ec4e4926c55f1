#pragma once

// Rooted simple chordal planar maps (ordinary generating functions in the
// number of edges).

#include <string>

#include "chordal/graphs.hpp"
#include "chordal/series.hpp"

namespace chordal {

/// D = 1 / (1 - z^2 D^4 (1 + S(z^3 D^6))); z marks edges minus one.
TruncatedSeries map_core_series(std::size_t order);
/// B = z D; z marks edges.
TruncatedSeries two_connected_maps_series(std::size_t order);
/// M = B(z (1 + M)^2).
TruncatedSeries all_maps_series(std::size_t order);

enum class MapFamily { two_connected_maps, all_maps };

std::string to_string(MapFamily f);
/// Accepts the CLI spellings: maps, 2conn-maps.
MapFamily parse_map_family(const std::string& s);

/// Counts for n = 1..n_max edges.
CountTable map_count_table(MapFamily family, unsigned n_max, std::size_t order);
inline CountTable map_count_table(MapFamily family, unsigned n_max) {
  return map_count_table(family, n_max, n_max);
}

}  // namespace chordal
