#pragma once

// Exhaustive enumeration of small labelled graphs. Shares no code with the
// generating-function pipeline: graphs are bitmasks and counts are machine
// integers.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chordal::oracle {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kMaxVertices = 8;
inline constexpr unsigned kMaxCensus = 6;

/// Simple undirected graph on vertices 0..n-1. Bit k of `edges` is the k-th
/// pair in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
struct SmallGraph {
  unsigned n = 0;
  std::uint32_t edges = 0;

  static unsigned pair_count(unsigned n) { return n * (n - 1) / 2; }
  static unsigned pair_index(unsigned n, unsigned i, unsigned j);

  static SmallGraph complete(unsigned n);
  static SmallGraph cycle(unsigned n);

  bool has_edge(unsigned i, unsigned j) const;
  void add_edge(unsigned i, unsigned j);
  void remove_edge(unsigned i, unsigned j);
  unsigned edge_count() const;
  /// adjacency()[v] is the neighbour set of v as a bitmask.
  std::array<std::uint8_t, kMaxVertices> adjacency() const;
};

bool is_chordal(const SmallGraph& g);
bool is_planar(const SmallGraph& g);

/// Connected after deleting the vertices in `removed` (true when nothing is left).
bool is_connected(const SmallGraph& g, std::uint8_t removed = 0);
/// Connected with no cut vertex; the single edge on two vertices counts.
bool is_2connected(const SmallGraph& g);
bool is_3connected(const SmallGraph& g);

struct Census {
  unsigned n = 0;
  std::uint64_t graphs = 0;          // labelled chordal planar graphs, g_n
  std::uint64_t connected = 0;       // c_n
  std::uint64_t two_connected = 0;   // b_n
  std::uint64_t three_connected = 0; // t_n
  std::uint64_t triangulations = 0;  // 3n-6 edges, n >= 4
};

/// All 2^binom(n,2) labelled graphs on n vertices; throws for n > kMaxCensus.
/// `threads` = 0 picks the hardware concurrency.
Census census(unsigned n, unsigned threads = 0);

/// census(1), ..., census(n_max).
std::vector<Census> census_table(unsigned n_max, unsigned threads = 0);

}  // namespace chordal::oracle
