#include "chordal/oracle.hpp"

#include <bit>
#include <string>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace chordal::oracle {

unsigned SmallGraph::pair_index(unsigned n, unsigned i, unsigned j) {
  if (i > j) std::swap(i, j);
  if (i == j || j >= n) throw OracleError("pair_index: invalid pair");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

SmallGraph SmallGraph::complete(unsigned n) {
  if (n > kMaxVertices) throw OracleError("complete: too many vertices");
  SmallGraph g{n, 0};
  unsigned p = pair_count(n);
  g.edges = p == 32 ? ~0u : (1u << p) - 1;
  return g;
}

SmallGraph SmallGraph::cycle(unsigned n) {
  if (n < 3 || n > kMaxVertices) throw OracleError("cycle: need 3..8 vertices");
  SmallGraph g{n, 0};
  for (unsigned i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

bool SmallGraph::has_edge(unsigned i, unsigned j) const { return (edges >> pair_index(n, i, j)) & 1u; }
void SmallGraph::add_edge(unsigned i, unsigned j) { edges |= 1u << pair_index(n, i, j); }
void SmallGraph::remove_edge(unsigned i, unsigned j) { edges &= ~(1u << pair_index(n, i, j)); }
unsigned SmallGraph::edge_count() const { return static_cast<unsigned>(std::popcount(edges)); }

std::array<std::uint8_t, kMaxVertices> SmallGraph::adjacency() const {
  std::array<std::uint8_t, kMaxVertices> adj{};
  unsigned k = 0;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j, ++k)
      if ((edges >> k) & 1u) {
        adj[i] |= static_cast<std::uint8_t>(1u << j);
        adj[j] |= static_cast<std::uint8_t>(1u << i);
      }
  return adj;
}

bool is_chordal(const SmallGraph& g) {
  auto adj = g.adjacency();
  unsigned alive = (1u << g.n) - 1;
  while (alive) {
    bool removed = false;
    for (unsigned v = 0; v < g.n && !removed; ++v) {
      if (!((alive >> v) & 1u)) continue;
      unsigned nb = adj[v] & alive;
      bool clique = true;
      for (unsigned u = 0; u < g.n && clique; ++u)
        if ((nb >> u) & 1u) clique = (nb & ~(1u << u) & ~adj[u]) == 0;
      if (clique) {
        alive &= ~(1u << v);
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

bool is_planar(const SmallGraph& g) {
  if (g.n >= 3 && g.edge_count() > 3 * g.n - 6) return false;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(g.n);
  for (unsigned i = 0; i < g.n; ++i)
    for (unsigned j = i + 1; j < g.n; ++j)
      if (g.has_edge(i, j)) boost::add_edge(i, j, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_connected(const SmallGraph& g, std::uint8_t removed) {
  auto adj = g.adjacency();
  unsigned alive = ((1u << g.n) - 1) & ~static_cast<unsigned>(removed);
  if (!alive) return true;
  unsigned seen = alive & -alive;
  unsigned frontier = seen;
  while (frontier) {
    unsigned next = 0;
    for (unsigned v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1u) next |= adj[v];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

bool is_2connected(const SmallGraph& g) {
  if (g.n < 2) return false;
  if (g.n == 2) return g.edges == 1;  // the single edge
  if (!is_connected(g)) return false;
  for (unsigned v = 0; v < g.n; ++v)
    if (!is_connected(g, static_cast<std::uint8_t>(1u << v))) return false;
  return true;
}

bool is_3connected(const SmallGraph& g) {
  if (g.n < 4 || !is_2connected(g)) return false;
  for (unsigned u = 0; u < g.n; ++u)
    for (unsigned v = u + 1; v < g.n; ++v)
      if (!is_connected(g, static_cast<std::uint8_t>((1u << u) | (1u << v)))) return false;
  return true;
}

namespace {

void add_into(Census& total, const Census& part) {
  total.graphs += part.graphs;
  total.connected += part.connected;
  total.two_connected += part.two_connected;
  total.three_connected += part.three_connected;
  total.triangulations += part.triangulations;
}

Census census_range(unsigned n, std::uint32_t begin, std::uint32_t end) {
  Census c{n};
  for (std::uint32_t mask = begin; mask < end; ++mask) {
    SmallGraph g{n, mask};
    if (!is_chordal(g) || !is_planar(g)) continue;
    ++c.graphs;
    if (!is_connected(g)) continue;
    ++c.connected;
    if (!is_2connected(g)) continue;
    ++c.two_connected;
    if (is_3connected(g)) ++c.three_connected;
    if (n >= 4 && g.edge_count() == 3 * n - 6) ++c.triangulations;
  }
  return c;
}

}  // namespace

Census census(unsigned n, unsigned threads) {
  if (n == 0 || n > kMaxCensus)
    throw OracleError("census: n must be in 1.." + std::to_string(kMaxCensus) + ", got " + std::to_string(n));
  const std::uint32_t total = 1u << SmallGraph::pair_count(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<std::uint32_t>(threads, total);

  std::vector<Census> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t(total) * t / threads);
    std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t(total) * (t + 1) / threads);
    pool.emplace_back([&parts, t, n, lo, hi] { parts[t] = census_range(n, lo, hi); });
  }
  for (auto& th : pool) th.join();

  Census c{n};
  for (const auto& p : parts) add_into(c, p);
  return c;
}

std::vector<Census> census_table(unsigned n_max, unsigned threads) {
  std::vector<Census> rows;
  for (unsigned n = 1; n <= n_max; ++n) rows.push_back(census(n, threads));
  return rows;
}

}  // namespace chordal::oracle
