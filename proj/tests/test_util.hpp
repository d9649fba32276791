#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "dicol/checkers.hpp"
#include "dicol/digraph.hpp"

namespace dicol::test {

inline Digraph triangle() { return directed_cycle(3); }

// Transitive triangle: 0 -> 1 -> 2 plus 0 -> 2.
inline Digraph tt3() { return make_digraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Digraph two_triangles() {
  return make_digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

// Digon-free random digraph: each unordered pair gets an arc with
// probability p, direction fair.
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng) >= p) continue;
      if (coin(rng) < 0.5)
        g.add_arc(i, j);
      else
        g.add_arc(j, i);
    }
  return g;
}

// Reference decision for "has an induced directed cycle of >= min_len
// vertices": enumerate every vertex subset of size >= min_len and test
// whether it induces exactly a directed cycle (every vertex with in- and
// out-degree 1 inside the subset, arc count equal to subset size, connected
// as a single cycle).
inline bool subset_has_induced_cycle_geq(const Digraph& g, std::size_t min_len) {
  const std::size_t n = g.vertex_count();
  if (n > 20 || min_len < 3) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    if (vs.size() < min_len) continue;
    bool ok = true;
    std::size_t arcs = 0;
    for (Vertex u : vs) {
      std::size_t outd = 0, ind = 0;
      for (Vertex v : vs) {
        if (u == v) continue;
        if (g.has_arc(u, v)) {
          ++outd;
          ++arcs;
        }
        if (g.has_arc(v, u)) ++ind;
      }
      if (outd != 1 || ind != 1) {
        ok = false;
        break;
      }
    }
    if (!ok || arcs != vs.size()) continue;
    // Single cycle: walk from vs[0] and count distinct vertices reached.
    Vertex cur = vs[0];
    std::size_t steps = 0;
    do {
      for (Vertex v : vs)
        if (v != cur && g.has_arc(cur, v)) {
          cur = v;
          break;
        }
      ++steps;
    } while (cur != vs[0] && steps <= vs.size());
    if (cur == vs[0] && steps == vs.size()) return true;
  }
  return false;
}

}  // namespace dicol::test
