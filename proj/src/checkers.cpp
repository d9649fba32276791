#include "dicol/checkers.hpp"

#include <algorithm>

namespace dicol {

std::optional<std::array<Vertex, 3>> find_tt3(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    const auto& ou = g.out(u);
    for (Vertex v : ou) {
      // Least w with u->w and v->w; both lists are sorted.
      const auto& ov = g.out(v);
      std::size_t i = 0, j = 0;
      while (i < ou.size() && j < ov.size()) {
        if (ou[i] < ov[j])
          ++i;
        else if (ov[j] < ou[i])
          ++j;
        else
          return std::array<Vertex, 3>{u, v, ou[i]};
      }
    }
  }
  return std::nullopt;
}

CycleSearchResult find_induced_directed_cycle_geq(const Digraph& g, std::size_t min_len,
                                                  const Budget& budget) {
  const std::size_t n = g.vertex_count();
  CycleSearchResult res;
  BudgetMeter meter(budget);

  // DFS over induced directed paths u = path[0] -> ... -> path.back() whose
  // interior vertices all exceed u (so each chordless cycle is generated once,
  // rooted at its least vertex). A candidate extension w is rejected when it
  // closes a chord: any arc between w and an interior vertex, or the arc
  // u -> w. The arc w -> u is the cycle-closing arc; when present, w either
  // completes a long-enough cycle or proves the branch dead (a longer cycle
  // through w would carry w -> u as a chord).
  std::vector<Vertex> path;
  DynamicBitset on_path(n);
  struct Frame {
    std::size_t next = 0;  // index into out(path.back())
  };
  std::vector<Frame> frames;

  for (Vertex u = 0; u < n; ++u) {
    on_path.set(u);
    for (Vertex v : g.out(u)) {
      if (v <= u) continue;
      path.assign({u, v});
      on_path.set(v);
      frames.assign(1, Frame{});
      while (!frames.empty()) {
        const Vertex t = path.back();
        Frame& fr = frames.back();
        if (fr.next >= g.out(t).size()) {
          frames.pop_back();
          on_path.reset(t);
          path.pop_back();
          continue;
        }
        const Vertex w = g.out(t)[fr.next++];
        if (!meter.tick()) {
          res.status = SearchStatus::unknown;
          res.nodes_explored = meter.nodes();
          return res;
        }
        if (w <= u || on_path.test(w)) continue;
        if (g.has_arc(u, w)) continue;  // chord from the root
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
          if (g.adjacent(w, path[i])) {
            chord = true;
            break;
          }
        if (chord) continue;
        if (g.has_arc(w, u)) {
          if (path.size() + 1 >= min_len) {
            path.push_back(w);
            res.status = SearchStatus::found;
            res.cycle = path;
            res.nodes_explored = meter.nodes();
            return res;
          }
          continue;  // short chordless cycle; w cannot start a longer one
        }
        path.push_back(w);
        on_path.set(w);
        frames.push_back(Frame{});
      }
    }
    on_path.reset(u);
  }
  res.status = SearchStatus::absent;
  res.nodes_explored = meter.nodes();
  return res;
}

C3Verdict is_in_c3(const Digraph& g, const Budget& budget) {
  C3Verdict verdict;
  if (auto tt3 = find_tt3(g)) {
    verdict.membership = Membership::non_member;
    verdict.tt3_witness = tt3;
    return verdict;
  }
  CycleSearchResult cyc = find_induced_directed_cycle_geq(g, 4, budget);
  verdict.nodes_explored = cyc.nodes_explored;
  switch (cyc.status) {
    case SearchStatus::found:
      verdict.membership = Membership::non_member;
      verdict.long_cycle_witness = std::move(cyc.cycle);
      break;
    case SearchStatus::absent:
      verdict.membership = Membership::member;
      break;
    case SearchStatus::unknown:
      verdict.membership = Membership::unknown;
      break;
  }
  return verdict;
}

bool is_acyclic(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n);
  for (Vertex v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t removed = 0;
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    ++removed;
    for (Vertex w : g.out(v))
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return removed == n;
}

bool validates_tt3(const Digraph& g, const std::array<Vertex, 3>& w) {
  const auto [a, b, c] = w;
  if (a >= g.vertex_count() || b >= g.vertex_count() || c >= g.vertex_count()) return false;
  if (a == b || b == c || a == c) return false;
  return g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(a, c);
}

bool validates_chordless_directed_cycle(const Digraph& g, std::span<const Vertex> cycle,
                                        std::size_t min_len) {
  const std::size_t len = cycle.size();
  if (len < min_len || len < 3) return false;
  for (Vertex v : cycle)
    if (v >= g.vertex_count()) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i)
    if (!g.has_arc(cycle[i], cycle[(i + 1) % len])) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) {
      if (i == j || (i + 1) % len == j) continue;
      if (g.has_arc(cycle[i], cycle[j])) return false;
    }
  return true;
}

}  // namespace dicol
