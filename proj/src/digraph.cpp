#include "dicol/digraph.hpp"

#include <algorithm>
#include <string>

namespace dicol {

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.insert(v);
  return s;
}

VertexSet VertexSet::from(std::size_t universe, std::span<const Vertex> vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size())
    throw VertexOutOfRangeError("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(bits_.size()));
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size()) bits_.reset(v);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(bits_.count());
  bits_.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

Vertex Embedding::map(std::size_t copy, Vertex v) const {
  if (copy >= copy_count)
    throw VertexOutOfRangeError("copy index " + std::to_string(copy) + " out of range (" +
                                std::to_string(copy_count) + " copies)");
  if (v >= copy_size)
    throw VertexOutOfRangeError("local vertex " + std::to_string(v) + " out of range (copy size " +
                                std::to_string(copy_size) + ")");
  return static_cast<Vertex>(copy * copy_size + v);
}

std::pair<std::size_t, Vertex> Embedding::unmap(Vertex v) const {
  if (copy_size == 0 || v >= total_vertices())
    throw VertexOutOfRangeError("vertex " + std::to_string(v) + " not in embedding image");
  return {v / copy_size, static_cast<Vertex>(v % copy_size)};
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= out_.size())
    throw VertexOutOfRangeError("vertex " + std::to_string(v) + " out of range (n = " +
                                std::to_string(out_.size()) + ")");
}

void Digraph::add_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
  auto& ou = out_[u];
  auto it = std::lower_bound(ou.begin(), ou.end(), v);
  if (it != ou.end() && *it == v)
    throw DuplicateArcError("duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
  if (has_arc(v, u))
    throw DigonError("arc " + std::to_string(u) + " -> " + std::to_string(v) +
                     " would close a digon");
  ou.insert(it, v);
  auto& iv = in_[v];
  iv.insert(std::lower_bound(iv.begin(), iv.end(), u), u);
  ++arc_count_;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& ou = out_[u];
  return std::binary_search(ou.begin(), ou.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> all;
  all.reserve(arc_count_);
  for (Vertex u = 0; u < out_.size(); ++u)
    for (Vertex v : out_[u]) all.push_back({u, v});
  return all;  // out-lists are sorted, so this is lexicographic
}

Digraph make_digraph(std::size_t n, std::initializer_list<Arc> arcs) {
  Digraph g(n);
  for (const Arc& a : arcs) g.add_arc(a.tail, a.head);
  return g;
}

Digraph directed_cycle(std::size_t len) {
  if (len == 2) throw DigonError("directed cycle of length 2 is a digon");
  Digraph g(len);
  if (len >= 3)
    for (Vertex v = 0; v < len; ++v) g.add_arc(v, static_cast<Vertex>((v + 1) % len));
  return g;
}

std::pair<Digraph, Embedding> disjoint_union(const Digraph& g, std::size_t copies) {
  const std::size_t n = g.vertex_count();
  Embedding emb{copies, n};
  Digraph h(copies * n);
  const auto base = g.arcs();
  for (std::size_t c = 0; c < copies; ++c) {
    const Vertex off = static_cast<Vertex>(c * n);
    for (const Arc& a : base) h.add_arc(off + a.tail, off + a.head);
  }
  return {std::move(h), emb};
}

std::pair<Digraph, std::vector<std::size_t>> disjoint_union(std::span<const Digraph> gs) {
  std::vector<std::size_t> offsets;
  offsets.reserve(gs.size());
  std::size_t total = 0;
  for (const Digraph& g : gs) {
    offsets.push_back(total);
    total += g.vertex_count();
  }
  Digraph h(total);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Vertex off = static_cast<Vertex>(offsets[i]);
    for (Vertex u = 0; u < gs[i].vertex_count(); ++u)
      for (Vertex v : gs[i].out(u)) h.add_arc(off + u, off + v);
  }
  return {std::move(h), std::move(offsets)};
}

Digraph induced_subdigraph(const Digraph& g, const VertexSet& s,
                           std::vector<Vertex>* original_ids) {
  if (s.universe() != g.vertex_count())
    throw VertexOutOfRangeError("vertex set universe (" + std::to_string(s.universe()) +
                                ") does not match digraph order (" +
                                std::to_string(g.vertex_count()) + ")");
  const std::vector<Vertex> keep = s.members();
  std::vector<Vertex> new_id(g.vertex_count(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<Vertex>(i);
  Digraph h(keep.size());
  for (Vertex u : keep)
    for (Vertex v : g.out(u))
      if (s.contains(v)) h.add_arc(new_id[u], new_id[v]);
  if (original_ids) *original_ids = keep;
  return h;
}

bool is_independent_set(const Digraph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw VertexOutOfRangeError("vertex set universe (" + std::to_string(s.universe()) +
                                ") does not match digraph order (" +
                                std::to_string(g.vertex_count()) + ")");
  bool ok = true;
  s.bits().for_each([&](std::size_t u) {
    if (!ok) return;
    for (Vertex v : g.out(static_cast<Vertex>(u)))
      if (s.contains(v)) {
        ok = false;
        return;
      }
  });
  return ok;
}

namespace {

// Exact max clique over a local candidate universe of at most 64 vertices;
// candidates beyond that are handled by the caller splitting on vertices.
int max_clique_mask(std::uint64_t cand, const std::vector<std::uint64_t>& adj, int best_below) {
  int best = best_below;
  while (cand) {
    if (std::popcount(cand) <= best) return best;
    const int i = std::countr_zero(cand);
    cand &= cand - 1;
    const int with_i = 1 + max_clique_mask(cand & adj[static_cast<std::size_t>(i)], adj,
                                           best > 0 ? best - 1 : 0);
    if (with_i > best) best = with_i;
  }
  return best;
}

// Fallback for dense local neighbourhoods wider than 64.
int max_clique_bits(const DynamicBitset& cand, const std::vector<DynamicBitset>& adj, int best) {
  DynamicBitset rest = cand;
  std::size_t i = rest.find_first();
  while (i != DynamicBitset::npos) {
    if (static_cast<int>(rest.count()) <= best) return best;
    rest.reset(i);
    DynamicBitset next = rest;
    next &= adj[i];
    const int with_i = 1 + max_clique_bits(next, adj, best > 0 ? best - 1 : 0);
    if (with_i > best) best = with_i;
    i = rest.find_next(i);
  }
  return best;
}

}  // namespace

int underlying_clique_number(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  // Undirected later-neighbour lists: w > v with at least one arc between.
  std::vector<std::vector<Vertex>> later(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.out(u)) later[std::min(u, v)].push_back(std::max(u, v));
  for (auto& l : later) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  int best = 1;
  for (Vertex v = 0; v < n; ++v) {
    const auto& cand = later[v];
    if (static_cast<int>(cand.size()) + 1 <= best) continue;
    if (cand.size() <= 64) {
      std::vector<std::uint64_t> adj(cand.size(), 0);
      std::uint64_t all = 0;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        all |= std::uint64_t{1} << i;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
          if (g.adjacent(cand[i], cand[j])) {
            adj[i] |= std::uint64_t{1} << j;
            adj[j] |= std::uint64_t{1} << i;
          }
      }
      best = std::max(best, 1 + max_clique_mask(all, adj, best - 1));
    } else {
      std::vector<DynamicBitset> adj(cand.size(), DynamicBitset(cand.size()));
      DynamicBitset all(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) {
        all.set(i);
        for (std::size_t j = i + 1; j < cand.size(); ++j)
          if (g.adjacent(cand[i], cand[j])) {
            adj[i].set(j);
            adj[j].set(i);
          }
      }
      best = std::max(best, 1 + max_clique_bits(all, adj, best - 1));
    }
  }
  return best;
}

}  // namespace dicol
