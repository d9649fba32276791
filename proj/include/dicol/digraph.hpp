#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "dicol/bitset.hpp"
#include "dicol/errors.hpp"

namespace dicol {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Set of vertices over a fixed universe {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}

  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> vs);
  static VertexSet from(std::size_t universe, std::span<const Vertex> vs);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }
  void insert(Vertex v);
  void erase(Vertex v);

  std::vector<Vertex> members() const;  // ascending

  const DynamicBitset& bits() const { return bits_; }

  bool operator==(const VertexSet&) const = default;

 private:
  DynamicBitset bits_;
};

// Identifies the vertices of `copy_count` equal-sized blocks laid out
// consecutively: copy c, local vertex v sits at c*copy_size + v.
struct Embedding {
  std::size_t copy_count = 0;
  std::size_t copy_size = 0;

  std::size_t total_vertices() const { return copy_count * copy_size; }

  Vertex map(std::size_t copy, Vertex v) const;
  std::pair<std::size_t, Vertex> unmap(Vertex v) const;

  bool operator==(const Embedding&) const = default;
};

// Simple digraph: no self-loops, no digons (u->v and v->u never coexist),
// no duplicate arcs. Vertex count is fixed at construction; arcs are added
// one at a time and violations are rejected with an exception.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  void add_arc(Vertex u, Vertex v);

  bool has_arc(Vertex u, Vertex v) const;
  // Adjacent in the underlying undirected graph.
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  // Out- and in-neighbourhoods, each sorted ascending.
  const std::vector<Vertex>& out(Vertex u) const { return out_[u]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }

  std::size_t out_degree(Vertex u) const { return out_[u].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  // All arcs in ascending lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t arc_count_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

Digraph make_digraph(std::size_t n, std::initializer_list<Arc> arcs);

// Directed cycle 0 -> 1 -> ... -> len-1 -> 0. Requires len >= 3 (len = 2
// would be a digon). len = 1 gives the single vertex with no arcs.
Digraph directed_cycle(std::size_t len);

// `copies` disjoint copies of g, copy c occupying vertices [c*n, (c+1)*n).
std::pair<Digraph, Embedding> disjoint_union(const Digraph& g, std::size_t copies);

// Disjoint union of an arbitrary list; second result holds the vertex offset
// of each input block.
std::pair<Digraph, std::vector<std::size_t>> disjoint_union(std::span<const Digraph> gs);

// Subdigraph induced by s, vertices renumbered 0..|s|-1 in ascending order of
// their original labels. If original_ids is non-null it receives that order.
Digraph induced_subdigraph(const Digraph& g, const VertexSet& s,
                           std::vector<Vertex>* original_ids = nullptr);

// True when no arc joins two members of s (in either direction).
bool is_independent_set(const Digraph& g, const VertexSet& s);

// Clique number of the underlying undirected graph (exact).
int underlying_clique_number(const Digraph& g);

}  // namespace dicol
