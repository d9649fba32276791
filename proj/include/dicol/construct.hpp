#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dicol/digraph.hpp"
#include "dicol/lemma_sets.hpp"
#include "dicol/size_estimate.hpp"

namespace dicol {

// Amplified digraph built from a base g with m arcs and an independent set I:
// m+1 disjoint copies of g; the last copy is the hub, its arcs indexed in
// ascending lexicographic order of the base's arcs. For hub arc i = (u_i,v_i)
// and every x in copy i's image of I, the arcs v_i -> x and x -> u_i are
// added.
struct GadgetMeta {
  std::size_t base_n = 0;
  std::size_t base_m = 0;
  Embedding copy_embedding;            // m+1 copies of size base_n; hub = copy base_m
  std::vector<Arc> arc_index;          // hub arc i, in host vertex ids
  std::vector<std::vector<Vertex>> tracked_sets;  // copy i's image of I, sorted

  std::size_t hub_copy() const { return base_m; }
};

std::pair<Digraph, GadgetMeta> gadget_1indep(const Digraph& g, const VertexSet& i_set);

// Iterated amplification. copy_offsets locate the surviving base copies of
// the original g inside the final host (offsets are not affine once depth
// exceeds 1); tracked[j][s] is the image in the host of the s-th independent
// set inside base copy j.
struct LotindepMeta {
  int depth = 0;  // number of amplification steps applied
  std::size_t base_n = 0;
  std::vector<std::size_t> copy_offsets;
  std::vector<std::vector<std::vector<Vertex>>> tracked;

  std::size_t copy_count() const { return copy_offsets.size(); }
};

struct MaterializeLimit {
  std::uint64_t max_vertices = 1'000'000;
  std::uint64_t max_arcs = 10'000'000;
};

// Refusal to materialize: thrown before any allocation when the exact size
// recurrence predicts a graph beyond the limit.
struct LimitExceededError : Error {
  SizeEstimate predicted;
  LimitExceededError(const std::string& msg, SizeEstimate est)
      : Error(msg), predicted(std::move(est)) {}
};

std::pair<Digraph, LotindepMeta> lotindep(const Digraph& g, std::span<const VertexSet> i_sets,
                                          const MaterializeLimit& limit = {});

// Streams every transversal of the copies (one vertex per copy, all
// combinations in lexicographic order), verifying each is independent in g.
// Visitor returns false to stop. Returns the number visited.
std::uint64_t transversal_independent_sets(const Digraph& g, const Embedding& emb,
                                           const std::function<bool(const VertexSet&)>& visit);

struct ZykovOptions {
  std::optional<std::uint64_t> transversal_cap;  // keep only the first N transversals
  MaterializeLimit limit;
};

// One chromatic amplification round: k disjoint copies of g_k, then one
// amplification step per transversal independent set of the copies. When the
// base has no arcs the step instead attaches, per transversal I, a fresh arc
// (u_I, v_I) plus v_I -> x and x -> u_I for every x in I, which settles the
// degenerate single-vertex start of the recursion.
std::pair<Digraph, LotindepMeta> zykov_step(const Digraph& g_k, int k,
                                            const ZykovOptions& opts = {});

// Digraph on n vertices decoded from the base-3 encoding of unordered pairs
// ((0,1),(0,2),...,(n-2,n-1); pair 0 is the least significant digit):
// digit 0 = no arc, 1 = low -> high, 2 = high -> low. Every digon-free
// simple digraph on n labelled vertices has exactly one code.
Digraph digraph_from_pair_code(std::size_t n, std::uint64_t code);

// Streams every labelled digraph on n vertices with no transitive triangle
// and no induced directed cycle of length >= 4, in ascending pair-code
// order. Throws CapExceededError when n > cap. Returns the number visited.
std::uint64_t enumerate_c3_digraphs(std::size_t n, const std::function<bool(const Digraph&)>& visit,
                                    std::size_t cap = 5);

// Tracked-set systems for the lemma searches, including a vertex order that
// assigns the hub first so contradictions surface near the root.
LemmaSets to_lemma_sets(const GadgetMeta& meta);
LemmaSets to_lemma_sets(const LotindepMeta& meta, std::size_t host_vertices);

}  // namespace dicol
