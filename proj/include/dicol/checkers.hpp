#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dicol/budget.hpp"
#include "dicol/digraph.hpp"

namespace dicol {

// Lexicographically least transitive triangle (u,v,w) with arcs u->v, v->w,
// u->w, or nullopt when the digraph has none. Always exhaustive: the scan is
// polynomial.
std::optional<std::array<Vertex, 3>> find_tt3(const Digraph& g);

enum class SearchStatus { found, absent, unknown };

struct CycleSearchResult {
  SearchStatus status = SearchStatus::absent;
  std::vector<Vertex> cycle;  // in arc order, starting at its least vertex
  std::uint64_t nodes_explored = 0;
};

// Searches for an induced (chordless) directed cycle with at least min_len
// vertices. Deterministic: the witness, when one exists and the budget
// suffices, is the first cycle in the canonical search order (rooted at the
// cycle's least vertex, extended in ascending neighbour order). `absent` is
// a proof; `unknown` only means the budget ran out.
CycleSearchResult find_induced_directed_cycle_geq(const Digraph& g, std::size_t min_len = 4,
                                                  const Budget& budget = Budget::unlimited());

enum class Membership { member, non_member, unknown };

// Verdict for membership in the class of digraphs with no transitive
// triangle and no induced directed cycle of length >= 4.
struct C3Verdict {
  Membership membership = Membership::unknown;
  std::optional<std::array<Vertex, 3>> tt3_witness;
  std::vector<Vertex> long_cycle_witness;
  std::uint64_t nodes_explored = 0;
};

C3Verdict is_in_c3(const Digraph& g, const Budget& budget = Budget::unlimited());

// True when g has no directed cycle at all.
bool is_acyclic(const Digraph& g);

// Witness re-validation, used to keep certificates honest.
bool validates_tt3(const Digraph& g, const std::array<Vertex, 3>& w);
bool validates_chordless_directed_cycle(const Digraph& g, std::span<const Vertex> cycle,
                                        std::size_t min_len);

}  // namespace dicol
