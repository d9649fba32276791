#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dicol/budget.hpp"
#include "dicol/digraph.hpp"
#include "dicol/lemma_sets.hpp"

namespace dicol {

// Assignment of one of k colours to every vertex. A dicolouring is valid
// when every colour class induces an acyclic subdigraph.
struct Colouring {
  std::vector<int> assignment;
  int k = 0;

  bool operator==(const Colouring&) const = default;
};

// All directed triangles, plus for each vertex the pairs completing one
// through it. For digraphs without transitive triangles and without long
// induced directed cycles, a colouring is valid iff no directed triangle is
// monochromatic, which turns validity checks into table lookups.
struct TriangleIndex {
  std::vector<std::array<Vertex, 3>> triangles;  // each with least vertex first
  std::vector<std::vector<std::pair<Vertex, Vertex>>> through;

  static TriangleIndex build(const Digraph& g);
};

// Exact validity: every colour class acyclic. Throws
// ColouringDomainMismatchError when c does not fit g.
bool is_valid_dicolouring(const Digraph& g, const Colouring& c);

// Shortcut validity: no monochromatic directed triangle. Agrees with
// is_valid_dicolouring exactly on digraphs with no transitive triangle and
// no induced directed cycle of length >= 4.
bool is_valid_dicolouring_c3(const Digraph& g, const Colouring& c);
bool is_valid_dicolouring_c3(const Digraph& g, const Colouring& c, const TriangleIndex& tri);

// Some valid k-dicolouring, or nullopt when none exists. Exact backtracking
// with colour-symmetry breaking; use_c3_shortcut swaps in the triangle test
// (only sound on the digraph class above).
std::optional<Colouring> k_dicolourable(const Digraph& g, int k, bool use_c3_shortcut = false);

// Least k such that g is k-dicolourable (0 for the empty digraph).
int dichromatic_number(const Digraph& g, bool use_c3_shortcut = false);

struct OracleLimits {
  std::uint64_t max_assignments = 20'000'000;
};

// Independent reference: tries every assignment of k colours for k = 1..cap
// and returns the least k admitting a valid one. Throws
// OracleInfeasibleError before starting any k whose k^n assignments would
// push total work past the limit, and Error when cap itself is too small.
int brute_force_dichromatic(const Digraph& g, int cap, const OracleLimits& limits = {});

// Streams every valid dicolouring with exactly dichromatic_number(g) colours
// in canonical form (colour classes numbered by first appearance, so vertex 0
// has colour 0). Visitor returns false to stop early. Returns the number of
// colourings visited.
std::uint64_t enumerate_optimal_dicolourings(const Digraph& g,
                                             const std::function<bool(const Colouring&)>& visit);

std::vector<Colouring> optimal_dicolourings(const Digraph& g);

enum class LemmaMode { exhaustive, backtracking, sampled };

struct LemmaWitness {
  std::size_t copy = 0;                              // group index
  std::vector<std::pair<std::size_t, int>> missing;  // (set index, missing colour)
};

// Outcome of a property check over colourings.
//   violated   — a counterexample colouring was found (and re-validated).
//   exhausted  — the whole (symmetry-reduced) space was covered; with
//                violated=false this is a proof.
//   unknown    — the budget ran out before either of the above.
// Sampling that finds nothing sets none of the three: it is evidence only.
struct LemmaCertificate {
  CertKind kind = CertKind::remark_monoarc;
  LemmaMode mode = LemmaMode::exhaustive;
  int k = 0;
  bool violated = false;
  bool exhausted = false;
  bool unknown = false;
  std::uint64_t colourings_checked = 0;
  std::uint64_t nodes_explored = 0;
  std::optional<Colouring> violating_colouring;
  std::optional<Colouring> example_colouring;  // one confirming colouring
  std::optional<Arc> example_mono_arc;         // for remark_monoarc
  std::optional<LemmaWitness> example_witness; // for the lemma kinds
};

// Checks that every optimal dicolouring has a monochromatic arc. Requires at
// least one arc. Exhaustive over canonical optimal dicolourings.
LemmaCertificate check_monochromatic_arc_property(const Digraph& g);

struct LemmaSearchOptions {
  Budget budget = Budget::unlimited();
  std::uint64_t samples = 100'000;      // sampled mode: valid colourings to draw
  std::uint64_t seed = 0;               // sampled mode RNG seed
  std::uint64_t max_attempts = 0;       // sampled mode; 0 = 1000 * samples
  bool use_c3_shortcut = true;          // backtracking pruning test
};

// Searches for a valid k-dicolouring of h in which every group of `sets` has
// a rainbow set. Modes: exhaustive (all k^n assignments), backtracking
// (symmetry-reduced DFS with rainbow-feasibility pruning; exhaustion is a
// proof), sampled (rejection sampling of valid colourings; evidence only).
// Any reported violation is re-validated with the exact validity check
// before it is returned.
LemmaCertificate find_lemma_violation(const Digraph& h, const LemmaSets& sets, int k,
                                      LemmaMode mode, const LemmaSearchOptions& opts = {});

// Certificate re-validation against the graph (+ tracked sets) it speaks of.
bool validates_remark_certificate(const Digraph& g, const LemmaCertificate& cert);
bool validates_lemma_certificate(const Digraph& h, const LemmaSets& sets,
                                 const LemmaCertificate& cert);

}  // namespace dicol
