#pragma once

#include <cstdint>
#include <vector>

#include "dicol/digraph.hpp"

namespace dicol {

enum class CertKind { remark_monoarc, lemma_1indep, lemma_lotindep };

// Tracked-set system for the lemma checks, decoupled from how the host
// digraph was built. The property under test: in every valid k-dicolouring,
// some group has no rainbow set (a set is rainbow when its members carry all
// k colours). A violation is a valid k-dicolouring in which every group
// contains at least one rainbow set.
//
// The single-set-per-group case models one tracked independent set per copy;
// the multi-set case models r tracked sets per copy of which one must fail.
struct LemmaSets {
  CertKind kind = CertKind::lemma_1indep;
  // groups[g][s] = sorted vertex list of set s in group g.
  std::vector<std::vector<std::vector<Vertex>>> groups;
  // Optional vertex order hint for the backtracking search; empty = 0..n-1.
  std::vector<Vertex> suggested_order;
};

}  // namespace dicol
