#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dicol/checkers.hpp"
#include "dicol/construct.hpp"
#include "dicol/digraph.hpp"
#include "dicol/solver.hpp"

namespace dicol {

// Edge-list format: a header line "n m", then m lines "tail head". The
// writer emits arcs in ascending lexicographic order; the reader accepts any
// order but rejects self-loops, digons, duplicates and out-of-range vertices
// with the offending line number.
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Digraph& g);
void write_edge_list_file(const std::string& path, const Digraph& g);

// Graphviz output; isolated vertices are listed so the order is preserved.
void write_dot(std::ostream& out, const Digraph& g);

nlohmann::json digraph_to_json(const Digraph& g);

nlohmann::json colouring_to_json(const Colouring& c);
Colouring colouring_from_json(const nlohmann::json& j);

nlohmann::json meta_to_json(const GadgetMeta& meta);
GadgetMeta gadget_meta_from_json(const nlohmann::json& j);

nlohmann::json meta_to_json(const LotindepMeta& meta);
LotindepMeta lotindep_meta_from_json(const nlohmann::json& j);

// Either meta kind, dispatched on the "kind" field, converted to the
// tracked-set system the lemma searches consume.
LemmaSets lemma_sets_from_meta_json(const nlohmann::json& j, std::size_t host_vertices);

std::string cert_kind_name(CertKind k);
std::string lemma_mode_name(LemmaMode m);

nlohmann::json certificate_to_json(const LemmaCertificate& cert);

nlohmann::json verdict_to_json(const C3Verdict& verdict);

nlohmann::json estimate_to_json(const SizeEstimate& est);

}  // namespace dicol
