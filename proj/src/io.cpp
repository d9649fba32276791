#include "dicol/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace dicol {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Reads a line's tokens as exactly `count` unsigned integers.
std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t lineno,
                                         std::size_t count) {
  std::istringstream ss(line);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (ss >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      parse_fail(lineno, "expected a non-negative integer, got '" + tok + "'");
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      parse_fail(lineno, "integer out of range: '" + tok + "'");
    }
  }
  if (out.size() != count)
    parse_fail(lineno, "expected " + std::to_string(count) + " fields, got " +
                           std::to_string(out.size()));
  return out;
}

void require_schema(const json& j, const char* kind) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("schema") || j["schema"] != 1)
    throw ParseError("unsupported or missing schema version");
  if (kind && (!j.contains("kind") || j["kind"] != kind))
    throw ParseError(std::string("expected kind '") + kind + "'");
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) parse_fail(1, "missing header line 'n m'");
  ++lineno;
  const auto header = parse_numbers(line, lineno, 2);
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  if (n > 0xffffffffull) parse_fail(lineno, "vertex count too large");

  Digraph g(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      parse_fail(lineno + 1, "expected " + std::to_string(m) + " arcs, file ends after " +
                                 std::to_string(i));
    ++lineno;
    const auto arc = parse_numbers(line, lineno, 2);
    if (arc[0] >= n || arc[1] >= n)
      parse_fail(lineno, "vertex out of range (n = " + std::to_string(n) + ")");
    try {
      g.add_arc(static_cast<Vertex>(arc[0]), static_cast<Vertex>(arc[1]));
    } catch (const Error& e) {
      parse_fail(lineno, e.what());
    }
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      parse_fail(lineno, "unexpected content after " + std::to_string(m) + " arcs");
  }
  return g;
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
  out << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
}

void write_edge_list_file(const std::string& path, const Digraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
}

void write_dot(std::ostream& out, const Digraph& g) {
  out << "digraph {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : g.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
}

nlohmann::json digraph_to_json(const Digraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  return json{{"schema", 1}, {"n", g.vertex_count()}, {"arcs", std::move(arcs)}};
}

nlohmann::json colouring_to_json(const Colouring& c) {
  return json{{"k", c.k}, {"assignment", c.assignment}};
}

Colouring colouring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("assignment"))
    throw ParseError("colouring must carry 'k' and 'assignment'");
  Colouring c;
  c.k = j["k"].get<int>();
  c.assignment = j["assignment"].get<std::vector<int>>();
  return c;
}

nlohmann::json meta_to_json(const GadgetMeta& meta) {
  json arc_index = json::array();
  for (const Arc& a : meta.arc_index) arc_index.push_back({a.tail, a.head});
  return json{{"schema", 1},
              {"kind", "gadget"},
              {"base_n", meta.base_n},
              {"base_m", meta.base_m},
              {"copy_count", meta.copy_embedding.copy_count},
              {"copy_size", meta.copy_embedding.copy_size},
              {"arc_index", std::move(arc_index)},
              {"tracked_sets", meta.tracked_sets}};
}

GadgetMeta gadget_meta_from_json(const nlohmann::json& j) {
  require_schema(j, "gadget");
  GadgetMeta meta;
  meta.base_n = j.at("base_n").get<std::size_t>();
  meta.base_m = j.at("base_m").get<std::size_t>();
  meta.copy_embedding.copy_count = j.at("copy_count").get<std::size_t>();
  meta.copy_embedding.copy_size = j.at("copy_size").get<std::size_t>();
  for (const auto& a : j.at("arc_index")) {
    if (!a.is_array() || a.size() != 2) throw ParseError("arc_index entries must be pairs");
    meta.arc_index.push_back({a[0].get<Vertex>(), a[1].get<Vertex>()});
  }
  meta.tracked_sets = j.at("tracked_sets").get<std::vector<std::vector<Vertex>>>();
  if (meta.copy_embedding.copy_count != meta.base_m + 1 ||
      meta.copy_embedding.copy_size != meta.base_n ||
      meta.arc_index.size() != meta.base_m || meta.tracked_sets.size() != meta.base_m)
    throw ParseError("gadget meta fields are inconsistent");
  return meta;
}

nlohmann::json meta_to_json(const LotindepMeta& meta) {
  return json{{"schema", 1},
              {"kind", "lotindep"},
              {"depth", meta.depth},
              {"base_n", meta.base_n},
              {"copy_offsets", meta.copy_offsets},
              {"tracked", meta.tracked}};
}

LotindepMeta lotindep_meta_from_json(const nlohmann::json& j) {
  require_schema(j, "lotindep");
  LotindepMeta meta;
  meta.depth = j.at("depth").get<int>();
  meta.base_n = j.at("base_n").get<std::size_t>();
  meta.copy_offsets = j.at("copy_offsets").get<std::vector<std::size_t>>();
  meta.tracked = j.at("tracked").get<std::vector<std::vector<std::vector<Vertex>>>>();
  if (meta.tracked.size() != meta.copy_offsets.size())
    throw ParseError("lotindep meta fields are inconsistent");
  for (const auto& sets : meta.tracked)
    if (sets.size() != static_cast<std::size_t>(meta.depth))
      throw ParseError("each tracked copy must carry one set per step");
  return meta;
}

LemmaSets lemma_sets_from_meta_json(const nlohmann::json& j, std::size_t host_vertices) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("meta JSON must carry 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "gadget") return to_lemma_sets(gadget_meta_from_json(j));
  if (kind == "lotindep") return to_lemma_sets(lotindep_meta_from_json(j), host_vertices);
  throw ParseError("unknown meta kind '" + kind + "'");
}

std::string cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::remark_monoarc:
      return "remark_monoarc";
    case CertKind::lemma_1indep:
      return "lemma_1indep";
    case CertKind::lemma_lotindep:
      return "lemma_lotindep";
  }
  return "unknown";
}

std::string lemma_mode_name(LemmaMode m) {
  switch (m) {
    case LemmaMode::exhaustive:
      return "exhaustive";
    case LemmaMode::backtracking:
      return "backtracking";
    case LemmaMode::sampled:
      return "sampled";
  }
  return "unknown";
}

nlohmann::json certificate_to_json(const LemmaCertificate& cert) {
  json j{{"schema", 1},
         {"kind", cert_kind_name(cert.kind)},
         {"mode", lemma_mode_name(cert.mode)},
         {"k", cert.k},
         {"violated", cert.violated},
         {"exhausted", cert.exhausted},
         {"unknown", cert.unknown},
         {"colourings_checked", cert.colourings_checked},
         {"nodes_explored", cert.nodes_explored}};
  j["violating_colouring"] =
      cert.violating_colouring ? colouring_to_json(*cert.violating_colouring) : json(nullptr);
  j["example_colouring"] =
      cert.example_colouring ? colouring_to_json(*cert.example_colouring) : json(nullptr);
  j["example_mono_arc"] = cert.example_mono_arc
                              ? json({cert.example_mono_arc->tail, cert.example_mono_arc->head})
                              : json(nullptr);
  if (cert.example_witness) {
    json missing = json::array();
    for (const auto& [set, colour] : cert.example_witness->missing)
      missing.push_back({set, colour});
    j["example_witness"] = json{{"copy", cert.example_witness->copy}, {"missing", missing}};
  } else {
    j["example_witness"] = nullptr;
  }
  return j;
}

nlohmann::json verdict_to_json(const C3Verdict& verdict) {
  json j{{"schema", 1}, {"nodes_explored", verdict.nodes_explored}};
  switch (verdict.membership) {
    case Membership::member:
      j["membership"] = "member";
      break;
    case Membership::non_member:
      j["membership"] = "non_member";
      break;
    case Membership::unknown:
      j["membership"] = "unknown";
      break;
  }
  j["tt3"] = verdict.tt3_witness
                 ? json({(*verdict.tt3_witness)[0], (*verdict.tt3_witness)[1],
                         (*verdict.tt3_witness)[2]})
                 : json(nullptr);
  j["long_cycle"] =
      verdict.long_cycle_witness.empty() ? json(nullptr) : json(verdict.long_cycle_witness);
  return j;
}

nlohmann::json estimate_to_json(const SizeEstimate& est) {
  json steps = json::array();
  for (const SizeStep& s : est.steps)
    steps.push_back(json{{"vertices", s.vertices.str()},
                         {"arcs", s.arcs.str()},
                         {"copies", s.copies.str()},
                         {"attach_size", s.attach_size.str()}});
  return json{{"schema", 1},
              {"base", json{{"vertices", est.base_vertices.str()}, {"arcs", est.base_arcs.str()}}},
              {"steps", std::move(steps)},
              {"final", json{{"vertices", est.vertices().str()},
                             {"arcs", est.arcs().str()},
                             {"copies", est.copies().str()}}}};
}

}  // namespace dicol
