#include "dicol/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dicol/checkers.hpp"
#include "dicol/construct.hpp"
#include "dicol/io.hpp"
#include "dicol/solver.hpp"

namespace dicol::cli {

namespace {

using nlohmann::json;

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  std::string tok;
  std::istringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    const auto first = tok.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = tok.find_last_not_of(" \t");
    tok = tok.substr(first, last - first + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a vertex id, got '" + tok + "'");
    out.push_back(static_cast<Vertex>(std::stoull(tok)));
  }
  return out;
}

std::pair<BigInt, BigInt> parse_size_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("expected 'vertices,arcs', got '" + s + "'");
  try {
    return {BigInt(s.substr(0, comma)), BigInt(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("expected 'vertices,arcs', got '" + s + "'");
  }
}

MaterializeLimit parse_materialize_limit(const std::string& s) {
  MaterializeLimit lim;
  if (s.empty()) return lim;
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      lim.max_vertices = std::stoull(s);
    } else {
      lim.max_vertices = std::stoull(s.substr(0, comma));
      lim.max_arcs = std::stoull(s.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw ParseError("expected '--materialize-limit V[,A]', got '" + s + "'");
  }
  return lim;
}

Budget make_budget(std::uint64_t node_limit, std::int64_t budget_ms) {
  Budget b;
  if (node_limit > 0) b.node_limit = node_limit;
  if (budget_ms > 0) b.time_limit_ms = budget_ms;
  return b;
}

void write_graph(std::ostream& os, const Digraph& g, const std::string& format) {
  if (format == "dot")
    write_dot(os, g);
  else if (format == "json")
    os << digraph_to_json(g).dump() << "\n";
  else
    write_edge_list(os, g);
}

int emit_generated(const Digraph& h, const json& meta, const std::string& output,
                   const std::string& meta_path, const std::string& format, std::ostream& out,
                   std::ostream& err) {
  if (output.empty()) {
    write_graph(out, h, format);
  } else {
    std::ofstream f(output);
    if (!f) throw ParseError("cannot open '" + output + "' for writing");
    write_graph(f, h, format);
  }
  std::string mp = meta_path;
  if (mp.empty() && !output.empty()) mp = output + ".meta.json";
  if (!mp.empty()) {
    std::ofstream f(mp);
    if (!f) throw ParseError("cannot open '" + mp + "' for writing");
    f << meta.dump(2) << "\n";
  } else {
    err << "note: construction meta not written; pass --meta or --output\n";
  }
  return exit_ok;
}

int run_check(const std::string& input, std::uint64_t node_limit, std::int64_t budget_ms,
              const std::string& format, std::ostream& out) {
  const Digraph g = read_edge_list_file(input);
  const C3Verdict verdict = is_in_c3(g, make_budget(node_limit, budget_ms));
  if (format == "json") {
    json j = verdict_to_json(verdict);
    j["n"] = g.vertex_count();
    j["arcs"] = g.arc_count();
    out << j.dump() << "\n";
  } else {
    switch (verdict.membership) {
      case Membership::member:
        out << "membership: member\n";
        break;
      case Membership::non_member:
        out << "membership: non_member\n";
        break;
      case Membership::unknown:
        out << "membership: unknown (budget exhausted)\n";
        break;
    }
    if (verdict.tt3_witness)
      out << "tt3: " << (*verdict.tt3_witness)[0] << ' ' << (*verdict.tt3_witness)[1] << ' '
          << (*verdict.tt3_witness)[2] << "\n";
    if (!verdict.long_cycle_witness.empty()) {
      out << "long_cycle:";
      for (Vertex v : verdict.long_cycle_witness) out << ' ' << v;
      out << "\n";
    }
    out << "nodes_explored: " << verdict.nodes_explored << "\n";
  }
  switch (verdict.membership) {
    case Membership::member:
      return exit_ok;
    case Membership::non_member:
      return exit_violated;
    case Membership::unknown:
      return exit_unknown;
  }
  return exit_internal;
}

int run_solve(const std::string& input, int k, bool shortcut, const std::string& format,
              std::ostream& out) {
  const Digraph g = read_edge_list_file(input);
  if (k > 0) {
    const auto col = k_dicolourable(g, k, shortcut);
    if (format == "json") {
      json j{{"schema", 1},
             {"k", k},
             {"k_dicolourable", col.has_value()},
             {"colouring", col ? colouring_to_json(*col) : json(nullptr)}};
      out << j.dump() << "\n";
    } else {
      out << "k_dicolourable: " << (col ? "yes" : "no") << "\n";
      if (col) {
        out << "colouring:";
        for (int c : col->assignment) out << ' ' << c;
        out << "\n";
      }
    }
    return exit_ok;
  }
  const int chi = dichromatic_number(g, shortcut);
  std::optional<Colouring> col;
  if (g.vertex_count() > 0) col = k_dicolourable(g, chi, shortcut);
  if (format == "json") {
    json j{{"schema", 1},
           {"dichromatic_number", chi},
           {"colouring", col ? colouring_to_json(*col) : json(nullptr)}};
    out << j.dump() << "\n";
  } else {
    out << "dichromatic_number: " << chi << "\n";
    if (col) {
      out << "colouring:";
      for (int c : col->assignment) out << ' ' << c;
      out << "\n";
    }
  }
  return exit_ok;
}

struct RemarkShard {
  std::uint64_t graphs = 0;
  std::uint64_t members = 0;
  std::uint64_t with_arc = 0;
  std::uint64_t colourings = 0;
  std::optional<std::uint64_t> violating_code;
  LemmaCertificate cert;
  std::exception_ptr error;
};

// Sweeps codes [lo, hi) of digraphs on n vertices; stops early only when a
// violation is found inside the shard.
void remark_shard(std::size_t n, std::uint64_t lo, std::uint64_t hi, RemarkShard& sh) {
  try {
    for (std::uint64_t code = lo; code < hi; ++code) {
      const Digraph g = digraph_from_pair_code(n, code);
      ++sh.graphs;
      if (is_in_c3(g, Budget::unlimited()).membership != Membership::member) continue;
      ++sh.members;
      if (g.arc_count() == 0) continue;
      ++sh.with_arc;
      const LemmaCertificate cert = check_monochromatic_arc_property(g);
      sh.colourings += cert.colourings_checked;
      if (cert.violated) {
        sh.violating_code = code;
        sh.cert = cert;
        return;
      }
    }
  } catch (...) {
    sh.error = std::current_exception();
  }
}

int run_verify_remark(std::size_t max_n, unsigned threads, const std::string& format,
                      std::ostream& out) {
  if (max_n < 1 || max_n > 6)
    throw ParseError("--max-n must be between 1 and 6 (exhaustive sweep)");
  if (threads < 1) threads = 1;

  std::uint64_t graphs = 0, members = 0, with_arc = 0, colourings = 0;
  std::optional<std::pair<std::size_t, std::uint64_t>> violation;  // (n, code)
  LemmaCertificate violation_cert;

  for (std::size_t n = 1; n <= max_n && !violation; ++n) {
    std::uint64_t codes = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) codes *= 3;

    const unsigned t = static_cast<unsigned>(std::min<std::uint64_t>(threads, codes));
    std::vector<RemarkShard> shards(t);
    if (t <= 1) {
      remark_shard(n, 0, codes, shards[0]);
    } else {
      std::vector<std::thread> workers;
      for (unsigned i = 0; i < t; ++i) {
        const std::uint64_t lo = codes * i / t;
        const std::uint64_t hi = codes * (i + 1) / t;
        workers.emplace_back(remark_shard, n, lo, hi, std::ref(shards[i]));
      }
      for (auto& w : workers) w.join();
    }
    for (RemarkShard& sh : shards) {
      if (sh.error) std::rethrow_exception(sh.error);
      graphs += sh.graphs;
      members += sh.members;
      with_arc += sh.with_arc;
      colourings += sh.colourings;
      if (sh.violating_code && !violation) {  // shards are merged in code order
        violation = {n, *sh.violating_code};
        violation_cert = sh.cert;
      }
    }
  }

  if (format == "json") {
    json j{{"schema", 1},          {"max_n", max_n},
           {"graphs_examined", graphs}, {"members", members},
           {"members_with_arc", with_arc}, {"colourings_checked", colourings},
           {"violated", violation.has_value()}};
    if (violation) {
      j["violation"] = json{{"n", violation->first},
                            {"code", violation->second},
                            {"graph", digraph_to_json(digraph_from_pair_code(violation->first,
                                                                             violation->second))},
                            {"certificate", certificate_to_json(violation_cert)}};
    } else {
      j["violation"] = nullptr;
    }
    out << j.dump() << "\n";
  } else {
    out << "graphs_examined: " << graphs << "\n";
    out << "members: " << members << "\n";
    out << "members_with_arc: " << with_arc << "\n";
    out << "colourings_checked: " << colourings << "\n";
    if (violation) {
      out << "violated: yes (n = " << violation->first << ", code = " << violation->second
          << ")\n";
      out << certificate_to_json(violation_cert).dump() << "\n";
    } else {
      out << "violated: no\n";
    }
  }
  return violation ? exit_violated : exit_ok;
}

int run_verify_lemma(const std::string& input, const std::string& meta_path, int k,
                     const std::string& mode_name, std::uint64_t samples, std::uint64_t seed,
                     std::uint64_t node_limit, std::int64_t budget_ms, const std::string& format,
                     std::ostream& out, std::ostream& err) {
  const Digraph h = read_edge_list_file(input);
  std::ifstream mf(meta_path);
  if (!mf) throw ParseError("cannot open '" + meta_path + "' for reading");
  json mj;
  try {
    mf >> mj;
  } catch (const std::exception& e) {
    throw ParseError("invalid meta JSON: " + std::string(e.what()));
  }
  const LemmaSets sets = lemma_sets_from_meta_json(mj, h.vertex_count());

  LemmaMode mode;
  if (mode_name == "exhaustive")
    mode = LemmaMode::exhaustive;
  else if (mode_name == "backtracking")
    mode = LemmaMode::backtracking;
  else if (mode_name == "sampled")
    mode = LemmaMode::sampled;
  else
    throw ParseError("unknown mode '" + mode_name + "'");

  LemmaSearchOptions opts;
  opts.budget = make_budget(node_limit, budget_ms);
  opts.samples = samples;
  opts.seed = seed;
  const LemmaCertificate cert = find_lemma_violation(h, sets, k, mode, opts);

  if (!validates_lemma_certificate(h, sets, cert)) {
    err << "internal error: certificate failed re-validation\n";
    return exit_internal;
  }
  if (format == "json") {
    out << certificate_to_json(cert).dump() << "\n";
  } else {
    out << "kind: " << cert_kind_name(cert.kind) << "\n";
    out << "mode: " << lemma_mode_name(cert.mode) << "\n";
    out << "violated: " << (cert.violated ? "yes" : "no") << "\n";
    out << "exhausted: " << (cert.exhausted ? "yes" : "no") << "\n";
    out << "unknown: " << (cert.unknown ? "yes" : "no") << "\n";
    out << "colourings_checked: " << cert.colourings_checked << "\n";
    out << "nodes_explored: " << cert.nodes_explored << "\n";
    if (cert.violating_colouring) {
      out << "violating_colouring:";
      for (int c : cert.violating_colouring->assignment) out << ' ' << c;
      out << "\n";
    }
  }
  if (cert.violated) return exit_violated;
  if (cert.unknown) return exit_unknown;
  return exit_ok;
}

int run_estimate(const std::string& base_str, const std::string& i_sizes_str,
                 const std::string& zykov_base_str, int zykov_k,
                 std::uint64_t transversal_cap, const std::string& format, std::ostream& out) {
  SizeEstimate est;
  if (!base_str.empty()) {
    const auto [n0, m0] = parse_size_pair(base_str);
    std::vector<BigInt> sizes;
    std::string tok;
    std::istringstream ss(i_sizes_str);
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) {
        try {
          sizes.push_back(BigInt(tok));
        } catch (const std::exception&) {
          throw ParseError("bad independent-set size '" + tok + "'");
        }
      }
    est = size_recurrence(n0, m0, sizes);
  } else {
    const auto [n, m] = parse_size_pair(zykov_base_str);
    if (zykov_k < 1) throw ParseError("--k must be >= 1");
    const BigInt nu = n * zykov_k;
    const BigInt mu = m * zykov_k;
    BigInt r = 1;
    for (int i = 0; i < zykov_k; ++i) r *= n;
    if (transversal_cap > 0 && BigInt(transversal_cap) < r) r = transversal_cap;
    if (r > 100000)
      throw ParseError("estimate would need " + r.str() +
                       " steps; cap the transversals to something tractable");
    std::vector<BigInt> sizes(static_cast<std::size_t>(r), BigInt(zykov_k));
    est = size_recurrence(nu, mu, sizes);
  }
  if (format == "json") {
    json j = estimate_to_json(est);
    j["per_step_bound_holds"] = per_step_bound_holds(est);
    out << j.dump() << "\n";
  } else {
    out << "base: " << est.base_vertices.str() << " vertices, " << est.base_arcs.str()
        << " arcs\n";
    for (std::size_t s = 0; s < est.steps.size(); ++s)
      out << "step " << (s + 1) << ": " << est.steps[s].vertices.str() << " vertices, "
          << est.steps[s].arcs.str() << " arcs, " << est.steps[s].copies.str()
          << " tracked copies\n";
    out << "final: " << est.vertices().str() << " vertices, " << est.arcs().str() << " arcs\n";
    out << "per_step_bound_holds: " << (per_step_bound_holds(est) ? "yes" : "no") << "\n";
  }
  return exit_ok;
}

int run_enumerate(std::size_t n, std::size_t cap, std::ostream& out, std::ostream& err) {
  const std::uint64_t count = enumerate_c3_digraphs(
      n,
      [&](const Digraph& g) {
        out << digraph_to_json(g).dump() << "\n";
        return true;
      },
      cap);
  err << "enumerated " << count << " digraphs\n";
  return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Toolkit for digon-free digraphs without transitive triangles or long\n"
      "induced directed cycles: constructions that push the dichromatic\n"
      "number up, exact solvers, and certified property checks."};
  app.name("dicol");
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Materialize a construction");
  generate->require_subcommand(1);

  std::string gad_input, gad_iset, gad_output, gad_meta, gad_format = "edge-list", gad_limit;
  auto* gadget = generate->add_subcommand("gadget", "One amplification step");
  gadget->add_option("--input", gad_input, "Base digraph (edge list)")->required();
  gadget->add_option("--i-set", gad_iset, "Independent set, comma-separated vertex ids");
  gadget->add_option("--output", gad_output, "Output path (default: stdout)");
  gadget->add_option("--meta", gad_meta, "Construction meta path");
  gadget->add_option("--format", gad_format, "edge-list | dot | json")
      ->check(CLI::IsMember({"edge-list", "dot", "json"}));
  gadget->add_option("--materialize-limit", gad_limit, "Max vertices[,arcs] to materialize");

  std::string lot_input, lot_output, lot_meta, lot_format = "edge-list", lot_limit;
  std::vector<std::string> lot_isets;
  auto* lot = generate->add_subcommand("lotindep", "Iterated amplification");
  lot->add_option("--input", lot_input, "Base digraph (edge list)")->required();
  lot->add_option("--i-set", lot_isets, "Independent set per step (repeatable)");
  lot->add_option("--output", lot_output, "Output path (default: stdout)");
  lot->add_option("--meta", lot_meta, "Construction meta path");
  lot->add_option("--format", lot_format, "edge-list | dot | json")
      ->check(CLI::IsMember({"edge-list", "dot", "json"}));
  lot->add_option("--materialize-limit", lot_limit, "Max vertices[,arcs] to materialize");

  std::string zy_input, zy_output, zy_meta, zy_format = "edge-list", zy_limit;
  int zy_k = 0;
  std::uint64_t zy_cap = 0;
  bool zy_cap_set = false;
  auto* zy = generate->add_subcommand("zykov", "One chromatic amplification round");
  zy->add_option("--input", zy_input, "Digraph with dichromatic number k (edge list)")->required();
  zy->add_option("--k", zy_k, "Current dichromatic number")->required();
  zy->add_option("--transversal-cap", zy_cap, "Use only the first N transversals")
      ->each([&](const std::string&) { zy_cap_set = true; });
  zy->add_option("--output", zy_output, "Output path (default: stdout)");
  zy->add_option("--meta", zy_meta, "Construction meta path");
  zy->add_option("--format", zy_format, "edge-list | dot | json")
      ->check(CLI::IsMember({"edge-list", "dot", "json"}));
  zy->add_option("--materialize-limit", zy_limit, "Max vertices[,arcs] to materialize");

  std::size_t gen_enum_n = 0, gen_enum_cap = 5;
  auto* gen_enum = generate->add_subcommand("enumerate", "All small class members");
  gen_enum->add_option("--n", gen_enum_n, "Vertex count")->required();
  gen_enum->add_option("--cap", gen_enum_cap, "Largest allowed n");

  std::size_t enum_n = 0, enum_cap = 5;
  auto* enumerate = app.add_subcommand("enumerate", "All small class members (JSON lines)");
  enumerate->add_option("--n", enum_n, "Vertex count")->required();
  enumerate->add_option("--cap", enum_cap, "Largest allowed n");

  std::string chk_input, chk_format = "text";
  std::uint64_t chk_nodes = 0;
  std::int64_t chk_ms = 0;
  auto* check = app.add_subcommand("check", "Class membership with witnesses");
  check->add_option("--input", chk_input, "Digraph to check (edge list)")->required();
  check->add_option("--node-limit", chk_nodes, "Cycle-search node budget");
  check->add_option("--budget-ms", chk_ms, "Cycle-search time budget (ms)");
  check->add_option("--format", chk_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string sol_input, sol_format = "text";
  int sol_k = 0;
  bool sol_shortcut = false;
  auto* solve = app.add_subcommand("solve", "Dichromatic number / k-dicolourability");
  solve->add_option("--input", sol_input, "Digraph to solve (edge list)")->required();
  solve->add_option("--k", sol_k, "Decide k-dicolourability instead");
  solve->add_flag("--c3-shortcut", sol_shortcut,
                  "Use the triangle validity shortcut (class members only)");
  solve->add_option("--format", sol_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::size_t rem_max_n = 5;
  unsigned rem_threads = 1;
  std::string rem_format = "text";
  auto* remark = app.add_subcommand("verify-remark",
                                    "Every optimal dicolouring of every small class member with "
                                    "an arc has a monochromatic arc");
  remark->add_option("--max-n", rem_max_n, "Sweep all digraphs up to this order");
  remark->add_option("--threads", rem_threads, "Worker threads");
  remark->add_option("--format", rem_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string lem_input, lem_meta, lem_mode = "backtracking", lem_format = "text";
  int lem_k = 0;
  std::uint64_t lem_samples = 100'000, lem_seed = 0, lem_nodes = 0;
  std::int64_t lem_ms = 0;
  auto* lemma = app.add_subcommand("verify-lemma",
                                   "Search for a dicolouring defeating the tracked-set property");
  lemma->add_option("--input", lem_input, "Host digraph (edge list)")->required();
  lemma->add_option("--meta", lem_meta, "Construction meta JSON")->required();
  lemma->add_option("--k", lem_k, "Number of colours")->required();
  lemma->add_option("--mode", lem_mode, "exhaustive | backtracking | sampled")
      ->check(CLI::IsMember({"exhaustive", "backtracking", "sampled"}));
  lemma->add_option("--samples", lem_samples, "Valid colourings to sample (sampled mode)");
  lemma->add_option("--seed", lem_seed, "RNG seed (sampled mode)");
  lemma->add_option("--node-limit", lem_nodes, "Search node budget");
  lemma->add_option("--budget-ms", lem_ms, "Search time budget (ms)");
  lemma->add_option("--format", lem_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string est_base, est_sizes, est_zykov;
  int est_k = 0;
  std::uint64_t est_cap = 0;
  std::string est_format = "text";
  auto* estimate = app.add_subcommand("estimate", "Exact size recurrence without materializing");
  estimate->add_option("--base", est_base, "Base 'vertices,arcs'");
  estimate->add_option("--i-sizes", est_sizes, "Independent-set sizes, comma-separated");
  estimate->add_option("--zykov-base", est_zykov, "Per-copy base 'vertices,arcs'");
  estimate->add_option("--k", est_k, "Colour count for the chromatic round");
  estimate->add_option("--transversal-cap", est_cap, "Use only the first N transversals");
  estimate->add_option("--format", est_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*gadget) {
      const Digraph g = read_edge_list_file(gad_input);
      const std::vector<Vertex> vs = parse_vertex_list(gad_iset);
      const VertexSet i_set = VertexSet::from(g.vertex_count(), vs);
      const MaterializeLimit lim = parse_materialize_limit(gad_limit);
      const std::vector<BigInt> sizes{BigInt(i_set.size())};
      const SizeEstimate est = size_recurrence(g.vertex_count(), g.arc_count(), sizes);
      if (est.exceeds(lim.max_vertices, lim.max_arcs))
        throw LimitExceededError("refusing to materialize: predicted " + est.vertices().str() +
                                     " vertices / " + est.arcs().str() + " arcs",
                                 est);
      auto [h, meta] = gadget_1indep(g, i_set);
      return emit_generated(h, meta_to_json(meta), gad_output, gad_meta, gad_format, out, err);
    }
    if (*lot) {
      const Digraph g = read_edge_list_file(lot_input);
      std::vector<VertexSet> sets;
      sets.reserve(lot_isets.size());
      for (const std::string& s : lot_isets)
        sets.push_back(VertexSet::from(g.vertex_count(), parse_vertex_list(s)));
      auto [h, meta] = lotindep(g, sets, parse_materialize_limit(lot_limit));
      return emit_generated(h, meta_to_json(meta), lot_output, lot_meta, lot_format, out, err);
    }
    if (*zy) {
      const Digraph g = read_edge_list_file(zy_input);
      ZykovOptions opts;
      if (zy_cap_set) opts.transversal_cap = zy_cap;
      opts.limit = parse_materialize_limit(zy_limit);
      auto [h, meta] = zykov_step(g, zy_k, opts);
      return emit_generated(h, meta_to_json(meta), zy_output, zy_meta, zy_format, out, err);
    }
    if (*gen_enum) return run_enumerate(gen_enum_n, gen_enum_cap, out, err);
    if (*enumerate) return run_enumerate(enum_n, enum_cap, out, err);
    if (*check) return run_check(chk_input, chk_nodes, chk_ms, chk_format, out);
    if (*solve) return run_solve(sol_input, sol_k, sol_shortcut, sol_format, out);
    if (*remark) return run_verify_remark(rem_max_n, rem_threads, rem_format, out);
    if (*lemma)
      return run_verify_lemma(lem_input, lem_meta, lem_k, lem_mode, lem_samples, lem_seed,
                              lem_nodes, lem_ms, lem_format, out, err);
    if (*estimate) {
      if (est_base.empty() == est_zykov.empty())
        throw ParseError("pass exactly one of --base or --zykov-base");
      return run_estimate(est_base, est_sizes, est_zykov, est_k, est_cap, est_format, out);
    }
    err << "error: no subcommand selected\n";
    return exit_usage;
  } catch (const LimitExceededError& e) {
    err << "error: " << e.what() << "\n";
    out << estimate_to_json(e.predicted).dump() << "\n";
    return exit_unknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace dicol::cli
