// Acceptance suite: one line per criterion, "[PASS]" or "[FAIL]", exit code =
// number of failed criteria. Budgets, seeds, and expected values are pinned
// here so reruns are deterministic.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dicol/checkers.hpp"
#include "dicol/construct.hpp"
#include "dicol/digraph.hpp"
#include "dicol/solver.hpp"
#include "test_util.hpp"

using namespace dicol;
using dicol::test::random_digraph;
using dicol::test::triangle;
using dicol::test::tt3;
using dicol::test::two_triangles;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// ---- criterion bodies ------------------------------------------------------

Outcome c1_base_solver_facts() {
  std::ostringstream d;
  bool ok = true;

  const int chi1 = dichromatic_number(Digraph(1));
  const int chi3 = dichromatic_number(triangle());
  ok &= chi1 == 1;
  ok &= chi3 == 2;

  const C3Verdict vt = is_in_c3(tt3());
  ok &= vt.membership == Membership::non_member;
  ok &= vt.tt3_witness.has_value() && validates_tt3(tt3(), *vt.tt3_witness);
  const C3Verdict vc = is_in_c3(triangle());
  ok &= vc.membership == Membership::member;

  d << "single vertex needs " << chi1 << " colour, directed triangle needs " << chi3
    << "; transitive triangle rejected with witness, directed triangle admitted";
  return {ok, d.str()};
}

Outcome c2_gadget_membership() {
  std::ostringstream d;
  bool ok = true;

  const auto [h1, m1] = gadget_1indep(triangle(), VertexSet::of(3, {0}));
  ok &= h1.vertex_count() == 12 && h1.arc_count() == 18;
  const C3Verdict v1 = is_in_c3(h1);
  ok &= v1.membership == Membership::member;

  const auto [h2, m2] = gadget_1indep(two_triangles(), VertexSet::of(6, {0, 3}));
  ok &= h2.vertex_count() == 42 && h2.arc_count() == 66;
  const C3Verdict v2 = is_in_c3(h2);
  ok &= v2.membership == Membership::member;

  d << "12/18 host member (" << v1.nodes_explored << " nodes), 42/66 host member ("
    << v2.nodes_explored << " nodes), both searches exhaustive";
  return {ok, d.str()};
}

Outcome c3_exhaustive_small_gadget() {
  std::ostringstream d;
  bool ok = true;

  const auto [h, meta] = gadget_1indep(triangle(), VertexSet::of(3, {0}));
  const LemmaSets sets = to_lemma_sets(meta);
  const LemmaCertificate cert = find_lemma_violation(h, sets, 2, LemmaMode::exhaustive);
  ok &= !cert.violated && cert.exhausted && !cert.unknown;
  ok &= validates_lemma_certificate(h, sets, cert);

  // Independent recount of the valid 2-colourings over all 2^12 assignments.
  std::uint64_t valid = 0;
  Colouring c;
  c.k = 2;
  c.assignment.assign(12, 0);
  for (std::uint32_t code = 0; code < (1u << 12); ++code) {
    for (std::size_t v = 0; v < 12; ++v) c.assignment[v] = (code >> v) & 1;
    if (is_valid_dicolouring(h, c)) ++valid;
  }
  ok &= valid == 648;
  ok &= cert.colourings_checked == valid;

  d << "all 4096 assignments swept, " << cert.colourings_checked
    << " valid 2-dicolourings (recount " << valid << "), zero violations";
  return {ok, d.str()};
}

Outcome c4_backtracking_large_gadget() {
  std::ostringstream d;
  bool ok = true;

  const auto [h, meta] = gadget_1indep(two_triangles(), VertexSet::of(6, {0, 3}));
  const LemmaSets sets = to_lemma_sets(meta);

  LemmaSearchOptions opts;
  opts.budget = Budget::millis(600'000);
  const LemmaCertificate bt = find_lemma_violation(h, sets, 2, LemmaMode::backtracking, opts);
  if (bt.violated) {
    ok = false;
    d << "violation found by backtracking";
  } else if (bt.exhausted) {
    d << "backtracking covered the symmetry-reduced space in " << bt.nodes_explored
      << " nodes, every branch ruled out before completion: the property is proved";
  } else {
    // Budget ran out; fall back to pinned-seed sampling as evidence.
    LemmaSearchOptions fallback;
    fallback.samples = 1'000'000;
    fallback.seed = 20240817;
    const LemmaCertificate sm = find_lemma_violation(h, sets, 2, LemmaMode::sampled, fallback);
    ok = !sm.violated && sm.colourings_checked == fallback.samples;
    d << "backtracking hit its budget; sampled " << sm.colourings_checked
      << " valid colourings, " << (sm.violated ? "violation found" : "zero violations");
  }
  ok &= validates_lemma_certificate(h, sets, bt);
  return {ok, d.str()};
}

Outcome c5_depth2_host() {
  std::ostringstream d;
  bool ok = true;

  const std::vector<VertexSet> steps{VertexSet::of(3, {0}), VertexSet::of(3, {0})};
  const auto [h, meta] = lotindep(triangle(), steps);

  const std::vector<BigInt> sizes{1, 1};
  const SizeEstimate est = size_recurrence(3, 3, sizes);
  ok &= BigInt(h.vertex_count()) == est.vertices();
  ok &= BigInt(h.arc_count()) == est.arcs();
  ok &= BigInt(meta.copy_count()) == est.copies();
  ok &= h.vertex_count() == 228 && h.arc_count() == 450 && meta.copy_count() == 54;

  ok &= !find_tt3(h).has_value();

  const CycleSearchResult cyc = find_induced_directed_cycle_geq(h, 4, Budget::millis(600'000));
  if (cyc.status == SearchStatus::found) ok = false;

  d << h.vertex_count() << "/" << h.arc_count() << " host matches the recurrence, "
    << meta.copy_count() << " tracked copies, no transitive triangle; long-cycle search: "
    << (cyc.status == SearchStatus::absent
            ? "none (proof)"
            : cyc.status == SearchStatus::unknown ? "inconclusive within budget" : "FOUND")
    << " after " << cyc.nodes_explored << " nodes";
  return {ok, d.str()};
}

Outcome c6_full_sweep_n5() {
  std::ostringstream d;
  bool ok = true;

  std::uint64_t graphs = 0, members = 0, with_arc = 0, colourings = 0, violations = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::uint64_t codes = 1;
    for (std::size_t p = 0; p < n * (n - 1) / 2; ++p) codes *= 3;
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Digraph g = digraph_from_pair_code(n, code);
      ++graphs;
      if (is_in_c3(g).membership != Membership::member) continue;
      ++members;
      if (g.arc_count() == 0) continue;
      ++with_arc;
      const LemmaCertificate cert = check_monochromatic_arc_property(g);
      colourings += cert.colourings_checked;
      if (cert.violated || !cert.exhausted) ++violations;
    }
  }
  ok &= violations == 0;
  ok &= graphs == 1 + 3 + 27 + 729 + 59049;

  d << graphs << " digraphs swept, " << members << " class members, " << with_arc
    << " with arcs; every one of " << colourings
    << " optimal dicolourings keeps an arc monochromatic (" << violations << " violations)";
  return {ok, d.str()};
}

Outcome c7_solver_vs_bruteforce() {
  std::ostringstream d;
  bool ok = true;

  std::mt19937_64 rng(987654321);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 8);
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const Digraph g = random_digraph(rng, n, p);
    const int fast = dichromatic_number(g);
    const int slow = brute_force_dichromatic(g, 4);
    if (fast != slow) {
      ok = false;
      d << "mismatch at trial " << trial << ": solver " << fast << ", brute force " << slow;
      return {ok, d.str()};
    }
    ++checked;
  }
  d << checked << " random digraphs (up to 8 vertices), solver equals the brute-force"
    << " reference on every one";
  return {ok, d.str()};
}

Outcome c8_shortcut_equivalence() {
  std::ostringstream d;
  bool ok = true;

  std::uint64_t members = 0, assignments = 0;
  for (std::size_t order = 1; order <= 5 && ok; ++order) {
    enumerate_c3_digraphs(order, [&](const Digraph& g) {
      ++members;
      const std::size_t n = g.vertex_count();
      const TriangleIndex tri = TriangleIndex::build(g);
      for (int k = 1; k <= 3; ++k) {
        Colouring c;
        c.k = k;
        c.assignment.assign(n, 0);
        bool done = false;
        while (!done) {
          const bool exact = is_valid_dicolouring(g, c);
          if (is_valid_dicolouring_c3(g, c) != exact ||
              is_valid_dicolouring_c3(g, c, tri) != exact) {
            ok = false;
            done = true;
            break;
          }
          ++assignments;
          std::size_t i = 0;
          while (i < n && ++c.assignment[i] == k) {
            c.assignment[i] = 0;
            ++i;
          }
          done = done || i == n;
        }
        if (!ok) break;
      }
      return ok;
    });
  }

  d << "triangle-only validity agrees with exact validity on " << assignments
    << " assignments across " << members << " class members (up to 5 vertices, k = 1..3)";
  return {ok, d.str()};
}

Outcome c9_size_math() {
  std::ostringstream d;
  bool ok = true;

  // Nine chromatic-round steps from two disjoint triangles (6 vertices,
  // 6 arcs), each step attaching transversals of size 2.
  const std::vector<BigInt> sizes(9, BigInt(2));
  const SizeEstimate est = size_recurrence(6, 6, sizes);
  ok &= per_step_bound_holds(est);
  for (unsigned r = 1; r <= 9; ++r)
    ok &= est.steps[r - 1].vertices <= cumulative_size_bound(6, r);
  ok &= est.vertices() > BigInt("1000000000000000");  // 10^15: far beyond materialization

  // Materialization refuses the same construction up front, and its forecast
  // prefix agrees with the standalone recurrence.
  bool refused = false;
  try {
    zykov_step(triangle(), 2);
  } catch (const LimitExceededError& e) {
    refused = true;
    const std::size_t steps = e.predicted.steps.size();
    ok &= steps > 0 && steps <= 9;
    for (std::size_t s = 0; s < steps; ++s) {
      ok &= e.predicted.steps[s].vertices == est.steps[s].vertices;
      ok &= e.predicted.steps[s].arcs == est.steps[s].arcs;
    }
  }
  ok &= refused;

  d << "9-step estimate: " << est.vertices().str().size() << "-digit vertex count, per-step"
    << " quartic bound and cumulative tower bound hold; materialization refused with a"
    << " matching forecast";
  return {ok, d.str()};
}

Outcome c10_tt3_free_clique_bound() {
  std::ostringstream d;
  bool ok = true;

  std::mt19937_64 rng(1234567);
  int accepted = 0;
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 200'000;
  while (accepted < 500 && attempts < max_attempts) {
    ++attempts;
    const std::size_t n = 4 + static_cast<std::size_t>(rng() % 7);  // 4..10
    const double p = 0.15 + 0.1 * static_cast<double>(rng() % 4);
    const Digraph g = random_digraph(rng, n, p);
    if (find_tt3(g).has_value()) continue;
    ++accepted;
    if (underlying_clique_number(g) > 3) {
      ok = false;
      d << "clique bound violated after " << accepted << " accepted samples";
      return {ok, d.str()};
    }
  }
  ok &= accepted == 500;
  d << accepted << " random digraphs without transitive triangles (rejection-sampled in "
    << attempts << " attempts, up to 10 vertices), underlying clique number <= 3 on all";
  return {ok, d.str()};
}

Outcome c11_bootstrap_round() {
  std::ostringstream d;
  bool ok = true;

  const auto [h, meta] = zykov_step(Digraph(1), 1);
  ok &= h == directed_cycle(3);
  const C3Verdict v = is_in_c3(h);
  ok &= v.membership == Membership::member;
  const int chi = dichromatic_number(h);
  ok &= chi >= 2;

  d << "single vertex amplifies to a " << h.vertex_count() << "-vertex member with dichromatic"
    << " number " << chi;
  return {ok, d.str()};
}

// ---- harness ---------------------------------------------------------------

struct Criterion {
  int id;
  const char* label;
  long long budget_ms;  // wall-clock cap, pinned
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "base solver facts", 1'000, c1_base_solver_facts},
      {2, "amplified hosts stay in the class", 10'000, c2_gadget_membership},
      {3, "exhaustive tracked-set sweep on the 12-vertex host", 10'000,
       c3_exhaustive_small_gadget},
      {4, "backtracking tracked-set proof on the 42-vertex host", 600'000,
       c4_backtracking_large_gadget},
      {5, "depth-2 host matches its size recurrence and class checks", 600'000, c5_depth2_host},
      {6, "monochromatic-arc property on every member with up to 5 vertices", 900'000,
       c6_full_sweep_n5},
      {7, "solver agrees with brute force on random digraphs", 300'000, c7_solver_vs_bruteforce},
      {8, "triangle validity shortcut is exact inside the class", 300'000,
       c8_shortcut_equivalence},
      {9, "size recurrence, growth bounds, and materialization refusal", 60'000, c9_size_math},
      {10, "transitive-triangle-free digraphs have clique number at most 3", 120'000,
       c10_tt3_free_clique_bound},
      {11, "chromatic round lifts the single vertex to a 2-dichromatic member", 60'000,
       c11_bootstrap_round},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const long long elapsed = ms_since(start);
    const bool in_budget = elapsed <= c.budget_ms;
    const bool pass = o.ok && in_budget;
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label
              << " — " << o.detail;
    if (!in_budget) std::cout << " [over budget: " << elapsed << " ms > " << c.budget_ms << " ms]";
    std::cout << " [" << elapsed << " ms]" << std::endl;
  }

  if (failures == 0)
    std::cout << "all 11 criteria passed" << std::endl;
  else
    std::cout << failures << " of 11 criteria failed" << std::endl;
  return failures;
}
