#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dicol/checkers.hpp"
#include "dicol/construct.hpp"
#include "dicol/solver.hpp"
#include "test_util.hpp"

using namespace dicol;
using dicol::test::triangle;
using dicol::test::tt3;
using dicol::test::two_triangles;

namespace {

bool is_permutation_of_range(const std::vector<Vertex>& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::uint64_t pair_code_of(const Digraph& g) {
  std::uint64_t code = 0, weight = 1;
  for (Vertex i = 0; i < g.vertex_count(); ++i)
    for (Vertex j = i + 1; j < g.vertex_count(); ++j) {
      if (g.has_arc(i, j))
        code += weight;
      else if (g.has_arc(j, i))
        code += 2 * weight;
      weight *= 3;
    }
  return code;
}

}  // namespace

TEST_CASE("single-step amplification of the directed triangle") {
  const auto [h, meta] = gadget_1indep(triangle(), VertexSet::of(3, {0}));
  CHECK(h.vertex_count() == 12);
  CHECK(h.arc_count() == 18);
  CHECK(meta.base_n == 3);
  CHECK(meta.base_m == 3);
  CHECK(meta.copy_embedding == Embedding{4, 3});
  CHECK(meta.hub_copy() == 3);
  CHECK(meta.arc_index == std::vector<Arc>{{9, 10}, {10, 11}, {11, 9}});
  CHECK(meta.tracked_sets ==
        std::vector<std::vector<Vertex>>{{0}, {3}, {6}});

  // Every copy block induces the base digraph.
  for (std::size_t c = 0; c < 4; ++c) {
    VertexSet block(12);
    for (Vertex v = 0; v < 3; ++v) block.insert(meta.copy_embedding.map(c, v));
    CHECK(induced_subdigraph(h, block) == triangle());
  }
  // Hub arc i feeds copy i's tracked vertex and is fed back from it.
  for (std::size_t i = 0; i < 3; ++i)
    for (Vertex x : meta.tracked_sets[i]) {
      CHECK(h.has_arc(meta.arc_index[i].head, x));
      CHECK(h.has_arc(x, meta.arc_index[i].tail));
    }
  CHECK(is_in_c3(h).membership == Membership::member);
  CHECK(dichromatic_number(h) == 2);
}

TEST_CASE("single-step amplification of two disjoint triangles") {
  const auto [h, meta] = gadget_1indep(two_triangles(), VertexSet::of(6, {0, 3}));
  CHECK(h.vertex_count() == 42);
  CHECK(h.arc_count() == 66);  // m(m+1) + 2m|I| = 42 + 24
  CHECK(meta.copy_embedding == Embedding{7, 6});
  REQUIRE(meta.tracked_sets.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(meta.tracked_sets[i] ==
          std::vector<Vertex>{static_cast<Vertex>(6 * i), static_cast<Vertex>(6 * i + 3)});
  CHECK(is_in_c3(h).membership == Membership::member);
}

TEST_CASE("amplification rejects bad inputs") {
  CHECK_THROWS_AS(gadget_1indep(Digraph(3), VertexSet(3)), NoArcsError);
  CHECK_THROWS_AS(gadget_1indep(triangle(), VertexSet::of(3, {0, 1})), NotIndependentError);
  CHECK_THROWS_AS(gadget_1indep(triangle(), VertexSet(4)), VertexOutOfRangeError);

  // An empty tracked set is legal: the hub is wired to nothing.
  const auto [h, meta] = gadget_1indep(triangle(), VertexSet(3));
  CHECK(h.vertex_count() == 12);
  CHECK(h.arc_count() == 12);
  CHECK(meta.tracked_sets == std::vector<std::vector<Vertex>>{{}, {}, {}});
}

TEST_CASE("iterated amplification at depth 0 and 1") {
  const auto [h0, m0] = lotindep(triangle(), {});
  CHECK(h0 == triangle());
  CHECK(m0.depth == 0);
  CHECK(m0.copy_offsets == std::vector<std::size_t>{0});
  CHECK(m0.tracked == std::vector<std::vector<std::vector<Vertex>>>{{}});

  const std::vector<VertexSet> one{VertexSet::of(3, {0})};
  const auto [h1, m1] = lotindep(triangle(), one);
  const auto [hg, mg] = gadget_1indep(triangle(), VertexSet::of(3, {0}));
  CHECK(h1 == hg);
  CHECK(m1.depth == 1);
  CHECK(m1.copy_offsets == std::vector<std::size_t>{0, 3, 6});
  CHECK(m1.tracked ==
        std::vector<std::vector<std::vector<Vertex>>>{{{0}}, {{3}}, {{6}}});
}

TEST_CASE("iterated amplification at depth 2 matches the size recurrence") {
  const std::vector<VertexSet> sets{VertexSet::of(3, {0}), VertexSet::of(3, {0})};
  const auto [h, meta] = lotindep(triangle(), sets);
  CHECK(h.vertex_count() == 228);
  CHECK(h.arc_count() == 450);
  CHECK(meta.depth == 2);
  CHECK(meta.copy_count() == 54);

  const std::vector<BigInt> sizes{1, 1};
  const SizeEstimate est = size_recurrence(3, 3, sizes);
  CHECK(est.vertices() == 228);
  CHECK(est.arcs() == 450);
  CHECK(est.copies() == 54);

  // Every surviving copy block still induces the base digraph, and every
  // tracked set lies inside its block.
  REQUIRE(meta.tracked.size() == 54);
  for (std::size_t j = 0; j < meta.copy_count(); ++j) {
    const std::size_t off = meta.copy_offsets[j];
    VertexSet block(228);
    for (Vertex v = 0; v < 3; ++v) block.insert(static_cast<Vertex>(off + v));
    CHECK(induced_subdigraph(h, block) == triangle());
    REQUIRE(meta.tracked[j].size() == 2);
    for (const auto& set : meta.tracked[j]) {
      REQUIRE(set.size() == 1);
      CHECK(set[0] >= off);
      CHECK(set[0] < off + 3);
    }
  }
  std::set<std::size_t> distinct(meta.copy_offsets.begin(), meta.copy_offsets.end());
  CHECK(distinct.size() == 54);
  CHECK(is_in_c3(h).membership == Membership::member);
}

TEST_CASE("iterated amplification refuses oversized outputs up front") {
  const std::vector<VertexSet> sets{VertexSet::of(3, {0}), VertexSet::of(3, {0})};
  MaterializeLimit limit;
  limit.max_vertices = 227;
  try {
    lotindep(triangle(), sets, limit);
    FAIL("expected a refusal");
  } catch (const LimitExceededError& e) {
    CHECK(e.predicted.vertices() == 228);
    CHECK(e.predicted.arcs() == 450);
  }

  const std::vector<VertexSet> bad{VertexSet::of(3, {0}), VertexSet::of(3, {0, 1})};
  CHECK_THROWS_AS(lotindep(triangle(), bad), NotIndependentError);
}

TEST_CASE("transversals of disjoint copies") {
  const auto [h, emb] = disjoint_union(triangle(), 2);
  std::vector<std::vector<Vertex>> seen;
  const std::uint64_t count = transversal_independent_sets(h, emb, [&](const VertexSet& t) {
    seen.push_back(t.members());
    return true;
  });
  CHECK(count == 9);
  REQUIRE(seen.size() == 9);
  CHECK(seen.front() == std::vector<Vertex>{0, 3});
  CHECK(seen[1] == std::vector<Vertex>{0, 4});
  CHECK(seen.back() == std::vector<Vertex>{2, 5});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  for (const auto& t : seen) CHECK(t.size() == 2);

  // Early stop.
  std::uint64_t visited = 0;
  CHECK(transversal_independent_sets(h, emb, [&](const VertexSet&) { return ++visited < 4; }) == 4);

  // Degenerate embeddings.
  CHECK(transversal_independent_sets(Digraph(0), Embedding{0, 0},
                                     [](const VertexSet&) { return true; }) == 1);
  CHECK(transversal_independent_sets(Digraph(0), Embedding{2, 0},
                                     [](const VertexSet&) { return true; }) == 0);
  CHECK_THROWS_AS(transversal_independent_sets(h, Embedding{3, 3},
                                               [](const VertexSet&) { return true; }),
                  VertexOutOfRangeError);

  // Blocks that are wired together are not copies; the first transversal
  // already hits an arc.
  const auto [amp, meta] = gadget_1indep(triangle(), VertexSet::of(3, {0}));
  CHECK_THROWS_AS(transversal_independent_sets(amp, meta.copy_embedding,
                                               [](const VertexSet&) { return true; }),
                  NotIndependentError);
}

TEST_CASE("chromatic round on the single vertex bootstraps to the directed triangle") {
  const auto [h, meta] = zykov_step(Digraph(1), 1);
  CHECK(h == directed_cycle(3));
  CHECK(meta.depth == 1);
  CHECK(meta.base_n == 1);
  CHECK(meta.copy_offsets == std::vector<std::size_t>{0});
  CHECK(meta.tracked == std::vector<std::vector<std::vector<Vertex>>>{{{0}}});
  CHECK(is_in_c3(h).membership == Membership::member);
  CHECK(dichromatic_number(h) == 2);
}

TEST_CASE("capped chromatic round equals one manual amplification step") {
  ZykovOptions opts;
  opts.transversal_cap = 1;
  const auto [h, meta] = zykov_step(triangle(), 2, opts);
  const auto [hg, mg] = gadget_1indep(two_triangles(), VertexSet::of(6, {0, 3}));
  CHECK(h == hg);
  CHECK(meta.depth == 1);
  CHECK(meta.copy_count() == 6);
}

TEST_CASE("uncapped chromatic round on the triangle is refused with an exact forecast") {
  try {
    zykov_step(triangle(), 2);
    FAIL("expected a refusal");
  } catch (const LimitExceededError& e) {
    // The refusal fires at the first step whose output exceeds the limit;
    // its prefix must equal the standalone recurrence with |I| = 2 per step.
    REQUIRE(e.predicted.steps.size() == 3);
    const std::vector<BigInt> sizes{2, 2, 2};
    const SizeEstimate ref = size_recurrence(6, 6, sizes);
    CHECK(e.predicted.vertices() == ref.vertices());
    CHECK(e.predicted.arcs() == ref.arcs());
    CHECK(e.predicted.vertices() == 16'903'698);
    CHECK(e.predicted.exceeds(1'000'000, 10'000'000));
  }
  CHECK_THROWS_AS(zykov_step(triangle(), 0), Error);
}

TEST_CASE("size recurrence, frozen values") {
  const std::vector<BigInt> one{1};
  const SizeEstimate s1 = size_recurrence(3, 3, one);
  REQUIRE(s1.steps.size() == 1);
  CHECK(s1.vertices() == 12);
  CHECK(s1.arcs() == 18);
  CHECK(s1.copies() == 3);
  CHECK(s1.steps[0].attach_size == 1);

  const std::vector<BigInt> two{1, 1};
  const SizeEstimate s2 = size_recurrence(3, 3, two);
  REQUIRE(s2.steps.size() == 2);
  CHECK(s2.steps[1].attach_size == 3);  // three tracked copies, one vertex each
  CHECK(s2.vertices() == 228);
  CHECK(s2.arcs() == 450);
  CHECK(s2.copies() == 54);

  const SizeEstimate s0 = size_recurrence(5, 4, {});
  CHECK(s0.vertices() == 5);
  CHECK(s0.arcs() == 4);
  CHECK(s0.copies() == 1);

  CHECK_THROWS_AS(size_recurrence(3, 0, one), NoArcsError);
}

TEST_CASE("growth bounds") {
  const std::vector<BigInt> two{1, 1};
  CHECK(per_step_bound_holds(size_recurrence(3, 3, two)));
  const std::vector<BigInt> deep{2, 2, 2, 2};
  CHECK(per_step_bound_holds(size_recurrence(6, 6, deep)));
  // Below two vertices the bound does not apply.
  const std::vector<BigInt> one{1};
  CHECK_FALSE(per_step_bound_holds(size_recurrence(1, 1, one)));
  // Arithmetically inconsistent inputs (more arcs than a digraph could hold)
  // are caught rather than bounded.
  CHECK_FALSE(per_step_bound_holds(size_recurrence(2, 100, one)));

  CHECK(cumulative_size_bound(6, 0) == 6);
  CHECK(cumulative_size_bound(6, 1) == 1296);
  CHECK(cumulative_size_bound(3, 2) == 43046721);
  CHECK(cumulative_size_bound(2, 3) == BigInt("18446744073709551616"));

  const SizeEstimate est = size_recurrence(3, 3, two);
  CHECK(est.exceeds(227, BigInt("1000000000")));
  CHECK_FALSE(est.exceeds(228, 450));
  CHECK(est.exceeds(BigInt("1000000000"), 449));
  CHECK(est.exceeds(2, 1000));  // the base alone is over the vertex limit
}

TEST_CASE("pair codes enumerate digon-free digraphs exactly once") {
  CHECK(digraph_from_pair_code(3, 0) == Digraph(3));
  CHECK(digraph_from_pair_code(3, 16) == triangle());  // 1 + 2*3 + 1*9
  CHECK(digraph_from_pair_code(0, 0) == Digraph(0));

  std::set<std::vector<Arc>> distinct;
  for (std::uint64_t code = 0; code < 27; ++code) {
    const Digraph g = digraph_from_pair_code(3, code);
    CHECK(pair_code_of(g) == code);
    distinct.insert(g.arcs());
  }
  CHECK(distinct.size() == 27);

  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t code = rng() % 14'348'907;  // 3^15
    CHECK(pair_code_of(digraph_from_pair_code(6, code)) == code);
  }
}

TEST_CASE("class enumeration counts and cross-check") {
  CHECK(enumerate_c3_digraphs(0, [](const Digraph&) { return true; }) == 1);
  CHECK(enumerate_c3_digraphs(1, [](const Digraph&) { return true; }) == 1);
  CHECK(enumerate_c3_digraphs(2, [](const Digraph&) { return true; }) == 3);

  for (std::size_t n : {3, 4}) {
    std::uint64_t direct = 0, codes = 1;
    for (std::size_t p = 0; p < n * (n - 1) / 2; ++p) codes *= 3;
    for (std::uint64_t code = 0; code < codes; ++code)
      if (is_in_c3(digraph_from_pair_code(n, code)).membership == Membership::member) ++direct;
    std::uint64_t streamed = 0;
    const std::uint64_t total = enumerate_c3_digraphs(n, [&](const Digraph& g) {
      ++streamed;
      CHECK(is_in_c3(g).membership == Membership::member);
      return true;
    });
    CHECK(total == direct);
    CHECK(streamed == direct);
  }

  CHECK_THROWS_AS(enumerate_c3_digraphs(6, [](const Digraph&) { return true; }),
                  CapExceededError);
  CHECK(enumerate_c3_digraphs(6, [](const Digraph&) { return true; }, 6) > 0);

  std::uint64_t seen = 0;
  CHECK(enumerate_c3_digraphs(3, [&](const Digraph&) { return ++seen < 2; }) == 2);
}

TEST_CASE("tracked-set systems derived from build metadata") {
  const auto [h, meta] = gadget_1indep(triangle(), VertexSet::of(3, {0}));
  const LemmaSets sets = to_lemma_sets(meta);
  CHECK(sets.kind == CertKind::lemma_1indep);
  CHECK(sets.groups ==
        std::vector<std::vector<std::vector<Vertex>>>{{{0}}, {{3}}, {{6}}});
  CHECK(is_permutation_of_range(sets.suggested_order, 12));
  // Hub vertices come first so the search meets the binding constraints early.
  CHECK(std::vector<Vertex>(sets.suggested_order.begin(), sets.suggested_order.begin() + 3) ==
        std::vector<Vertex>{9, 10, 11});

  const std::vector<VertexSet> two{VertexSet::of(3, {0}), VertexSet::of(3, {0})};
  const auto [h2, meta2] = lotindep(triangle(), two);
  const LemmaSets deep = to_lemma_sets(meta2, h2.vertex_count());
  CHECK(deep.kind == CertKind::lemma_lotindep);
  CHECK(deep.groups == meta2.tracked);
  CHECK(deep.groups.size() == 54);
  CHECK(is_permutation_of_range(deep.suggested_order, 228));
}
