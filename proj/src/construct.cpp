#include "dicol/construct.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dicol/checkers.hpp"

namespace dicol {

std::pair<Digraph, GadgetMeta> gadget_1indep(const Digraph& g, const VertexSet& i_set) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.arc_count();
  if (m == 0) throw NoArcsError("amplification requires a base digraph with at least one arc");
  if (i_set.universe() != n)
    throw VertexOutOfRangeError("independent set universe (" + std::to_string(i_set.universe()) +
                                ") does not match base digraph order (" + std::to_string(n) + ")");
  if (!is_independent_set(g, i_set))
    throw NotIndependentError("tracked set is not independent in the base digraph");

  auto [h, emb] = disjoint_union(g, m + 1);
  const std::size_t hub = m;
  const std::vector<Arc> base_arcs = g.arcs();
  const std::vector<Vertex> members = i_set.members();

  GadgetMeta meta;
  meta.base_n = n;
  meta.base_m = m;
  meta.copy_embedding = emb;
  meta.arc_index.reserve(m);
  for (const Arc& a : base_arcs)
    meta.arc_index.push_back({emb.map(hub, a.tail), emb.map(hub, a.head)});

  meta.tracked_sets.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Arc hub_arc = meta.arc_index[i];
    auto& tracked = meta.tracked_sets[i];
    tracked.reserve(members.size());
    for (Vertex x : members) {
      const Vertex xi = emb.map(i, x);
      tracked.push_back(xi);
      h.add_arc(hub_arc.head, xi);  // v_i -> x
      h.add_arc(xi, hub_arc.tail);  // x -> u_i
    }
  }
  return {std::move(h), std::move(meta)};
}

namespace {

std::string limit_message(const SizeEstimate& est, const MaterializeLimit& limit) {
  return "refusing to materialize: predicted " + est.vertices().str() + " vertices / " +
         est.arcs().str() + " arcs against limit " + std::to_string(limit.max_vertices) + " / " +
         std::to_string(limit.max_arcs);
}

}  // namespace

std::pair<Digraph, LotindepMeta> lotindep(const Digraph& g, std::span<const VertexSet> i_sets,
                                          const MaterializeLimit& limit) {
  const std::size_t n0 = g.vertex_count();
  std::vector<BigInt> sizes;
  sizes.reserve(i_sets.size());
  for (const VertexSet& s : i_sets) {
    if (s.universe() != n0)
      throw VertexOutOfRangeError("independent set universe (" + std::to_string(s.universe()) +
                                  ") does not match base digraph order (" + std::to_string(n0) +
                                  ")");
    if (!is_independent_set(g, s))
      throw NotIndependentError("tracked set is not independent in the base digraph");
    sizes.push_back(s.size());
  }

  const SizeEstimate est = size_recurrence(n0, g.arc_count(), sizes);
  if (est.exceeds(limit.max_vertices, limit.max_arcs))
    throw LimitExceededError(limit_message(est, limit), est);

  Digraph h = g;
  LotindepMeta meta;
  meta.base_n = n0;
  meta.copy_offsets = {0};
  meta.tracked = {{}};

  for (std::size_t s = 0; s < i_sets.size(); ++s) {
    const std::size_t nh = h.vertex_count();
    const std::size_t mh = h.arc_count();
    const std::vector<Vertex> members = i_sets[s].members();

    VertexSet attach(nh);
    for (std::size_t off : meta.copy_offsets)
      for (Vertex x : members) attach.insert(static_cast<Vertex>(off + x));
    // Images of an independent set in pairwise non-adjacent copies stay
    // independent; anything else indicates corrupted bookkeeping.
    if (!is_independent_set(h, attach))
      throw NotIndependentError("internal: union of tracked images is not independent");

    auto [next, gmeta] = gadget_1indep(h, attach);

    const std::size_t old_copies = meta.copy_offsets.size();
    std::vector<std::size_t> offsets;
    offsets.reserve(mh * old_copies);
    std::vector<std::vector<std::vector<Vertex>>> tracked;
    tracked.reserve(mh * old_copies);
    for (std::size_t c = 0; c < mh; ++c) {
      const std::size_t shift = c * nh;
      for (std::size_t j = 0; j < old_copies; ++j) {
        offsets.push_back(shift + meta.copy_offsets[j]);
        std::vector<std::vector<Vertex>> sets;
        sets.reserve(s + 1);
        for (const auto& old_set : meta.tracked[j]) {
          std::vector<Vertex> shifted;
          shifted.reserve(old_set.size());
          for (Vertex v : old_set) shifted.push_back(static_cast<Vertex>(shift + v));
          sets.push_back(std::move(shifted));
        }
        std::vector<Vertex> fresh;
        fresh.reserve(members.size());
        for (Vertex x : members)
          fresh.push_back(static_cast<Vertex>(shift + meta.copy_offsets[j] + x));
        sets.push_back(std::move(fresh));
        tracked.push_back(std::move(sets));
      }
    }
    meta.copy_offsets = std::move(offsets);
    meta.tracked = std::move(tracked);
    meta.depth = static_cast<int>(s) + 1;
    h = std::move(next);

    const SizeStep& predicted = est.steps[s];
    if (predicted.vertices != h.vertex_count() || predicted.arcs != h.arc_count() ||
        predicted.copies != meta.copy_offsets.size())
      throw Error("internal: materialized sizes diverge from the size recurrence");
  }
  return {std::move(h), std::move(meta)};
}

std::uint64_t transversal_independent_sets(const Digraph& g, const Embedding& emb,
                                           const std::function<bool(const VertexSet&)>& visit) {
  if (emb.total_vertices() != g.vertex_count())
    throw VertexOutOfRangeError("embedding covers " + std::to_string(emb.total_vertices()) +
                                " vertices, digraph has " + std::to_string(g.vertex_count()));
  const std::size_t copies = emb.copy_count;
  const std::size_t size = emb.copy_size;
  std::uint64_t count = 0;
  if (copies == 0) {
    ++count;
    visit(VertexSet(g.vertex_count()));
    return count;
  }
  if (size == 0) return 0;
  std::vector<std::size_t> pick(copies, 0);
  while (true) {
    VertexSet t(g.vertex_count());
    for (std::size_t c = 0; c < copies; ++c)
      t.insert(emb.map(c, static_cast<Vertex>(pick[c])));
    if (!is_independent_set(g, t))
      throw NotIndependentError("transversal is not independent; copies are not disjoint");
    ++count;
    if (!visit(t)) return count;
    // Advance mixed-radix counter, last copy fastest (lexicographic order).
    std::size_t c = copies;
    while (c > 0 && ++pick[c - 1] == size) pick[--c] = 0;
    if (c == 0) return count;
  }
}

namespace {

// Arcless base: attach one fresh arc per transversal, wired into a directed
// triangle with each transversal member. Keeps the class membership (each
// fresh tail has out-degree 1, so longer cycles through it carry a chord)
// and forces a second colour.
std::pair<Digraph, LotindepMeta> zykov_bootstrap(const Digraph& g,
                                                 const std::vector<std::vector<Vertex>>& transversals,
                                                 const MaterializeLimit& limit) {
  const std::size_t n = g.vertex_count();
  const std::size_t t = transversals.size();
  SizeEstimate est;
  est.base_vertices = n;
  est.base_arcs = 0;
  if (t > 0) {
    const BigInt tsize = transversals[0].size();
    SizeStep step;
    step.copies = 1;
    step.attach_size = BigInt(t) * tsize;
    step.vertices = BigInt(n) + 2 * BigInt(t);
    step.arcs = BigInt(t) * (1 + 2 * tsize);
    est.steps.push_back(step);
  }
  if (est.exceeds(limit.max_vertices, limit.max_arcs))
    throw LimitExceededError(limit_message(est, limit), est);

  Digraph h(n + 2 * t);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.out(u)) h.add_arc(u, v);  // none for an arcless base
  LotindepMeta meta;
  meta.depth = static_cast<int>(t);
  meta.base_n = n;
  meta.copy_offsets = {0};
  meta.tracked = {{}};
  for (std::size_t s = 0; s < t; ++s) {
    const Vertex tail = static_cast<Vertex>(n + 2 * s);
    const Vertex head = static_cast<Vertex>(n + 2 * s + 1);
    h.add_arc(tail, head);
    for (Vertex x : transversals[s]) {
      h.add_arc(head, x);
      h.add_arc(x, tail);
    }
    meta.tracked[0].push_back(transversals[s]);
  }
  return {std::move(h), std::move(meta)};
}

}  // namespace

std::pair<Digraph, LotindepMeta> zykov_step(const Digraph& g_k, int k, const ZykovOptions& opts) {
  if (k < 1) throw Error("k must be >= 1, got " + std::to_string(k));
  auto [union_graph, emb] = disjoint_union(g_k, static_cast<std::size_t>(k));

  // How many transversals the step would use.
  BigInt total = 1;
  for (int i = 0; i < k; ++i) total *= g_k.vertex_count();
  BigInt wanted = total;
  if (opts.transversal_cap && BigInt(*opts.transversal_cap) < wanted)
    wanted = *opts.transversal_cap;

  if (union_graph.arc_count() > 0) {
    // Refuse before collecting anything when even a prefix of the steps
    // blows the limit; arc counts at least double per step, so this walks at
    // most a few dozen steps.
    BigInt nv = union_graph.vertex_count(), na = union_graph.arc_count(), copies = 1, done = 0;
    SizeEstimate prefix;
    prefix.base_vertices = nv;
    prefix.base_arcs = na;
    while (done < wanted) {
      SizeStep step;
      step.attach_size = copies * k;
      step.vertices = nv * (na + 1);
      step.arcs = na * (na + 1) + 2 * na * step.attach_size;
      step.copies = na * copies;
      prefix.steps.push_back(step);
      nv = step.vertices;
      na = step.arcs;
      copies = step.copies;
      ++done;
      if (nv > opts.limit.max_vertices || na > opts.limit.max_arcs)
        throw LimitExceededError(limit_message(prefix, opts.limit), prefix);
    }
  }

  std::vector<VertexSet> sets;
  std::vector<std::vector<Vertex>> raw;
  std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  if (opts.transversal_cap) cap = *opts.transversal_cap;
  if (cap > 0)
    transversal_independent_sets(union_graph, emb, [&](const VertexSet& t) {
      sets.push_back(t);
      raw.push_back(t.members());
      return sets.size() < cap;
    });

  if (union_graph.arc_count() == 0) return zykov_bootstrap(union_graph, raw, opts.limit);
  return lotindep(union_graph, sets, opts.limit);
}

Digraph digraph_from_pair_code(std::size_t n, std::uint64_t code) {
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const int trit = static_cast<int>(code % 3);
      code /= 3;
      if (trit == 1)
        g.add_arc(i, j);
      else if (trit == 2)
        g.add_arc(j, i);
    }
  return g;
}

std::uint64_t enumerate_c3_digraphs(std::size_t n, const std::function<bool(const Digraph&)>& visit,
                                    std::size_t cap) {
  if (n > cap)
    throw CapExceededError("enumeration over " + std::to_string(n) +
                           " vertices exceeds cap of " + std::to_string(cap));
  std::uint64_t codes = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) codes *= 3;

  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < codes; ++code) {
    const Digraph g = digraph_from_pair_code(n, code);
    const C3Verdict verdict = is_in_c3(g, Budget::unlimited());
    if (verdict.membership == Membership::member) {
      ++count;
      if (!visit(g)) return count;
    }
  }
  return count;
}

LemmaSets to_lemma_sets(const GadgetMeta& meta) {
  LemmaSets sets;
  sets.kind = CertKind::lemma_1indep;
  sets.groups.reserve(meta.base_m);
  for (const auto& tracked : meta.tracked_sets) sets.groups.push_back({tracked});

  const Embedding& emb = meta.copy_embedding;
  const std::size_t n_host = emb.total_vertices();
  sets.suggested_order.reserve(n_host);
  std::vector<bool> placed(n_host, false);
  for (Vertex v = 0; v < meta.base_n; ++v) {
    const Vertex hv = emb.map(meta.hub_copy(), v);
    sets.suggested_order.push_back(hv);
    placed[hv] = true;
  }
  for (std::size_t i = 0; i < meta.base_m; ++i) {
    for (Vertex v : meta.tracked_sets[i]) {
      sets.suggested_order.push_back(v);
      placed[v] = true;
    }
    for (Vertex v = 0; v < meta.base_n; ++v) {
      const Vertex hv = emb.map(i, v);
      if (!placed[hv]) {
        sets.suggested_order.push_back(hv);
        placed[hv] = true;
      }
    }
  }
  return sets;
}

LemmaSets to_lemma_sets(const LotindepMeta& meta, std::size_t host_vertices) {
  LemmaSets sets;
  sets.kind = CertKind::lemma_lotindep;
  sets.groups = meta.tracked;

  std::vector<bool> in_copy(host_vertices, false);
  for (std::size_t off : meta.copy_offsets)
    for (std::size_t v = 0; v < meta.base_n; ++v) {
      if (off + v >= host_vertices)
        throw VertexOutOfRangeError("copy block exceeds host order");
      in_copy[off + v] = true;
    }
  sets.suggested_order.reserve(host_vertices);
  std::vector<bool> placed(host_vertices, false);
  for (std::size_t v = 0; v < host_vertices; ++v)
    if (!in_copy[v]) {
      sets.suggested_order.push_back(static_cast<Vertex>(v));
      placed[v] = true;
    }
  for (std::size_t j = 0; j < meta.copy_offsets.size(); ++j) {
    for (const auto& set : meta.tracked[j])
      for (Vertex v : set)
        if (!placed[v]) {
          sets.suggested_order.push_back(v);
          placed[v] = true;
        }
    for (std::size_t v = 0; v < meta.base_n; ++v) {
      const std::size_t hv = meta.copy_offsets[j] + v;
      if (!placed[hv]) {
        sets.suggested_order.push_back(static_cast<Vertex>(hv));
        placed[hv] = true;
      }
    }
  }
  return sets;
}

}  // namespace dicol
