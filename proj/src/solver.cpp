#include "dicol/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dicol/errors.hpp"

namespace dicol {

namespace {

void check_domain(const Digraph& g, const Colouring& c) {
  if (c.assignment.size() != g.vertex_count())
    throw ColouringDomainMismatchError("colouring covers " + std::to_string(c.assignment.size()) +
                                       " vertices, digraph has " +
                                       std::to_string(g.vertex_count()));
  for (int a : c.assignment)
    if (a < 0 || a >= c.k)
      throw ColouringDomainMismatchError("colour " + std::to_string(a) + " outside [0, " +
                                         std::to_string(c.k) + ")");
}

}  // namespace

TriangleIndex TriangleIndex::build(const Digraph& g) {
  TriangleIndex t;
  const std::size_t n = g.vertex_count();
  t.through.resize(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.out(u)) {
      if (v <= u) continue;
      // Directed triangles u -> v -> w -> u with u the least vertex.
      const auto& ov = g.out(v);
      const auto& iu = g.in(u);
      std::size_t i = 0, j = 0;
      while (i < ov.size() && j < iu.size()) {
        if (ov[i] < iu[j])
          ++i;
        else if (iu[j] < ov[i])
          ++j;
        else {
          const Vertex w = ov[i];
          if (w > u) {
            t.triangles.push_back({u, v, w});
            t.through[u].push_back({v, w});
            t.through[v].push_back({u, w});
            t.through[w].push_back({u, v});
          }
          ++i;
          ++j;
        }
      }
    }
  return t;
}

bool is_valid_dicolouring(const Digraph& g, const Colouring& c) {
  check_domain(g, c);
  const std::size_t n = g.vertex_count();
  // Colour classes are vertex-disjoint, so they are all acyclic exactly when
  // the spanning subdigraph of monochromatic arcs is acyclic.
  std::vector<std::size_t> indeg(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.out(u))
      if (c.assignment[u] == c.assignment[v]) ++indeg[v];
  std::vector<Vertex> ready;
  ready.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : g.out(v))
      if (c.assignment[v] == c.assignment[w] && --indeg[w] == 0) ready.push_back(w);
  }
  return removed == n;
}

bool is_valid_dicolouring_c3(const Digraph& g, const Colouring& c, const TriangleIndex& tri) {
  check_domain(g, c);
  for (const auto& t : tri.triangles)
    if (c.assignment[t[0]] == c.assignment[t[1]] && c.assignment[t[1]] == c.assignment[t[2]])
      return false;
  return true;
}

bool is_valid_dicolouring_c3(const Digraph& g, const Colouring& c) {
  return is_valid_dicolouring_c3(g, c, TriangleIndex::build(g));
}

namespace {

// Backtracking over canonical colour assignments: vertices in index order,
// colour classes numbered by first appearance, so class labels cannot be
// permuted into a previously seen assignment.
class DicolSearch {
 public:
  DicolSearch(const Digraph& g, int k, bool use_c3_shortcut)
      : g_(g), k_(k), shortcut_(use_c3_shortcut), col_(g.vertex_count(), -1),
        stamp_(g.vertex_count(), 0) {
    if (shortcut_) tri_ = TriangleIndex::build(g);
  }

  // Visits every valid colouring in canonical form; `leaf` returns false to
  // abort the whole search.
  template <typename Leaf>
  void run(Leaf&& leaf) {
    if (g_.vertex_count() == 0) {
      leaf(col_);
      return;
    }
    rec(0, -1, leaf);
  }

  const std::vector<int>& colours() const { return col_; }

 private:
  template <typename Leaf>
  bool rec(std::size_t idx, int max_used, Leaf&& leaf) {  // true = abort
    if (idx == col_.size()) return !leaf(col_);
    const Vertex v = static_cast<Vertex>(idx);
    const int top = std::min(max_used + 1, k_ - 1);
    for (int c = 0; c <= top; ++c) {
      if (conflicts(v, c)) continue;
      col_[v] = c;
      if (rec(idx + 1, std::max(max_used, c), leaf)) {
        col_[v] = -1;
        return true;
      }
      col_[v] = -1;
    }
    return false;
  }

  bool conflicts(Vertex v, int c) {
    if (shortcut_) {
      for (const auto& [a, b] : tri_.through[v])
        if (col_[a] == c && col_[b] == c) return true;
      return false;
    }
    return creates_mono_cycle(v, c);
  }

  // Would assigning colour c to v close a monochromatic directed cycle
  // among already-assigned vertices?
  bool creates_mono_cycle(Vertex v, int c) {
    ++cur_;
    stk_.clear();
    stk_.push_back(v);
    stamp_[v] = cur_;
    while (!stk_.empty()) {
      const Vertex x = stk_.back();
      stk_.pop_back();
      for (Vertex w : g_.out(x)) {
        if (w == v) return true;
        if (col_[w] == c && stamp_[w] != cur_) {
          stamp_[w] = cur_;
          stk_.push_back(w);
        }
      }
    }
    return false;
  }

  const Digraph& g_;
  const int k_;
  const bool shortcut_;
  TriangleIndex tri_;
  std::vector<int> col_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t cur_ = 0;
  std::vector<Vertex> stk_;
};

}  // namespace

std::optional<Colouring> k_dicolourable(const Digraph& g, int k, bool use_c3_shortcut) {
  if (k < 1) throw Error("k must be >= 1, got " + std::to_string(k));
  DicolSearch search(g, k, use_c3_shortcut);
  std::optional<Colouring> found;
  search.run([&](const std::vector<int>& col) {
    found = Colouring{col, k};
    return false;
  });
  return found;
}

int dichromatic_number(const Digraph& g, bool use_c3_shortcut) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k)
    if (k_dicolourable(g, k, use_c3_shortcut)) return k;
}

int brute_force_dichromatic(const Digraph& g, int cap, const OracleLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (cap < 1) throw Error("cap must be >= 1, got " + std::to_string(cap));
  std::uint64_t used = 0;
  for (int k = 1; k <= cap; ++k) {
    const long double planned = std::pow(static_cast<long double>(k), static_cast<long double>(n));
    if (static_cast<long double>(used) + planned >
        static_cast<long double>(limits.max_assignments))
      throw OracleInfeasibleError("brute-force oracle over " + std::to_string(k) + "^" +
                                  std::to_string(n) + " assignments exceeds work limit " +
                                  std::to_string(limits.max_assignments));
    Colouring c;
    c.k = k;
    c.assignment.assign(n, 0);
    while (true) {
      ++used;
      if (is_valid_dicolouring(g, c)) return k;
      std::size_t i = 0;
      while (i < n && ++c.assignment[i] == k) {
        c.assignment[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  throw Error("no valid dicolouring with at most " + std::to_string(cap) + " colours");
}

std::uint64_t enumerate_optimal_dicolourings(const Digraph& g,
                                             const std::function<bool(const Colouring&)>& visit) {
  const int k = dichromatic_number(g, false);
  std::uint64_t count = 0;
  if (g.vertex_count() == 0) {
    ++count;
    visit(Colouring{{}, 0});
    return count;
  }
  DicolSearch search(g, k, false);
  search.run([&](const std::vector<int>& col) {
    ++count;
    return visit(Colouring{col, k});
  });
  return count;
}

std::vector<Colouring> optimal_dicolourings(const Digraph& g) {
  std::vector<Colouring> all;
  enumerate_optimal_dicolourings(g, [&](const Colouring& c) {
    all.push_back(c);
    return true;
  });
  return all;
}

LemmaCertificate check_monochromatic_arc_property(const Digraph& g) {
  if (g.arc_count() == 0)
    throw NoArcsError("monochromatic-arc property requires at least one arc");
  LemmaCertificate cert;
  cert.kind = CertKind::remark_monoarc;
  cert.mode = LemmaMode::exhaustive;
  const auto arcs = g.arcs();
  cert.colourings_checked = enumerate_optimal_dicolourings(g, [&](const Colouring& c) {
    cert.k = c.k;
    std::optional<Arc> mono;
    for (const Arc& a : arcs)
      if (c.assignment[a.tail] == c.assignment[a.head]) {
        mono = a;
        break;
      }
    if (!mono) {
      cert.violated = true;
      cert.violating_colouring = c;
      return false;
    }
    if (!cert.example_colouring) {
      cert.example_colouring = c;
      cert.example_mono_arc = mono;
    }
    return true;
  });
  cert.exhausted = !cert.violated;
  return cert;
}

namespace {

// Per-set colour bookkeeping for the rainbow checks.
struct SetState {
  std::vector<int> colour_count;  // per colour, members assigned that colour
  int distinct = 0;
  int unassigned = 0;

  bool rainbow_possible(int k) const { return distinct + unassigned >= k; }
};

struct LemmaContext {
  const Digraph& h;
  const LemmaSets& sets;
  int k;

  std::vector<std::vector<SetState>> state;            // [group][set]
  std::vector<int> possible_sets;                      // per group
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> membership;  // per vertex

  int dead_groups = 0;

  LemmaContext(const Digraph& h_, const LemmaSets& sets_, int k_) : h(h_), sets(sets_), k(k_) {
    const std::size_t n = h.vertex_count();
    membership.resize(n);
    state.resize(sets.groups.size());
    possible_sets.resize(sets.groups.size());
    for (std::size_t gi = 0; gi < sets.groups.size(); ++gi) {
      state[gi].resize(sets.groups[gi].size());
      int possible = 0;
      for (std::size_t si = 0; si < sets.groups[gi].size(); ++si) {
        const auto& members = sets.groups[gi][si];
        for (Vertex v : members) {
          if (v >= n)
            throw VertexOutOfRangeError("tracked vertex " + std::to_string(v) +
                                        " outside digraph of order " + std::to_string(n));
          membership[v].push_back({gi, si});
        }
        auto& st = state[gi][si];
        st.colour_count.assign(static_cast<std::size_t>(k), 0);
        st.unassigned = static_cast<int>(members.size());
        if (st.rainbow_possible(k)) ++possible;
      }
      possible_sets[gi] = possible;
      if (possible == 0) ++dead_groups;
    }
  }

  void assign(Vertex v, int c) {
    for (const auto& [gi, si] : membership[v]) {
      auto& st = state[gi][si];
      const bool before = st.rainbow_possible(k);
      if (++st.colour_count[static_cast<std::size_t>(c)] == 1) ++st.distinct;
      --st.unassigned;
      const bool after = st.rainbow_possible(k);
      if (before && !after && --possible_sets[gi] == 0) ++dead_groups;
    }
  }

  void unassign(Vertex v, int c) {
    for (const auto& [gi, si] : membership[v]) {
      auto& st = state[gi][si];
      const bool before = st.rainbow_possible(k);
      ++st.unassigned;
      if (--st.colour_count[static_cast<std::size_t>(c)] == 0) --st.distinct;
      const bool after = st.rainbow_possible(k);
      if (!before && after && possible_sets[gi]++ == 0) --dead_groups;
    }
  }
};

bool set_is_rainbow(const std::vector<Vertex>& members, const std::vector<int>& col, int k) {
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  int distinct = 0;
  for (Vertex v : members)
    if (!seen[static_cast<std::size_t>(col[v])]) {
      seen[static_cast<std::size_t>(col[v])] = true;
      ++distinct;
    }
  return distinct == k;
}

// A violation: every group holds at least one rainbow set.
bool is_violation(const LemmaSets& sets, const std::vector<int>& col, int k) {
  for (const auto& group : sets.groups) {
    bool any = false;
    for (const auto& members : group)
      if (set_is_rainbow(members, col, k)) {
        any = true;
        break;
      }
    if (!any) return false;
  }
  return true;
}

// Exemplar of the property holding on one colouring: the first group in
// which every set misses a colour, with one missing colour per set.
std::optional<LemmaWitness> lemma_witness_for(const LemmaSets& sets, const std::vector<int>& col,
                                              int k) {
  for (std::size_t gi = 0; gi < sets.groups.size(); ++gi) {
    LemmaWitness w;
    w.copy = gi;
    bool all_missing = true;
    for (std::size_t si = 0; si < sets.groups[gi].size(); ++si) {
      std::vector<bool> seen(static_cast<std::size_t>(k), false);
      for (Vertex v : sets.groups[gi][si]) seen[static_cast<std::size_t>(col[v])] = true;
      int miss = -1;
      for (int c = 0; c < k; ++c)
        if (!seen[static_cast<std::size_t>(c)]) {
          miss = c;
          break;
        }
      if (miss < 0) {
        all_missing = false;
        break;
      }
      w.missing.push_back({si, miss});
    }
    if (all_missing) return w;
  }
  return std::nullopt;
}

LemmaCertificate lemma_exhaustive(const Digraph& h, const LemmaSets& sets, int k,
                                  const LemmaSearchOptions& opts) {
  LemmaCertificate cert;
  cert.kind = sets.kind;
  cert.mode = LemmaMode::exhaustive;
  cert.k = k;
  const std::size_t n = h.vertex_count();
  BudgetMeter meter(opts.budget);
  Colouring c;
  c.k = k;
  c.assignment.assign(n, 0);
  bool done = false;
  while (!done) {
    if (!meter.tick()) {
      cert.unknown = true;
      cert.nodes_explored = meter.nodes();
      return cert;
    }
    if (is_valid_dicolouring(h, c)) {
      ++cert.colourings_checked;
      if (is_violation(sets, c.assignment, k)) {
        cert.violated = true;
        cert.violating_colouring = c;
        cert.nodes_explored = meter.nodes();
        return cert;
      }
      if (!cert.example_colouring) {
        cert.example_colouring = c;
        cert.example_witness = lemma_witness_for(sets, c.assignment, k);
      }
    }
    std::size_t i = 0;
    while (i < n && ++c.assignment[i] == k) {
      c.assignment[i] = 0;
      ++i;
    }
    done = i == n;
  }
  cert.exhausted = true;
  cert.nodes_explored = meter.nodes();
  return cert;
}

LemmaCertificate lemma_backtracking(const Digraph& h, const LemmaSets& sets, int k,
                                    const LemmaSearchOptions& opts) {
  LemmaCertificate cert;
  cert.kind = sets.kind;
  cert.mode = LemmaMode::backtracking;
  cert.k = k;
  const std::size_t n = h.vertex_count();

  std::vector<Vertex> order;
  if (sets.suggested_order.empty()) {
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  } else {
    order = sets.suggested_order;
    std::vector<bool> seen(n, false);
    if (order.size() != n) throw Error("suggested order must cover every vertex");
    for (Vertex v : order) {
      if (v >= n || seen[v]) throw Error("suggested order is not a permutation");
      seen[v] = true;
    }
  }

  LemmaContext ctx(h, sets, k);
  TriangleIndex tri;
  if (opts.use_c3_shortcut) tri = TriangleIndex::build(h);
  BudgetMeter meter(opts.budget);

  std::vector<int> col(n, -1);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t cur = 0;
  std::vector<Vertex> stk;

  auto conflicts = [&](Vertex v, int c) -> bool {
    if (opts.use_c3_shortcut) {
      for (const auto& [a, b] : tri.through[v])
        if (col[a] == c && col[b] == c) return true;
      return false;
    }
    ++cur;
    stk.clear();
    stk.push_back(v);
    stamp[v] = cur;
    while (!stk.empty()) {
      const Vertex x = stk.back();
      stk.pop_back();
      for (Vertex w : h.out(x)) {
        if (w == v) return true;
        if (col[w] == c && stamp[w] != cur) {
          stamp[w] = cur;
          stk.push_back(w);
        }
      }
    }
    return false;
  };

  bool budget_hit = false;

  // Returns true to abort (violation found or budget spent).
  auto rec = [&](auto&& self, std::size_t idx, int max_used) -> bool {
    if (idx == n) {
      Colouring cand{col, k};
      if (is_valid_dicolouring(h, cand)) {
        if (is_violation(sets, col, k)) {
          cert.violated = true;
          cert.violating_colouring = cand;
          return true;
        }
        ++cert.colourings_checked;
      }
      return false;
    }
    const Vertex v = order[idx];
    const int top = std::min(max_used + 1, k - 1);
    for (int c = 0; c <= top; ++c) {
      if (!meter.tick()) {
        budget_hit = true;
        return true;
      }
      if (conflicts(v, c)) continue;
      ctx.assign(v, c);
      if (ctx.dead_groups == 0) {
        col[v] = c;
        if (self(self, idx + 1, std::max(max_used, c))) {
          col[v] = -1;
          ctx.unassign(v, c);
          return true;
        }
        col[v] = -1;
      }
      ctx.unassign(v, c);
    }
    return false;
  };

  if (n == 0) {
    // The empty colouring is valid; it violates iff every group has a
    // rainbow set, which for k >= 1 requires nonempty sets: impossible.
    cert.exhausted = !is_violation(sets, col, k);
    cert.violated = is_violation(sets, col, k);
  } else if (ctx.dead_groups > 0) {
    // Some group can never produce a rainbow set: no violation exists.
    cert.exhausted = true;
  } else {
    const bool aborted = rec(rec, 0, -1);
    if (budget_hit) {
      cert.unknown = true;
    } else if (!aborted) {
      cert.exhausted = true;
    }
  }
  cert.nodes_explored = meter.nodes();
  return cert;
}

LemmaCertificate lemma_sampled(const Digraph& h, const LemmaSets& sets, int k,
                               const LemmaSearchOptions& opts) {
  LemmaCertificate cert;
  cert.kind = sets.kind;
  cert.mode = LemmaMode::sampled;
  cert.k = k;
  const std::size_t n = h.vertex_count();
  LemmaContext ctx(h, sets, k);  // validates tracked vertices
  (void)ctx;
  const TriangleIndex tri = TriangleIndex::build(h);
  BudgetMeter meter(opts.budget);
  std::mt19937_64 rng(opts.seed);

  std::vector<int> col(n, -1);
  std::vector<int> perm(static_cast<std::size_t>(k));
  bool budget_hit = false;

  // One randomized descent to some colouring without a monochromatic
  // directed triangle (first-found leaf, random colour order per vertex).
  // Exact validity is confirmed per sample. A failed descent proves that no
  // valid colouring exists at all.
  auto descend = [&](auto&& self, std::size_t idx) -> int {  // 1 found, 0 none, -1 budget
    if (idx == n) return 1;
    const Vertex v = static_cast<Vertex>(idx);
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int c : perm) {
      if (!meter.tick()) return -1;
      bool bad = false;
      for (const auto& [a, b] : tri.through[v])
        if (col[a] == c && col[b] == c) {
          bad = true;
          break;
        }
      if (bad) continue;
      col[v] = c;
      const int r = self(self, idx + 1);
      if (r != 0) {
        if (r < 0) col[v] = -1;
        return r;
      }
      col[v] = -1;
    }
    return 0;
  };

  const std::uint64_t max_attempts =
      opts.max_attempts ? opts.max_attempts
                        : std::max<std::uint64_t>(opts.samples, 1) * 1000;
  std::uint64_t attempts = 0;
  while (cert.colourings_checked < opts.samples && attempts < max_attempts && !budget_hit) {
    ++attempts;
    std::fill(col.begin(), col.end(), -1);
    const int r = n == 0 ? 1 : descend(descend, 0);
    if (r < 0) {
      budget_hit = true;
      break;
    }
    if (r == 0) {
      // No colouring avoids a monochromatic triangle, hence none is valid:
      // the property holds vacuously and this is a proof.
      cert.exhausted = true;
      cert.nodes_explored = meter.nodes();
      return cert;
    }
    Colouring cand{col, k};
    if (!is_valid_dicolouring(h, cand)) continue;  // triangle test was not faithful here
    ++cert.colourings_checked;
    if (is_violation(sets, col, k)) {
      cert.violated = true;
      cert.violating_colouring = cand;
      cert.nodes_explored = meter.nodes();
      return cert;
    }
    if (!cert.example_colouring) {
      cert.example_colouring = cand;
      cert.example_witness = lemma_witness_for(sets, col, k);
    }
  }
  cert.unknown = cert.colourings_checked < opts.samples;
  cert.nodes_explored = meter.nodes();
  return cert;
}

}  // namespace

LemmaCertificate find_lemma_violation(const Digraph& h, const LemmaSets& sets, int k,
                                      LemmaMode mode, const LemmaSearchOptions& opts) {
  if (k < 1) throw Error("k must be >= 1, got " + std::to_string(k));
  switch (mode) {
    case LemmaMode::exhaustive:
      return lemma_exhaustive(h, sets, k, opts);
    case LemmaMode::backtracking:
      return lemma_backtracking(h, sets, k, opts);
    case LemmaMode::sampled:
      return lemma_sampled(h, sets, k, opts);
  }
  throw Error("unhandled lemma mode");
}

namespace {

// A colouring that does not even fit the digraph makes a certificate
// invalid, never an error: validators must reject, not throw.
bool colouring_fits(const Digraph& g, const Colouring& c) {
  if (c.k < 0 || c.assignment.size() != g.vertex_count()) return false;
  for (int a : c.assignment)
    if (a < 0 || a >= c.k) return false;
  return true;
}

}  // namespace

bool validates_remark_certificate(const Digraph& g, const LemmaCertificate& cert) {
  if (cert.kind != CertKind::remark_monoarc) return false;
  if (cert.violated) {
    if (!cert.violating_colouring) return false;
    const Colouring& c = *cert.violating_colouring;
    if (c.k != cert.k || !colouring_fits(g, c) || !is_valid_dicolouring(g, c)) return false;
    if (c.k != dichromatic_number(g)) return false;  // must be an optimal colouring
    for (const Arc& a : g.arcs())
      if (c.assignment[a.tail] == c.assignment[a.head]) return false;
    return true;
  }
  if (!cert.example_colouring || !cert.example_mono_arc) return false;
  const Colouring& c = *cert.example_colouring;
  const Arc a = *cert.example_mono_arc;
  return c.k == cert.k && colouring_fits(g, c) && is_valid_dicolouring(g, c) &&
         g.has_arc(a.tail, a.head) && c.assignment[a.tail] == c.assignment[a.head];
}

bool validates_lemma_certificate(const Digraph& h, const LemmaSets& sets,
                                 const LemmaCertificate& cert) {
  if (cert.kind == CertKind::remark_monoarc) return false;
  if (cert.violated) {
    if (!cert.violating_colouring) return false;
    const Colouring& c = *cert.violating_colouring;
    return c.k == cert.k && colouring_fits(h, c) && is_valid_dicolouring(h, c) &&
           is_violation(sets, c.assignment, cert.k);
  }
  if (cert.example_colouring) {
    const Colouring& c = *cert.example_colouring;
    if (c.k != cert.k || !colouring_fits(h, c) || !is_valid_dicolouring(h, c)) return false;
    if (!cert.example_witness) return false;
    const LemmaWitness& w = *cert.example_witness;
    if (w.copy >= sets.groups.size()) return false;
    const auto& group = sets.groups[w.copy];
    if (w.missing.size() != group.size()) return false;
    std::vector<bool> covered(group.size(), false);
    for (const auto& [si, miss] : w.missing) {
      if (si >= group.size() || covered[si]) return false;
      covered[si] = true;
      if (miss < 0 || miss >= cert.k) return false;
      for (Vertex v : group[si])
        if (c.assignment[v] == miss) return false;
    }
    return true;
  }
  // No exemplar: acceptable for a pure exhaustion proof or an unknown verdict.
  return cert.exhausted || cert.unknown;
}

}  // namespace dicol
