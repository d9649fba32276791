#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

namespace dicol {

using BigInt = boost::multiprecision::cpp_int;

// One amplification step applied to a digraph with n vertices and m arcs and
// an independent set of given size in each tracked copy:
//   vertices' = n * (m + 1)
//   arcs'     = m * (m + 1) + 2 * m * |J|,   |J| = copies * i_size
//   copies'   = m * copies
// where `copies` counts the tracked base copies accumulated so far (1 before
// the first step).
struct SizeStep {
  BigInt vertices;
  BigInt arcs;
  BigInt copies;       // tracked base copies after this step
  BigInt attach_size;  // |J| used by this step
};

struct SizeEstimate {
  BigInt base_vertices;
  BigInt base_arcs;
  std::vector<SizeStep> steps;

  const BigInt& vertices() const;  // final vertex count
  const BigInt& arcs() const;      // final arc count
  const BigInt& copies() const;    // final tracked copy count (1 if no steps)

  // True when the base or any intermediate step exceeds either limit.
  bool exceeds(const BigInt& max_vertices, const BigInt& max_arcs) const;
};

// Exact size recurrence for iterated amplification with the given tracked
// independent-set sizes (one entry per step).
SizeEstimate size_recurrence(const BigInt& n0, const BigInt& m0, std::span<const BigInt> i_sizes);

// Per-step growth bound: with at least 2 vertices before a step, the step
// multiplies neither vertex nor arc count past n^4 of the previous vertex
// count. Checks every step of the estimate.
bool per_step_bound_holds(const SizeEstimate& est);

// Closed-form cumulative bound after `steps` rounds starting from n0
// vertices: n0^(4^steps).
BigInt cumulative_size_bound(const BigInt& n0, unsigned steps);

}  // namespace dicol
