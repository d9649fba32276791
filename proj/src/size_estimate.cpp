#include "dicol/size_estimate.hpp"

#include "dicol/errors.hpp"

namespace dicol {

namespace {
const BigInt kOne = 1;
}

const BigInt& SizeEstimate::vertices() const {
  return steps.empty() ? base_vertices : steps.back().vertices;
}

const BigInt& SizeEstimate::arcs() const { return steps.empty() ? base_arcs : steps.back().arcs; }

const BigInt& SizeEstimate::copies() const { return steps.empty() ? kOne : steps.back().copies; }

bool SizeEstimate::exceeds(const BigInt& max_vertices, const BigInt& max_arcs) const {
  if (base_vertices > max_vertices || base_arcs > max_arcs) return true;
  for (const SizeStep& s : steps)
    if (s.vertices > max_vertices || s.arcs > max_arcs) return true;
  return false;
}

SizeEstimate size_recurrence(const BigInt& n0, const BigInt& m0, std::span<const BigInt> i_sizes) {
  if (n0 < 0 || m0 < 0) throw Error("size recurrence needs non-negative base sizes");
  SizeEstimate est;
  est.base_vertices = n0;
  est.base_arcs = m0;
  BigInt n = n0, m = m0, copies = 1;
  for (const BigInt& i_size : i_sizes) {
    if (i_size < 0) throw Error("independent-set sizes must be non-negative");
    if (m == 0)
      throw NoArcsError("amplification step requires at least one arc");
    SizeStep step;
    step.attach_size = copies * i_size;
    step.vertices = n * (m + 1);
    step.arcs = m * (m + 1) + 2 * m * step.attach_size;
    step.copies = m * copies;
    est.steps.push_back(step);
    n = step.vertices;
    m = step.arcs;
    copies = step.copies;
  }
  return est;
}

bool per_step_bound_holds(const SizeEstimate& est) {
  BigInt n = est.base_vertices;
  for (const SizeStep& s : est.steps) {
    if (n < 2) return false;  // bound is only claimed from 2 vertices up
    const BigInt n4 = n * n * n * n;
    if (s.vertices > n4 || s.arcs > n4) return false;
    n = s.vertices;
  }
  return true;
}

BigInt cumulative_size_bound(const BigInt& n0, unsigned steps) {
  // n0^(4^steps); the exponent fits easily for any practical step count.
  BigInt exponent = 1;
  for (unsigned i = 0; i < steps; ++i) exponent *= 4;
  BigInt result = 1;
  BigInt base = n0;
  BigInt e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace dicol
