#pragma once

// Test-only oracles.  Every function here recomputes its answer by the most
// direct route available (repeated multiplication, exhaustive scans) and
// stays independent of the library code path it is used to check.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ordersum/numeric.hpp"
#include "ordersum/permgrp.hpp"

namespace oracles {

// Sum of additive orders over Z/n.
inline std::uint64_t psi_cyclic_bruteforce(std::uint64_t n) {
  std::uint64_t sum = 0;
  for (std::uint64_t k = 0; k < n; ++k) sum += n / std::gcd(n, k);
  return sum;
}

// Element order by repeated multiplication (no cycle-structure shortcut).
inline std::uint64_t order_bruteforce(const ordersum::Permutation& p) {
  auto q = p;
  std::uint64_t k = 1;
  while (!q.is_identity()) {
    q = q.then(p);
    ++k;
  }
  return k;
}

// psi by summing brute-force element orders.
inline ordersum::BigInt psi_bruteforce(const ordersum::FiniteGroup& g) {
  ordersum::BigInt sum = 0;
  for (const auto& p : g.elements()) sum += order_bruteforce(p);
  return sum;
}

inline std::map<std::uint64_t, std::size_t> histogram_bruteforce(
    const ordersum::FiniteGroup& g) {
  std::map<std::uint64_t, std::size_t> h;
  for (const auto& p : g.elements()) ++h[order_bruteforce(p)];
  return h;
}

// lcm-convolution of two order histograms: the histogram a direct product
// must have.
inline std::map<std::uint64_t, std::size_t> convolve_lcm(
    const std::map<std::uint64_t, std::size_t>& a,
    const std::map<std::uint64_t, std::size_t>& b) {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) out[std::lcm(da, db)] += ca * cb;
  return out;
}

// Count of residues coprime to n.
inline std::uint64_t phi_bruteforce(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

// Normality by conjugating every member by every group element.
inline bool is_normal_bruteforce(const ordersum::FiniteGroup& g,
                                 const ordersum::Subgroup& h) {
  for (std::size_t e = 0; e < g.order(); ++e)
    for (auto m : h.members())
      if (!h.contains_index(g.conjugate_idx(m, e))) return false;
  return true;
}

// Kernel of the right-translation coset action: {x : y x y^-1 in N for all y}.
inline std::vector<std::uint32_t> coset_action_kernel_bruteforce(
    const ordersum::FiniteGroup& g, const ordersum::Subgroup& n) {
  std::vector<std::uint32_t> kernel;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool in_kernel = true;
    for (std::size_t y = 0; y < g.order() && in_kernel; ++y)
      in_kernel = n.contains_index(
          g.compose_idx(g.compose_idx(y, x), g.inverse_idx(y)));
    if (in_kernel) kernel.push_back(static_cast<std::uint32_t>(x));
  }
  return kernel;
}

}  // namespace oracles
