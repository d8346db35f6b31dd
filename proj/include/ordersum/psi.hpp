#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "ordersum/numeric.hpp"
#include "ordersum/permgrp.hpp"

namespace ordersum {

// psi(A5) / psi(C60): the ratio every group is measured against.
inline constexpr std::uint64_t kPsiA5 = 211;
inline constexpr std::uint64_t kPsiC60 = 1617;

struct PsiValue {
  std::string group_id;
  std::uint64_t order = 1;
  BigInt psi;
  std::map<std::uint64_t, std::size_t> histogram;
};

// Sum of element orders, computed from the order histogram.
PsiValue psi_of_group(const FiniteGroup& g);

// Sum over a member-index subset of the parent's elements.
BigInt psi_of_members(const FiniteGroup& g, std::span<const std::uint32_t> members);

// Independent route: enumerate the distinct cyclic subgroups C and sum
// |C| * phi(|C|).  Must always agree with psi_of_group.
BigInt psi_via_cyclic_subgroups(const FiniteGroup& g);

enum class Verdict { Above, Equal, Below };

std::string verdict_name(Verdict v);

// Exact trichotomy of psi(G) * 1617 against 211 * psi(C_n); both cross
// products are kept so Equal is bit-exact by construction.
struct RatioVerdict {
  Verdict verdict;
  BigInt lhs;  // psi(G) * 1617
  BigInt rhs;  // 211 * psi(C_n)
};

RatioVerdict herzog_ratio(const FiniteGroup& g);
RatioVerdict herzog_ratio(std::uint64_t order, const BigInt& psi);

}  // namespace ordersum
