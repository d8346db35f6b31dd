#include "ordersum/psi.hpp"

#include <set>
#include <vector>

#include "ordersum/exactnum.hpp"

namespace ordersum {

PsiValue psi_of_group(const FiniteGroup& g) {
  PsiValue v;
  v.group_id = g.label();
  v.order = g.order();
  v.histogram = g.order_histogram();
  for (const auto& [d, count] : v.histogram) v.psi += BigInt(d) * count;
  return v;
}

BigInt psi_of_members(const FiniteGroup& g, std::span<const std::uint32_t> members) {
  BigInt sum = 0;
  for (auto e : members) sum += g.element_order_at(e);
  return sum;
}

BigInt psi_via_cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::uint32_t>> seen;
  BigInt sum = 0;
  for (std::size_t e = 0; e < g.order(); ++e) {
    auto sub = cyclic_subgroup(g, e);
    if (seen.insert(sub.members()).second) {
      std::uint64_t size = sub.order();
      sum += BigInt(size) * euler_phi(size);
    }
  }
  return sum;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Above: return "Above";
    case Verdict::Equal: return "Equal";
    case Verdict::Below: return "Below";
  }
  return "?";
}

RatioVerdict herzog_ratio(std::uint64_t order, const BigInt& psi) {
  RatioVerdict r;
  r.lhs = psi * kPsiC60;
  r.rhs = BigInt(kPsiA5) * psi_cyclic(order);
  r.verdict = r.lhs > r.rhs   ? Verdict::Above
              : r.lhs < r.rhs ? Verdict::Below
                              : Verdict::Equal;
  return r;
}

RatioVerdict herzog_ratio(const FiniteGroup& g) {
  return herzog_ratio(g.order(), psi_of_group(g).psi);
}

}  // namespace ordersum
