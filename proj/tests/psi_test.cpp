#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ordersum/catalog.hpp"
#include "ordersum/exactnum.hpp"
#include "ordersum/psi.hpp"
#include "oracles.hpp"

using namespace ordersum;

TEST_CASE("psi_of_group anchors") {
  auto a5 = psi_of_group(build("A5"));
  CHECK(a5.psi == 211);
  CHECK(a5.order == 60);
  CHECK(a5.group_id == "A5");
  CHECK(psi_of_group(build("SL2(5)")).psi == 663);
  CHECK(psi_of_group(build("C1")).psi == 1);
}

TEST_CASE("psi equals the brute-force element sum") {
  for (const char* id : {"A5", "S4", "S5", "SL2(3)", "Q8", "D4", "A5xC2"})
    CHECK(psi_of_group(build(id)).psi == oracles::psi_bruteforce(build(id)));
}

TEST_CASE("cyclic-subgroup route") {
  // C6: subgroups of orders 1, 2, 3, 6 contribute 1 + 2 + 6 + 12.
  CHECK(psi_via_cyclic_subgroups(build("C6")) == 21);
  CHECK(psi_via_cyclic_subgroups(build("A5")) == 211);
  for (std::uint64_t p : {5, 7, 11}) {
    auto cp = build("C" + std::to_string(p));
    CHECK(psi_via_cyclic_subgroups(cp) == 1 + p * (p - 1));
  }
}

TEST_CASE("both psi routes agree on small catalog entries") {
  for (const auto& e : default_manifest()) {
    if (e.expected.at("order") > 500) continue;
    auto g = e.builder(kDefaultMaxOrder);
    CHECK(psi_of_group(g).psi == psi_via_cyclic_subgroups(g));
  }
}

TEST_CASE("psi histogram identity") {
  auto v = psi_of_group(build("S5"));
  BigInt from_hist = 0;
  std::size_t total = 0;
  for (const auto& [d, c] : v.histogram) {
    from_hist += BigInt(d) * c;
    total += c;
  }
  CHECK(from_hist == v.psi);
  CHECK(total == v.order);
}

TEST_CASE("cyclic groups maximize psi") {
  for (const auto& e : default_manifest()) {
    if (e.expected.at("order") > 1000) continue;
    auto g = e.builder(kDefaultMaxOrder);
    auto v = psi_of_group(g);
    BigInt bound = psi_cyclic(v.order);
    CHECK(v.psi <= bound);
    bool cyclic = g.max_element_order() == g.order();
    CHECK((v.psi == bound) == cyclic);
    CHECK(v.psi >= v.order);
  }
}

TEST_CASE("herzog ratio verdicts") {
  auto a5 = herzog_ratio(build("A5"));
  CHECK(a5.verdict == Verdict::Equal);
  CHECK(a5.lhs == a5.rhs);
  CHECK(a5.lhs == BigInt(211) * 1617);

  auto a5c7 = herzog_ratio(build("A5xC7"));
  CHECK(a5c7.verdict == Verdict::Equal);
  CHECK(a5c7.lhs == BigInt(9073) * 1617);
  CHECK(a5c7.rhs == BigInt(211) * 69531);

  auto s5 = herzog_ratio(build("S5"));
  CHECK(s5.verdict == Verdict::Below);
  CHECK(s5.lhs == BigInt(471) * 1617);
  CHECK(s5.rhs == BigInt(211) * 6321);

  CHECK(herzog_ratio(build("C60")).verdict == Verdict::Above);
  CHECK(herzog_ratio(60, BigInt(211)).verdict == Verdict::Equal);
}

TEST_CASE("direct product law in both directions") {
  // gcd(60, 2) = 2: strictly below the product.
  BigInt a5c2 = psi_of_group(build("A5xC2")).psi;
  CHECK(a5c2 == 603);
  CHECK(a5c2 < BigInt(211) * 3);

  // gcd(60, 7) = 1: exactly the product.
  BigInt a5c7 = psi_of_group(build("A5xC7")).psi;
  CHECK(a5c7 == BigInt(211) * 43);
}

TEST_CASE("quotient bound psi(G) <= psi(G/H) |H|^2") {
  auto s3 = build("S3");
  auto a3 = sylow_subgroup(s3, 3);
  auto q = quotient_group(s3, a3);
  CHECK(psi_of_group(s3).psi <= psi_of_group(q).psi * 9);
  CHECK(psi_of_group(s3).psi == 13);
  CHECK(psi_of_group(q).psi == 3);

  auto sl25 = build("SL2(5)");
  auto z = center(sl25);
  auto qz = quotient_group(sl25, z);
  CHECK(psi_of_group(qz).psi == 211);
  CHECK(psi_of_group(sl25).psi <= psi_of_group(qz).psi * 4);
}

TEST_CASE("normal cyclic Sylow bound with the centrality biconditional") {
  auto c6 = build("C6");
  auto p3 = sylow_subgroup(c6, 3);
  CHECK(is_normal(c6, p3));
  BigInt psi_p = psi_of_members(c6, p3.members());
  BigInt psi_q = psi_of_group(quotient_group(c6, p3)).psi;
  CHECK(psi_of_group(c6).psi == psi_p * psi_q);  // central: equality

  auto s3 = build("S3");
  auto q3 = sylow_subgroup(s3, 3);
  BigInt sp = psi_of_members(s3, q3.members());
  BigInt sq = psi_of_group(quotient_group(s3, q3)).psi;
  CHECK(psi_of_group(s3).psi < sp * sq);  // 13 < 21, not central
}

TEST_CASE("psi_of_members sums over a subgroup") {
  auto a5 = build("A5");
  auto syl5 = sylow_subgroup(a5, 5);
  CHECK(psi_of_members(a5, syl5.members()) == 21);  // psi(C5)
}
