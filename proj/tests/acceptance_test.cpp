// Acceptance suite: one pass/fail line per criterion, all tolerances zero
// (exact integer and rational arithmetic throughout).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordersum/catalog.hpp"
#include "ordersum/criteria.hpp"
#include "ordersum/exactnum.hpp"
#include "ordersum/psi.hpp"
#include "oracles.hpp"

using namespace ordersum;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

void criterion(int number, const std::string& title, bool ok) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << title << "\n";
  for (const auto& s : notes) std::cout << "       " << s << "\n";
  notes.clear();
  if (!ok) ++failures;
}

bool check(bool ok, const std::string& what) {
  if (!ok) note("failed: " + what);
  return ok;
}

// --- criterion 1: exact paper anchors ----------------------------------------

bool criterion1() {
  bool ok = true;
  ok &= check(psi_of_group(build("A5")).psi == 211, "psi(A5) = 211");
  ok &= check(psi_cyclic(60) == 1617, "psi(C60) = 1617");
  auto ratio = herzog_ratio(build("A5"));
  ok &= check(ratio.lhs == ratio.rhs && ratio.lhs == BigInt(211) * 1617,
              "psi(A5) * 1617 = 211 * psi(C60) bit-exact");
  ok &= check(psi_of_group(build("SL2(5)")).psi == 663, "psi(SL(2,5)) = 663");
  ok &= check(psi_of_group(build("A5xC3")).psi == 1237, "psi(A5 x C3) = 1237");
  ok &= check(psi_of_group(build("PSL2(7)")).psi == 715, "psi(L2(7)) = 715");
  // (211/1617) psi(C120) = 9073/11 > 824 as exact rationals.
  BigRational r(BigInt(211) * psi_cyclic(120), 1617);
  ok &= check(numerator(r) == 9073 && denominator(r) == 11,
              "(211/1617) psi(C120) = 9073/11 in lowest terms");
  ok &= check(r > BigRational(824), "9073/11 > 824");
  return ok;
}

// --- criterion 2: equality family --------------------------------------------

bool criterion2() {
  bool ok = true;
  // m <= 13: built groups, brute-force element-order sums.
  for (std::uint64_t m : {1, 7, 11, 13}) {
    auto g = m == 1 ? build("A5") : build("A5xC" + std::to_string(m));
    BigInt brute = oracles::psi_bruteforce(g);
    ok &= check(brute == psi_of_group(g).psi,
                "brute-force psi matches for m=" + std::to_string(m));
    ok &= check(herzog_ratio(g.order(), brute).verdict == Verdict::Equal,
                "ratio Equal for m=" + std::to_string(m));
  }
  // Spot brute force at m = 49.
  {
    auto g = build("A5xC49");
    BigInt brute = oracles::psi_bruteforce(g);
    ok &= check(brute == psi_of_group(g).psi, "brute-force psi matches for m=49");
    ok &= check(herzog_ratio(g.order(), brute).verdict == Verdict::Equal,
                "ratio Equal for m=49");
  }
  // Remaining m: the multiplicativity law on built groups.
  for (std::uint64_t m : {77, 91, 121}) {
    auto g = build("A5xC" + std::to_string(m));
    BigInt psi = psi_of_group(g).psi;
    ok &= check(psi == BigInt(211) * psi_cyclic(m),
                "psi(A5 x C_m) = 211 psi(C_m) for m=" + std::to_string(m));
    ok &= check(herzog_ratio(g).verdict == Verdict::Equal,
                "ratio Equal for m=" + std::to_string(m));
  }
  return ok;
}

// --- criterion 3: strict-inequality family ------------------------------------

bool criterion3() {
  bool ok = true;
  for (const char* id : {"S5", "A5xC2", "A5xC3", "SL2(5)", "A6", "PSL2(7)"})
    ok &= check(herzog_ratio(build(id)).verdict == Verdict::Below,
                std::string(id) + " sits strictly Below");
  auto s5 = build("S5");
  ok &= check(psi_of_group(s5).psi == 471 && oracles::psi_bruteforce(s5) == 471,
              "psi(S5) = 471 by both routes");
  auto a5c2 = build("A5xC2");
  ok &= check(psi_of_group(a5c2).psi == 603 && oracles::psi_bruteforce(a5c2) == 603,
              "psi(A5 x C2) = 603 by both routes");
  return ok;
}

// --- criterion 4: oracle equivalence ------------------------------------------

bool criterion4() {
  bool ok = true;
  for (const auto& e : default_manifest()) {
    if (e.expected.at("order") > 10000) continue;
    auto g = e.builder(kDefaultMaxOrder);
    ok &= check(psi_of_group(g).psi == psi_via_cyclic_subgroups(g),
                "psi routes agree on " + e.id);
  }
  return ok;
}

// --- criterion 5: cyclic formula and bounds ------------------------------------

bool criterion5() {
  bool ok = true;
  for (std::uint64_t n = 1; n <= 5000; ++n)
    if (psi_cyclic(n) != oracles::psi_cyclic_bruteforce(n)) {
      ok = check(false, "psi_cyclic(" + std::to_string(n) + ")");
      break;
    }
  for (std::uint64_t n = 2; n <= 5000 && ok; ++n) {
    auto f = factorize(n);
    if (!cyclic_bound_general(n)) ok = check(false, "general bound at " + std::to_string(n));
    if (f.largest_prime() >= 13 && !cyclic_bound_p13(n))
      ok = check(false, "p13 bound at " + std::to_string(n));
    bool small_pi = true;
    for (const auto& pp : f.pairs)
      if (pp.prime > 5) small_pi = false;
    if (small_pi && !cyclic_bound_small_pi_square(n))
      ok = check(false, "pi-square bound at " + std::to_string(n));
  }
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned a = 1; a <= 5; ++a)
      if (!cyclic_bound_small_prime_square(p, a))
        ok = check(false, "prime-square bound");
  for (std::uint64_t p = 2; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned a = 1; a <= 5; ++a)
      for (unsigned b = 1; b <= 5; ++b)
        if (!cyclic_bound_superadditive(p, a, b))
          ok = check(false, "superadditive bound");
  }
  return ok;
}

// --- criterion 6: full lemma suite ----------------------------------------------

bool criterion6() {
  std::vector<std::string> ids;
  for (const auto& e : default_manifest()) ids.push_back(e.id);
  std::set<LemmaId> lemmas(all_lemmas().begin(), all_lemmas().end());
  auto reports = run_suite(ids, lemmas);

  bool ok = true;
  std::size_t met = 0;
  for (const auto& r : reports) {
    met += r.hypothesis_met;
    if (r.violated()) {
      ok = check(false, r.group_id + " lemma " + lemma_name(r.lemma) + " " +
                            r.instance + ": " + r.witness);
    }
  }
  note(std::to_string(reports.size()) + " reports, " + std::to_string(met) +
       " hypotheses met, 0 violations required");

  auto met_instance = [&](const char* gid, LemmaId lemma, const char* instance) {
    return std::any_of(reports.begin(), reports.end(), [&](const LemmaReport& r) {
      return r.group_id == gid && r.lemma == lemma && r.instance == instance &&
             r.hypothesis_met && r.conclusion_holds;
    });
  };
  ok &= check(met_instance("C6", LemmaId::L2_1, "p=3"),
              "lemma 2.1 equality instance (C6, p=3)");
  ok &= check(met_instance("S3", LemmaId::L2_1, "p=3"),
              "lemma 2.1 strict instance (S3, p=3)");
  ok &= check(met_instance("A5xC7", LemmaId::L3_1, "p=7"),
              "lemma 3.1 transfer instance (A5 x C7, p=7)");
  // The biconditional really separates: equality with central Sylow,
  // strictness without.
  auto c6 = build("C6");
  auto p3 = sylow_subgroup(c6, 3);
  ok &= check(psi_of_group(c6).psi ==
                  psi_of_members(c6, p3.members()) *
                      psi_of_group(quotient_group(c6, p3)).psi,
              "psi(C6) = psi(P3) psi(C6/P3) exactly");
  auto s3 = build("S3");
  auto q3 = sylow_subgroup(s3, 3);
  ok &= check(psi_of_group(s3).psi <
                  psi_of_members(s3, q3.members()) *
                      psi_of_group(quotient_group(s3, q3)).psi,
              "psi(S3) < psi(P3) psi(S3/P3) strictly");
  return ok;
}

// --- criterion 7: recognizer soundness/completeness ------------------------------

bool criterion7() {
  const std::map<std::string, std::uint64_t> family = {
      {"A5", 1},      {"A5xC7", 7},   {"A5xC11", 11},
      {"A5xC13", 13}, {"A5xC49", 49}, {"A5xC77", 77}};
  bool ok = true;
  for (const auto& e : default_manifest()) {
    auto rec = recognize_a5_times_cm(e.builder(kDefaultMaxOrder));
    auto it = family.find(e.id);
    if (it != family.end())
      ok &= check(rec.matches && rec.m == it->second,
                  e.id + " recognized with m=" + std::to_string(it->second));
    else
      ok &= check(!rec.matches, e.id + " correctly rejected");
  }
  return ok;
}

// --- criterion 8: documented desk-scale limitation -------------------------------

bool criterion8() {
  std::ifstream in(std::string(OSUM_PROJECT_DIR) + "/README.md");
  if (!check(in.good(), "README.md exists")) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  bool ok = check(text.find("full classification") != std::string::npos,
                  "README states the full classification is out of reach");
  ok &= check(text.find("catalog") != std::string::npos,
              "README points at the catalog-based substitute");
  return ok;
}

}  // namespace

int main() {
  criterion(1, "exact anchors 211, 1617, 663, 1237, 715, 9073/11 > 824",
            criterion1());
  criterion(2, "equality family A5 x C_m for m in {1,7,11,13,49,77,91,121}",
            criterion2());
  criterion(3, "strict Below family with brute-force 471 and 603", criterion3());
  criterion(4, "psi_of_group = psi_via_cyclic_subgroups on the manifest",
            criterion4());
  criterion(5, "cyclic formula vs additive orders to 5000, all five bounds",
            criterion5());
  criterion(6, "full lemma suite: zero violations, named instances exercised",
            criterion6());
  criterion(7, "A5 x C_m recognizer sound and complete on the catalog",
            criterion7());
  criterion(8, "desk-scale limitation documented", criterion8());
  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
