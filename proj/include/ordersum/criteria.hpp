#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ordersum/catalog.hpp"
#include "ordersum/permgrp.hpp"
#include "ordersum/psi.hpp"

namespace ordersum {

enum class LemmaId {
  L2_1,   // normal cyclic Sylow: psi(G) <= psi(P) psi(G/P), equality iff central
  L2_2,   // psi(G) <= psi(G/H) |H|^2
  L2_3,   // psi(GxH) <= psi(G) psi(H), equality iff coprime orders
  L2_4,   // small cyclic index forces a normal Sylow p or a maximal <x>
  L2_5,   // psi(C_n) >= 2 n^2/(p+1)
  L2_6,   // prime-power index over cyclic-by-cyclic-2-power implies solvable
  L2_7,   // abelian maximal subgroup implies solvable
  L2_8,   // G/Z(G) simple: G' perfect, G'/Z(G') the same simple group
  L2_9,   // cyclic Sylow at the smallest prime has a normal complement
  L2_10,  // cyclic proper A: |A : core(A)| < [G : A]
  L2_11,  // n_p = 1 + rp range constraint (prime power or Fermat exception)
  L2_12,  // no n_3 = 22, n_5 = 21, n_p = 1 + 3p for p >= 7
  L2_13,  // psi ratio above r/s forces a small cyclic index
  L2_14,  // p^(2a) resp. m^2 beat (13/12) psi on {2,3,5}-numbers
  L2_15,  // psi(C_n) >= (5005/1152) n^2/(p+1) when p >= 13
  L2_16,  // psi(C_{p^(a+b)}) > psi(C_{p^a}) psi(C_{p^b})
  L3_1,   // ratio-preserving normal p-complement
  MainTheorem,
  SolvabilityCriterion,  // ratio Above implies solvable
};

std::string lemma_name(LemmaId id);
std::optional<LemmaId> lemma_from_name(const std::string& name);
const std::vector<LemmaId>& all_lemmas();

struct LemmaReport {
  LemmaId lemma;
  std::string group_id;
  std::string instance;
  bool hypothesis_met = false;
  bool conclusion_holds = true;  // vacuously true when the hypothesis fails
  std::string witness;           // non-empty only on a violation

  bool violated() const { return hypothesis_met && !conclusion_holds; }
};

struct RecognitionResult {
  bool matches = false;
  std::optional<std::uint64_t> m;
  std::uint64_t center_order = 1;
  std::uint64_t derived_order = 1;
};

// --- checkers (one per lemma / theorem) --------------------------------------

LemmaReport check_solvability_criterion(const FiniteGroup& g);
RecognitionResult recognize_a5_times_cm(const FiniteGroup& g);
LemmaReport check_main_theorem(const FiniteGroup& g);

LemmaReport check_sylow_normal_bound(const FiniteGroup& g, std::uint64_t p);
LemmaReport check_quotient_bound(const FiniteGroup& g, const Subgroup& h,
                                 std::string instance = "");
LemmaReport check_direct_product_law(const FiniteGroup& product,
                                     const FiniteGroup& a, const FiniteGroup& b);
LemmaReport check_cyclic_index_existence(const FiniteGroup& g, std::uint64_t r,
                                         std::uint64_t s);
LemmaReport check_lemma_2p(const FiniteGroup& g, std::uint64_t x_order);
LemmaReport check_abelian_maximal(const FiniteGroup& g);
LemmaReport check_perfect_derived(const FiniteGroup& g);
LemmaReport check_normal_p_complement(const FiniteGroup& g, std::uint64_t p);
LemmaReport check_complement_transfer(const FiniteGroup& g, std::uint64_t p);
LemmaReport check_prime_power_index_solvable(const FiniteGroup& g,
                                             const Subgroup& a, const Subgroup& b);
LemmaReport check_core_bound(const FiniteGroup& g, const Subgroup& a,
                             std::string instance = "");
// Conjunction of the Sylow-count constraints of both counting lemmas; the
// combined report carries L2_12.
LemmaReport check_sylow_count_constraints(const FiniteGroup& g);

// --- suite -------------------------------------------------------------------

// Applicable checker instances for one group.  meta supplies product factors
// and marked normal subgroups when the group came from the catalog.
std::vector<LemmaReport> run_group_suite(const FiniteGroup& g,
                                         const CatalogEntry* meta,
                                         const std::set<LemmaId>& lemmas,
                                         std::size_t max_order = kDefaultMaxOrder);

// Cross product of checkers over catalog ids, deterministically ordered by
// (group id, lemma, instance).  Unknown ids raise InputError naming them.
std::vector<LemmaReport> run_suite(std::span<const std::string> targets,
                                   const std::set<LemmaId>& lemmas,
                                   std::size_t max_order = kDefaultMaxOrder);

void sort_reports(std::vector<LemmaReport>& reports);

}  // namespace ordersum
