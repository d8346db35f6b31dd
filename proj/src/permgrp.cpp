#include "ordersum/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ordersum/exactnum.hpp"

namespace ordersum {

// --- Permutation -------------------------------------------------------------

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw ValidationError("permutation: degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw ValidationError("permutation: image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im), unchecked{});
}

Permutation Permutation::from_cycle(std::size_t degree,
                                    std::span<const Point> cycle) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] >= degree) throw ValidationError("from_cycle: point out of range");
    im[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& g) const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[i] = g.images_[images_[i]];
  return Permutation(std::move(im), unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(im), unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return h;
}

// --- FiniteGroup -------------------------------------------------------------

FiniteGroup FiniteGroup::from_generators(std::size_t degree,
                                         std::vector<Permutation> generators,
                                         std::size_t max_order,
                                         std::string label) {
  if (degree == 0) throw DomainError("group: degree must be >= 1");
  if (max_order == 0) throw DomainError("group: max_order must be >= 1");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw ValidationError("group: generator degree mismatch");

  FiniteGroup grp;
  grp.degree_ = degree;
  grp.label_ = std::move(label);
  grp.generators_ = std::move(generators);

  grp.elements_.push_back(Permutation::identity(degree));
  grp.index_.emplace(grp.elements_[0], 0);
  std::deque<std::uint32_t> queue;
  queue.push_back(0);

  std::vector<const Permutation*> gens;
  for (const auto& g : grp.generators_)
    if (!g.is_identity()) gens.push_back(&g);

  auto insert = [&](Permutation p) {
    auto [it, fresh] = grp.index_.emplace(std::move(p), grp.elements_.size());
    if (fresh) {
      if (grp.elements_.size() >= max_order)
        throw CapacityError("group: closure exceeds max_order " +
                                std::to_string(max_order) + " (partial count " +
                                std::to_string(grp.elements_.size() + 1) + ")",
                            grp.elements_.size() + 1);
      grp.elements_.push_back(it->first);
      queue.push_back(static_cast<std::uint32_t>(grp.elements_.size() - 1));
    }
  };
  for (const auto* g : gens) insert(*g);

  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (const auto* g : gens) insert(grp.elements_[x].then(*g));
  }

  grp.orders_.reserve(grp.order());
  grp.inverses_.resize(grp.order());
  for (std::size_t i = 0; i < grp.order(); ++i) {
    grp.orders_.push_back(grp.elements_[i].order());
    grp.inverses_[i] =
        static_cast<std::uint32_t>(grp.index_.at(grp.elements_[i].inverse()));
    ++grp.histogram_[grp.orders_[i]];
  }
  return grp;
}

std::uint64_t FiniteGroup::max_element_order() const {
  return histogram_.rbegin()->first;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& [d, count] : histogram_) e = std::lcm(e, d);
  return e;
}

bool FiniteGroup::contains(const Permutation& p) const {
  return index_.find(p) != index_.end();
}

std::optional<std::size_t> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw DomainError("group: permutation not an element");
  return it->second;
}

std::size_t FiniteGroup::compose_idx(std::size_t a, std::size_t b) const {
  return index_.at(elements_[a].then(elements_[b]));
}

std::size_t FiniteGroup::conjugate_idx(std::size_t x, std::size_t g) const {
  return compose_idx(compose_idx(inverses_[g], x), g);
}

// --- Subgroup ----------------------------------------------------------------

Subgroup::Subgroup(const FiniteGroup& parent,
                   std::vector<std::uint32_t> sorted_members,
                   std::vector<std::uint32_t> seeds)
    : parent_(&parent), members_(std::move(sorted_members)), seeds_(std::move(seeds)) {
  if (members_.empty() || members_[0] != 0)
    throw DomainError("subgroup: must contain the identity");
  if (parent_->order() % members_.size() != 0)
    throw DomainError("subgroup: size violates Lagrange");
}

bool Subgroup::contains_index(std::size_t e) const {
  return std::binary_search(members_.begin(), members_.end(),
                            static_cast<std::uint32_t>(e));
}

bool Subgroup::is_cyclic() const { return max_member_order() == members_.size(); }

std::uint64_t Subgroup::max_member_order() const {
  std::uint64_t m = 1;
  for (auto e : members_) m = std::max(m, parent_->element_order_at(e));
  return m;
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < seeds_.size(); ++i)
    for (std::size_t j = i + 1; j < seeds_.size(); ++j)
      if (parent_->compose_idx(seeds_[i], seeds_[j]) !=
          parent_->compose_idx(seeds_[j], seeds_[i]))
        return false;
  return true;
}

bool Subgroup::same_members(const Subgroup& other) const {
  return parent_ == other.parent_ && members_ == other.members_;
}

// --- closure helpers ---------------------------------------------------------

namespace {

// BFS closure in index space.  Returns sorted member indices.
std::vector<std::uint32_t> close_indices(const FiniteGroup& g,
                                         std::span<const std::uint32_t> seeds) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<std::uint32_t> members{0};
  std::deque<std::uint32_t> queue{0};
  std::vector<std::uint32_t> gens;
  for (auto s : seeds)
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
      queue.push_back(s);
      gens.push_back(s);
    }
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (auto s : gens) {
      auto y = static_cast<std::uint32_t>(g.compose_idx(x, s));
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Greedy small generating set for a sorted member list known to be closed.
std::vector<std::uint32_t> small_generating_set(
    const FiniteGroup& g, const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> seeds;
  if (members.size() == 1) return seeds;
  std::vector<std::uint32_t> span{0};
  for (auto m : members) {
    if (std::binary_search(span.begin(), span.end(), m)) continue;
    seeds.push_back(m);
    span = close_indices(g, seeds);
    if (span.size() == members.size()) break;
  }
  return seeds;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::uint32_t> sorted_members) {
  auto seeds = small_generating_set(g, sorted_members);
  return Subgroup(g, std::move(sorted_members), std::move(seeds));
}

bool commutes(const FiniteGroup& g, std::size_t a, std::size_t b) {
  return g.compose_idx(a, b) == g.compose_idx(b, a);
}

// Orbit of an element set under conjugation by the parent's generators;
// feeds core_of.  Conjugates are canonicalized by sorting.
std::vector<std::vector<std::uint32_t>> conjugate_orbit_of_set(
    const FiniteGroup& g, const std::vector<std::uint32_t>& sorted_members) {
  std::vector<std::uint32_t> gen_idx;
  for (const auto& gen : g.generators()) gen_idx.push_back(
      static_cast<std::uint32_t>(g.index_of(gen)));
  std::set<std::vector<std::uint32_t>> seen{sorted_members};
  std::deque<std::vector<std::uint32_t>> queue{sorted_members};
  std::vector<std::vector<std::uint32_t>> orbit{sorted_members};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (auto gi : gen_idx) {
      std::vector<std::uint32_t> conj;
      conj.reserve(cur.size());
      for (auto m : cur)
        conj.push_back(static_cast<std::uint32_t>(g.conjugate_idx(m, gi)));
      std::sort(conj.begin(), conj.end());
      if (seen.insert(conj).second) {
        orbit.push_back(conj);
        queue.push_back(std::move(conj));
      }
    }
  }
  return orbit;
}

}  // namespace

// --- construction ------------------------------------------------------------

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {0}, {}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<std::uint32_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::uint32_t> seeds;
  for (const auto& gen : g.generators())
    if (!gen.is_identity())
      seeds.push_back(static_cast<std::uint32_t>(g.index_of(gen)));
  return Subgroup(g, std::move(all), std::move(seeds));
}

Subgroup subgroup_closure_idx(const FiniteGroup& g,
                              std::span<const std::uint32_t> seed_indices) {
  std::vector<std::uint32_t> seeds;
  for (auto s : seed_indices)
    if (s != 0) seeds.push_back(s);
  auto members = close_indices(g, seeds);
  if (seeds.size() > 8) seeds = small_generating_set(g, members);
  return Subgroup(g, std::move(members), std::move(seeds));
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Permutation> seed) {
  std::vector<std::uint32_t> idx;
  for (const auto& p : seed)
    idx.push_back(static_cast<std::uint32_t>(g.index_of(p)));
  return subgroup_closure_idx(g, idx);
}

Subgroup cyclic_subgroup(const FiniteGroup& g, std::size_t element_index) {
  std::vector<std::uint32_t> members{0};
  std::size_t x = element_index;
  while (x != 0) {
    members.push_back(static_cast<std::uint32_t>(x));
    x = g.compose_idx(x, element_index);
  }
  std::sort(members.begin(), members.end());
  std::vector<std::uint32_t> seeds;
  if (element_index != 0)
    seeds.push_back(static_cast<std::uint32_t>(element_index));
  return Subgroup(g, std::move(members), std::move(seeds));
}

std::vector<Subgroup> distinct_cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Subgroup> result;
  for (std::size_t e = 0; e < g.order(); ++e) {
    auto h = cyclic_subgroup(g, e);
    if (seen.insert(h.members()).second) result.push_back(std::move(h));
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return result;
}

FiniteGroup to_group(const Subgroup& h, std::string label) {
  std::vector<Permutation> gens;
  for (auto s : h.seeds()) gens.push_back(h.parent().elements()[s]);
  auto g = FiniteGroup::from_generators(h.parent().degree(), std::move(gens),
                                        h.order() + 1, std::move(label));
  if (g.order() != h.order()) throw Error("to_group: closure mismatch");
  return g;
}

// --- structure queries -------------------------------------------------------

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (&h.parent() != &g) throw DomainError("is_normal: handle has a different parent");
  for (const auto& gen : g.generators()) {
    auto gi = g.index_of(gen);
    for (auto s : h.seeds())
      if (!h.contains_index(g.conjugate_idx(s, gi))) return false;
  }
  return true;
}

bool is_normal_in(const Subgroup& outer, const Subgroup& inner) {
  const FiniteGroup& g = outer.parent();
  for (auto o : outer.seeds())
    for (auto s : inner.seeds())
      if (!inner.contains_index(g.conjugate_idx(s, o))) return false;
  return true;
}

bool is_central(const FiniteGroup& g, const Subgroup& h) {
  for (const auto& gen : g.generators()) {
    auto gi = g.index_of(gen);
    for (auto s : h.seeds())
      if (!commutes(g, s, gi)) return false;
  }
  return true;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<std::uint32_t> gen_idx;
  for (const auto& gen : g.generators())
    gen_idx.push_back(static_cast<std::uint32_t>(g.index_of(gen)));
  std::vector<std::uint32_t> members;
  for (std::size_t e = 0; e < g.order(); ++e) {
    bool central = true;
    for (auto gi : gen_idx)
      if (!commutes(g, e, gi)) {
        central = false;
        break;
      }
    if (central) members.push_back(static_cast<std::uint32_t>(e));
  }
  return make_subgroup(g, std::move(members));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::uint32_t> members;
  for (std::size_t e = 0; e < g.order(); ++e) {
    bool ok = true;
    for (auto s : h.seeds())
      if (!commutes(g, e, s)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(static_cast<std::uint32_t>(e));
  }
  return make_subgroup(g, std::move(members));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::uint32_t> members;
  for (std::size_t e = 0; e < g.order(); ++e) {
    bool ok = true;
    for (auto s : h.seeds())
      if (!h.contains_index(g.conjugate_idx(s, e))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(static_cast<std::uint32_t>(e));
  }
  return make_subgroup(g, std::move(members));
}

Subgroup core_of(const FiniteGroup& g, const Subgroup& a) {
  auto orbit = conjugate_orbit_of_set(g, a.members());
  std::vector<std::uint32_t> core = a.members();
  for (const auto& conj : orbit) {
    if (core.size() == 1) break;
    std::vector<std::uint32_t> next;
    std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(),
                          std::back_inserter(next));
    core = std::move(next);
  }
  return make_subgroup(g, std::move(core));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent())
    throw DomainError("intersect: handles have different parents");
  std::vector<std::uint32_t> members;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(members));
  return make_subgroup(a.parent(), std::move(members));
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const std::uint32_t> seed) {
  // <seed^G>: close the full conjugation orbit of every seed element.
  std::vector<std::uint32_t> gen_idx;
  for (const auto& gen : g.generators())
    gen_idx.push_back(static_cast<std::uint32_t>(g.index_of(gen)));
  std::vector<bool> in_orbit(g.order(), false);
  std::vector<std::uint32_t> all;
  std::deque<std::uint32_t> queue;
  for (auto s : seed)
    if (!in_orbit[s]) {
      in_orbit[s] = true;
      all.push_back(s);
      queue.push_back(s);
    }
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto gi : gen_idx) {
      auto y = static_cast<std::uint32_t>(g.conjugate_idx(x, gi));
      if (!in_orbit[y]) {
        in_orbit[y] = true;
        all.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return subgroup_closure_idx(g, all);
}

namespace {

// Derived subgroup from a generating set, with conjugation restricted to the
// given generators (the whole group for G', the subgroup for deeper terms).
Subgroup derived_from_seeds(const FiniteGroup& g,
                            const std::vector<std::uint32_t>& gen_idx) {
  std::vector<std::uint32_t> commutators;
  for (auto a : gen_idx)
    for (auto b : gen_idx) {
      auto c = static_cast<std::uint32_t>(g.compose_idx(
          g.compose_idx(g.inverse_idx(a), g.inverse_idx(b)), g.compose_idx(a, b)));
      if (c != 0) commutators.push_back(c);
    }
  // Conjugation orbit of the commutators under the generating set.
  std::vector<bool> seen(g.order(), false);
  std::vector<std::uint32_t> all;
  std::deque<std::uint32_t> queue;
  for (auto c : commutators)
    if (!seen[c]) {
      seen[c] = true;
      all.push_back(c);
      queue.push_back(c);
    }
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto gi : gen_idx) {
      auto y = static_cast<std::uint32_t>(g.conjugate_idx(x, gi));
      if (!seen[y]) {
        seen[y] = true;
        all.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return subgroup_closure_idx(g, all);
}

}  // namespace

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<std::uint32_t> gen_idx;
  for (const auto& gen : g.generators())
    gen_idx.push_back(static_cast<std::uint32_t>(g.index_of(gen)));
  return derived_from_seeds(g, gen_idx);
}

Subgroup derived_subgroup_of(const Subgroup& h) {
  return derived_from_seeds(h.parent(), h.seeds());
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  series.push_back(whole_group(g));
  while (true) {
    auto next = derived_subgroup_of(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) {
  return derived_series(g).back().is_trivial();
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("sylow_subgroup: p must be prime");
  if (g.order() % p != 0)
    throw DomainError("sylow_subgroup: p does not divide the group order");
  std::size_t p_part = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) p_part *= p;

  auto is_p_power_order = [&](std::size_t e) {
    std::uint64_t o = g.element_order_at(e);
    while (o % p == 0) o /= p;
    return o == 1;
  };

  // Seed with a p-element (Cauchy guarantees one): take any element whose
  // order is divisible by p and raise it to the cofactor power.
  std::size_t seed = 0;
  for (std::size_t e = 1; e < g.order(); ++e) {
    std::uint64_t o = g.element_order_at(e);
    if (o % p == 0) {
      std::uint64_t cof = o;
      while (cof % p == 0) cof /= p;
      seed = e;
      for (std::uint64_t k = 1; k < cof; ++k) seed = g.compose_idx(seed, e);
      break;
    }
  }
  if (seed == 0) throw Error("sylow_subgroup: no p-element found");

  Subgroup sub = cyclic_subgroup(g, seed);
  while (sub.order() < p_part) {
    // The normalizer properly contains the p-subgroup and carries a p-element
    // outside it; adjoining that element grows the p-part.
    Subgroup norm = normalizer(g, sub);
    std::size_t next = g.order();
    for (auto e : norm.members())
      if (!sub.contains_index(e) && is_p_power_order(e)) {
        next = e;
        break;
      }
    if (next == g.order())
      throw Error("sylow_subgroup: stalled below the full p-part");
    std::vector<std::uint32_t> seeds = sub.seeds();
    seeds.push_back(static_cast<std::uint32_t>(next));
    sub = subgroup_closure_idx(g, seeds);
    if (sub.order() % p != 0 || p_part % sub.order() != 0)
      throw Error("sylow_subgroup: extension left the p-group lattice");
  }
  return sub;
}

std::size_t sylow_count(const FiniteGroup& g, std::uint64_t p) {
  auto sub = sylow_subgroup(g, p);
  std::size_t count = g.order() / normalizer(g, sub).order();
  if (count % p != 1) throw Error("sylow_count: n_p != 1 mod p");
  return count;
}

namespace {

struct CosetDecomposition {
  std::vector<std::uint32_t> coset_of;  // element index -> coset id
  std::vector<std::uint32_t> reps;      // coset id -> smallest element index
};

// Right cosets Hx; coset 0 is H itself, reps ascend.
CosetDecomposition right_cosets(const FiniteGroup& g, const Subgroup& h) {
  CosetDecomposition d;
  d.coset_of.assign(g.order(), UINT32_MAX);
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (d.coset_of[e] != UINT32_MAX) continue;
    auto id = static_cast<std::uint32_t>(d.reps.size());
    d.reps.push_back(static_cast<std::uint32_t>(e));
    for (auto m : h.members())
      d.coset_of[g.compose_idx(m, e)] = id;
  }
  return d;
}

}  // namespace

FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n,
                           std::string label) {
  if (!is_normal(g, n)) throw DomainError("quotient_group: subgroup is not normal");
  auto cosets = right_cosets(g, n);
  std::size_t q = cosets.reps.size();
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    auto gi = g.index_of(gen);
    std::vector<Point> im(q);
    for (std::size_t c = 0; c < q; ++c)
      im[c] = cosets.coset_of[g.compose_idx(cosets.reps[c], gi)];
    gens.push_back(Permutation(std::move(im)));
  }
  auto quo = FiniteGroup::from_generators(std::max<std::size_t>(q, 1), std::move(gens),
                                          q + 1, std::move(label));
  // order == [G:N] pins the action kernel to exactly N.
  if (quo.order() != q) throw Error("quotient_group: coset action order mismatch");
  return quo;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t max_order, std::string label) {
  std::size_t deg = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> im(deg);
    for (std::size_t i = 0; i < a.degree(); ++i) im[i] = g(static_cast<Point>(i));
    for (std::size_t i = a.degree(); i < deg; ++i) im[i] = static_cast<Point>(i);
    gens.push_back(Permutation(std::move(im)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> im(deg);
    for (std::size_t i = 0; i < a.degree(); ++i) im[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < b.degree(); ++i)
      im[a.degree() + i] = static_cast<Point>(a.degree() + g(static_cast<Point>(i)));
    gens.push_back(Permutation(std::move(im)));
  }
  auto prod =
      FiniteGroup::from_generators(deg, std::move(gens), max_order, std::move(label));
  if (prod.order() != a.order() * b.order())
    throw Error("direct_product: order is not the product of the factor orders");
  return prod;
}

bool is_maximal(const FiniteGroup& g, const Subgroup& h) {
  if (&h.parent() != &g) throw DomainError("is_maximal: handle has a different parent");
  if (h.is_whole_group()) throw DomainError("is_maximal: subgroup must be proper");
  // Normal subgroups: correspondence reduces maximality to prime index.
  if (is_normal(g, h)) return is_prime(h.index_in_parent());
  auto cosets = right_cosets(g, h);
  for (std::size_t c = 1; c < cosets.reps.size(); ++c) {
    std::vector<std::uint32_t> seeds = h.seeds();
    seeds.push_back(cosets.reps[c]);
    if (close_indices(g, seeds).size() != g.order()) return false;
  }
  return true;
}

bool is_simple(const FiniteGroup& g) {
  if (g.order() <= 1) throw DomainError("is_simple: group must be non-trivial");
  for (auto rep : conjugacy_class_reps(g)) {
    if (rep == 0) continue;
    std::uint32_t seed[] = {rep};
    if (normal_closure(g, seed).order() != g.order()) return false;
  }
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i].then(gens[j]) == gens[j].then(gens[i]))) return false;
  return true;
}

std::uint64_t max_element_order(const FiniteGroup& g) {
  return g.max_element_order();
}

std::vector<std::uint32_t> conjugacy_class_reps(const FiniteGroup& g) {
  std::vector<std::uint32_t> gen_idx;
  for (const auto& gen : g.generators())
    gen_idx.push_back(static_cast<std::uint32_t>(g.index_of(gen)));
  std::vector<bool> seen(g.order(), false);
  std::vector<std::uint32_t> reps;
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (seen[e]) continue;
    reps.push_back(static_cast<std::uint32_t>(e));
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(e)};
    seen[e] = true;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto gi : gen_idx) {
        auto y = static_cast<std::uint32_t>(g.conjugate_idx(x, gi));
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return reps;
}

bool is_closed_subset(const FiniteGroup& g,
                      std::span<const std::uint32_t> sorted_set) {
  if (sorted_set.empty() || sorted_set[0] != 0) return false;
  std::vector<std::uint32_t> seeds;
  std::vector<std::uint32_t> span{0};
  for (auto m : sorted_set) {
    if (std::binary_search(span.begin(), span.end(), m)) continue;
    seeds.push_back(m);
    span = close_indices(g, seeds);
    for (auto e : span)
      if (!std::binary_search(sorted_set.begin(), sorted_set.end(), e))
        return false;
  }
  return span.size() == sorted_set.size();
}

}  // namespace ordersum
