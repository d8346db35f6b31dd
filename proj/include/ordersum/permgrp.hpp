#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordersum/errors.hpp"

namespace ordersum {

using Point = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 200000;

// A permutation of {0..d-1} stored as its image array.
//
// Composition convention (fixed project-wide): a.then(b) applies a first,
// then b, i.e. (a.then(b))(x) = b(a(x)).  The product written g*h in group-
// theoretic identities below always means "g then h".
class Permutation {
 public:
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);
  static Permutation from_cycle(std::size_t degree, std::span<const Point> cycle);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation then(const Permutation& g) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;  // lcm of cycle lengths

  bool operator==(const Permutation&) const = default;

 private:
  struct unchecked {};
  Permutation(std::vector<Point> images, unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) {
  return a.then(b);
}

inline std::uint64_t element_order(const Permutation& g) { return g.order(); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// A fully enumerated permutation group.  Immutable after construction and
// safe to share across concurrent readers.  elements()[0] is the identity.
class FiniteGroup {
 public:
  static FiniteGroup from_generators(std::size_t degree,
                                     std::vector<Permutation> generators,
                                     std::size_t max_order = kDefaultMaxOrder,
                                     std::string label = "");

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // order -> number of elements of that order
  const std::map<std::uint64_t, std::size_t>& order_histogram() const {
    return histogram_;
  }
  std::uint64_t element_order_at(std::size_t index) const { return orders_[index]; }
  std::uint64_t max_element_order() const;
  std::uint64_t exponent() const;  // lcm of all element orders

  bool contains(const Permutation& p) const;
  std::optional<std::size_t> find(const Permutation& p) const;
  std::size_t index_of(const Permutation& p) const;  // DomainError if absent

  // Index-space group operations (indices into elements()).
  std::size_t compose_idx(std::size_t a, std::size_t b) const;
  std::size_t inverse_idx(std::size_t a) const { return inverses_[a]; }
  std::size_t conjugate_idx(std::size_t x, std::size_t g) const;  // g^-1 x g

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 1;
  std::string label_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> inverses_;
  std::map<std::uint64_t, std::size_t> histogram_;
};

// A subgroup as a non-owning view into its parent group: sorted member
// indices plus a small generating set.  Handles stay valid as long as the
// parent group outlives them.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<std::uint32_t> sorted_members,
           std::vector<std::uint32_t> seeds);

  const FiniteGroup& parent() const { return *parent_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  const std::vector<std::uint32_t>& seeds() const { return seeds_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index_in_parent() const { return parent_->order() / order(); }

  bool contains_index(std::size_t e) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole_group() const { return members_.size() == parent_->order(); }

  // Largest member order equals the subgroup order.
  bool is_cyclic() const;
  // Seeds commute pairwise.
  bool is_abelian() const;

  std::uint64_t max_member_order() const;

  bool same_members(const Subgroup& other) const;

 private:
  const FiniteGroup* parent_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> seeds_;
};

// --- construction -----------------------------------------------------------

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Permutation> seed);
Subgroup subgroup_closure_idx(const FiniteGroup& g,
                              std::span<const std::uint32_t> seed_indices);
Subgroup cyclic_subgroup(const FiniteGroup& g, std::size_t element_index);

// All distinct cyclic subgroups <x>, each with a generator seed, ordered by
// (order, smallest member index).
std::vector<Subgroup> distinct_cyclic_subgroups(const FiniteGroup& g);

// Materialize a subgroup as a standalone group on the same points.
FiniteGroup to_group(const Subgroup& h, std::string label = "");

// --- structure queries ------------------------------------------------------

bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_normal_in(const Subgroup& outer, const Subgroup& inner);
bool is_central(const FiniteGroup& g, const Subgroup& h);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup core_of(const FiniteGroup& g, const Subgroup& a);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const FiniteGroup& g, std::span<const std::uint32_t> seed);

Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup derived_subgroup_of(const Subgroup& h);
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p);
std::size_t sylow_count(const FiniteGroup& g, std::uint64_t p);

// Right-translation action on right cosets; the action kernel is exactly n
// (guaranteed by the order check; tests recompute the kernel directly).
FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n,
                           std::string label = "");

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t max_order = kDefaultMaxOrder,
                           std::string label = "");

bool is_maximal(const FiniteGroup& g, const Subgroup& h);
bool is_simple(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
std::uint64_t max_element_order(const FiniteGroup& g);

// One representative index per conjugacy class, ascending.
std::vector<std::uint32_t> conjugacy_class_reps(const FiniteGroup& g);

// Greedy span test: returns true iff the given sorted index set is closed
// under the group operation (i.e. forms a subgroup).
bool is_closed_subset(const FiniteGroup& g, std::span<const std::uint32_t> sorted_set);

}  // namespace ordersum
