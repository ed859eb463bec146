#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "selfcent/element_set.hpp"
#include "selfcent/group_table.hpp"

namespace selfcent {

/// A subgroup of a parent GroupTable held as a bit-vector over the parent's
/// element indices, together with a generating set.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  SubgroupSet(ElementSet bits, std::vector<Elem> generators)
      : bits_(std::move(bits)), order_(bits_.count()), generators_(std::move(generators)) {}

  const ElementSet& bits() const noexcept { return bits_; }
  std::size_t order() const noexcept { return order_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  bool contains(Elem x) const noexcept { return bits_.test(x); }
  std::vector<Elem> elements() const { return bits_.elements(); }

  bool is_subgroup_of(const SubgroupSet& o) const noexcept { return bits_.is_subset_of(o.bits_); }
  bool operator==(const SubgroupSet& o) const noexcept { return bits_ == o.bits_; }

 private:
  ElementSet bits_;
  std::size_t order_ = 0;
  std::vector<Elem> generators_;
};

// ---- element arithmetic (range-checked) -----------------------------------

Elem multiply(const GroupTable& g, Elem x, Elem y);
Elem inverse(const GroupTable& g, Elem x);
/// x^k for any integer k (negative exponents use the inverse).
Elem power(const GroupTable& g, Elem x, long long k);
/// [x, y] = x^-1 y^-1 x y.
Elem commutator(const GroupTable& g, Elem x, Elem y);
/// x^y = y^-1 x y.
Elem conjugate(const GroupTable& g, Elem x, Elem y);
std::size_t element_order(const GroupTable& g, Elem x);

// Unchecked variants for hot loops.
inline Elem comm_unchecked(const GroupTable& g, Elem x, Elem y) {
  return g.mul(g.inv(g.mul(y, x)), g.mul(x, y));
}
std::vector<std::size_t> element_orders(const GroupTable& g);

// ---- subgroup-level operators ----------------------------------------------

SubgroupSet whole_group(const GroupTable& g);
SubgroupSet trivial_subgroup(const GroupTable& g);

/// Least subgroup containing `gens`. The generators field keeps `gens`.
SubgroupSet generated_subgroup(const GroupTable& g, std::span<const Elem> gens);

/// Least subgroup containing `base` and `extra`.
SubgroupSet extend_subgroup(const GroupTable& g, const SubgroupSet& base,
                            std::span<const Elem> extra);

/// Least subgroup containing every element of `elems`.
SubgroupSet subgroup_of_elements(const GroupTable& g, const ElementSet& elems);

/// Builds a SubgroupSet from an element set already known to be a subgroup,
/// choosing a small generating set greedily.
SubgroupSet subgroup_from_closed_set(const GroupTable& g, const ElementSet& closed);

/// Checks closure, identity and inverses of an arbitrary element set.
bool is_closed_subgroup(const GroupTable& g, const ElementSet& elems);

/// Elements commuting with every element of `s` (tested against its
/// generators, which suffices).
SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& s);
SubgroupSet centralizer_of_elements(const GroupTable& g, std::span<const Elem> elems);
SubgroupSet center(const GroupTable& g);

bool is_abelian(const GroupTable& g, const SubgroupSet& s);
bool is_abelian(const GroupTable& g);
bool is_normal(const GroupTable& g, const SubgroupSet& s);

/// Subgroup generated by all commutators [a, b] with a in `a`, b in `b`.
SubgroupSet commutator_subgroup(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet derived_subgroup(const GroupTable& g, const SubgroupSet& s);
SubgroupSet power_subgroup(const GroupTable& g, const SubgroupSet& s, unsigned p);
/// Subgroup generated by the elements of `s` of order exactly p.
SubgroupSet omega1(const GroupTable& g, const SubgroupSet& s, unsigned p);
/// Subgroup generated by a ∪ b.
SubgroupSet join(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet intersection(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b);

/// Frattini subgroup: G'G^p for p-groups, otherwise the intersection of the
/// maximal subgroups from a full enumeration (capped).
SubgroupSet frattini(const GroupTable& g);
/// The intersection-of-maximal-subgroups route, regardless of group type.
SubgroupSet frattini_by_maximals(const GroupTable& g);

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], up to stabilisation.
std::vector<SubgroupSet> lower_central_series(const GroupTable& g);

/// If |G| = p^k with k >= 1, returns (p, k).
std::optional<std::pair<unsigned, unsigned>> prime_power(std::size_t n);

// ---- products and restriction ----------------------------------------------

GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// N ⋊ H where action[h] is the permutation of N's indices induced by h.
/// Elements are pairs (n, h) with (n1, h1)(n2, h2) = (n1 · h1(n2), h1 h2).
/// Throws ConstructionError unless every action[h] is an automorphism and
/// h -> action[h] is a homomorphism.
GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const std::vector<std::vector<Elem>>& action);

/// The subgroup `s` as a standalone table; `embedding[i]` is the parent index
/// of element i (sorted, so embedding[0] = 0).
struct RestrictedGroup {
  GroupTable table;
  std::vector<Elem> embedding;
};
RestrictedGroup restrict_to(const GroupTable& g, const SubgroupSet& s, std::string name);

/// Memo of generated_subgroup keyed by the sorted generator list. Safe for
/// concurrent use.
class ClosureCache {
 public:
  explicit ClosureCache(const GroupTable& g) : group_(g) {}
  SubgroupSet generate(std::span<const Elem> gens);
  std::size_t size() const;
  std::size_t hits() const;

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<Elem>& v) const noexcept;
  };
  GroupTable group_;
  mutable std::mutex mutex_;
  std::unordered_map<std::vector<Elem>, SubgroupSet, VecHash> memo_;
  std::size_t hits_ = 0;
};

}  // namespace selfcent
