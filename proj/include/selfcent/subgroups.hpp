#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "selfcent/group_core.hpp"

namespace selfcent {

/// Default enumeration caps (group orders).
inline constexpr std::size_t kDefaultSubgroupCap = 256;
inline constexpr std::size_t kDefaultPairCap = 2048;

struct SubgroupInventory {
  std::vector<SubgroupSet> subgroups;  // sorted by (order, element list)
  bool complete = false;
};

/// Every subgroup exactly once: seeded with cyclic subgroups and extended by
/// one outside cyclic generator at a time until nothing new appears.
SubgroupInventory all_subgroups(const GroupTable& g, std::size_t cap = kDefaultSubgroupCap);

/// One representative element per cyclic subgroup (its least generator),
/// in increasing index order, identity excluded.
std::vector<Elem> cyclic_representatives(const GroupTable& g);

/// Maximal subgroups. For p-groups these are the preimages of the
/// hyperplanes of G/Φ(G); other groups go through all_subgroups.
std::vector<SubgroupSet> maximal_subgroups(const GroupTable& g, std::size_t cap = kDefaultSubgroupCap);
std::vector<SubgroupSet> maximal_subgroups_p_group(const GroupTable& g, unsigned p);
std::vector<SubgroupSet> maximal_subgroups_generic(const GroupTable& g,
                                                   std::size_t cap = kDefaultSubgroupCap);

/// A minimal generating set of a p-group modulo its Frattini subgroup:
/// d elements whose images form a basis of G/Φ(G).
std::vector<Elem> frattini_basis(const GroupTable& g, const SubgroupSet& phi);

struct TwoGenerated {
  SubgroupSet subgroup;
  std::pair<Elem, Elem> pair;
};

/// One entry per distinct <x, y> over non-commuting pairs, in scan order.
std::vector<TwoGenerated> two_generated_subgroups(const GroupTable& g,
                                                  std::size_t cap = kDefaultPairCap,
                                                  ClosureCache* cache = nullptr);

/// Non-abelian subgroups all of whose proper subgroups are abelian, sorted
/// by (order, element list).
std::vector<SubgroupSet> minimal_nonabelian_subgroups(const GroupTable& g,
                                                      std::size_t cap = kDefaultPairCap,
                                                      ClosureCache* cache = nullptr);

enum class MinNonabelianKind { K1, K2, K3, NotPGroup };

struct MinNonabelianClass {
  MinNonabelianKind kind = MinNonabelianKind::NotPGroup;
  unsigned m = 0;
  unsigned n = 0;
  bool operator==(const MinNonabelianClass&) const = default;
};

std::string to_string(const MinNonabelianClass& c);

/// Identifies a minimal non-abelian subgroup K as K1 (Q8), K2(m, n)
/// (metacyclic) or K3(m, n). Throws InputError if K is not minimal
/// non-abelian.
MinNonabelianClass classify_minimal_nonabelian(const GroupTable& g, const SubgroupSet& k, unsigned p);

/// True when `s` is non-abelian and every maximal subgroup of it is abelian.
bool is_minimal_nonabelian(const GroupTable& g, const SubgroupSet& s);

/// Rank d(G) = log_p |G : Φ(G)| of a p-group.
unsigned generator_rank(const GroupTable& g, unsigned p);

}  // namespace selfcent
