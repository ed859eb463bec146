#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "selfcent/group_core.hpp"

namespace selfcent {

/// Class of a nilpotent group (trivial group: 0); nullopt if the lower
/// central series stabilises above the trivial subgroup.
std::optional<unsigned> nilpotency_class(const GroupTable& g);

/// |G| = p^n with n >= 2 and class n - 1. Orders p^2 count as maximal class
/// (class 1 = n - 1). Throws InputError if |G| is not a power of p.
bool is_maximal_class(const GroupTable& g, unsigned p);

/// P1 = {x : [x, s] in P4 for all s in P2}, with P2 = gamma_2 and
/// P4 = gamma_4 (trivial when the class is below 4). Requires a maximal-class
/// p-group of order at least p^4.
SubgroupSet two_step_centralizer(const GroupTable& g);

std::size_t exponent(const GroupTable& g);
bool is_elementary_abelian(const GroupTable& g, unsigned p);
bool is_elementary_abelian(const GroupTable& g, const SubgroupSet& s, unsigned p);
/// Some index-p subgroup is elementary abelian.
bool has_elementary_abelian_maximal(const GroupTable& g, unsigned p);
/// Some maximal subgroup is abelian.
bool has_abelian_maximal(const GroupTable& g);

struct MetacyclicWitness {
  SubgroupSet normal;  // cyclic normal subgroup N
  Elem top;            // x with <x, N> = G
};

/// Cyclic normal N and x with <x>N = G, N scanned in decreasing order.
std::optional<MetacyclicWitness> is_metacyclic(const GroupTable& g, std::size_t cap = 256);

struct PGroupProfile {
  unsigned p = 0;
  unsigned n = 0;
  std::optional<unsigned> nilpotency_class;
  bool maximal_class = false;
  /// P1..Pn for maximal-class groups of order >= p^4; the lower central
  /// series otherwise.
  std::vector<SubgroupSet> p_series;
  std::size_t exponent = 0;
  bool abelian = false;
};

PGroupProfile profile_p_group(const GroupTable& g);

}  // namespace selfcent
