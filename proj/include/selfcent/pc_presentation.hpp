#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "selfcent/group_table.hpp"

namespace selfcent {

/// A word g_{i1}^{e1} g_{i2}^{e2} ... over 0-based generator indices.
using PcWord = std::vector<std::pair<unsigned, unsigned>>;

/// Power-commutator presentation of a finite p-group on generators
/// g_0 .. g_{r-1}:
///   g_i^{relative_orders[i]} = powers[i]
///   [g_i, g_j] = commutators[{i, j}]   for i > j (absent entries are trivial)
/// Every right-hand side may only involve generators of index greater than i.
struct PcPresentation {
  unsigned p = 2;
  std::vector<unsigned> relative_orders;
  std::vector<PcWord> powers;
  std::map<std::pair<unsigned, unsigned>, PcWord> commutators;
  std::string name = "pc";

  std::size_t rank() const noexcept { return relative_orders.size(); }
  std::size_t order() const;
};

/// Throws InputError when the presentation breaks the normal-form discipline
/// or a relative order is not a power of p.
void validate_pc_presentation(const PcPresentation& pres);

/// Collects normal words a_0^{e_0} ... a_{r-1}^{e_{r-1}} (element index is the
/// mixed-radix number with g_0 most significant) and verifies the result is a
/// group. Throws InconsistentPresentation; when a generator overlap test
/// fails, the exception carries that 1-based generator triple.
GroupTable from_pc_presentation(const PcPresentation& pres);

/// Element index of the normal word with the given exponents.
Elem pc_element(const PcPresentation& pres, const std::vector<unsigned>& exponents);

}  // namespace selfcent
