#include "selfcent/structure.hpp"

#include <algorithm>
#include <numeric>

#include "selfcent/subgroups.hpp"

namespace selfcent {

std::optional<unsigned> nilpotency_class(const GroupTable& g) {
  const auto lcs = lower_central_series(g);
  if (lcs.back().order() != 1) return std::nullopt;
  return static_cast<unsigned>(lcs.size() - 1);
}

bool is_maximal_class(const GroupTable& g, unsigned p) {
  if (g.order() == 1) return false;
  const auto pk = prime_power(g.order());
  if (!pk || pk->first != p)
    throw InputError("order " + std::to_string(g.order()) + " is not a power of " + std::to_string(p));
  if (pk->second < 2) return false;
  const auto cls = nilpotency_class(g);
  return cls && *cls == pk->second - 1;
}

SubgroupSet two_step_centralizer(const GroupTable& g) {
  const auto pk = prime_power(g.order());
  if (!pk || pk->second < 4 || !is_maximal_class(g, pk->first))
    throw InputError("two-step centralizer needs a maximal-class p-group of order at least p^4");
  const auto lcs = lower_central_series(g);
  const SubgroupSet& p2 = lcs[1];
  const SubgroupSet p4 = lcs.size() > 3 ? lcs[3] : trivial_subgroup(g);
  ElementSet bits(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : p2.generators())
      if (!p4.contains(comm_unchecked(g, x, s))) {
        ok = false;
        break;
      }
    if (ok) bits.set(x);
  }
  return subgroup_from_closed_set(g, bits);
}

std::size_t exponent(const GroupTable& g) {
  std::size_t e = 1;
  for (auto o : element_orders(g)) e = std::lcm(e, o);
  return e;
}

bool is_elementary_abelian(const GroupTable& g, const SubgroupSet& s, unsigned p) {
  if (!is_abelian(g, s)) return false;
  bool ok = true;
  s.bits().for_each([&](Elem x) {
    if (ok && power(g, x, p) != 0) ok = false;
  });
  return ok;
}

bool is_elementary_abelian(const GroupTable& g, unsigned p) {
  return is_elementary_abelian(g, whole_group(g), p);
}

bool has_elementary_abelian_maximal(const GroupTable& g, unsigned p) {
  for (const auto& m : maximal_subgroups(g))
    if (m.order() * p == g.order() && is_elementary_abelian(g, m, p)) return true;
  return false;
}

bool has_abelian_maximal(const GroupTable& g) {
  for (const auto& m : maximal_subgroups(g))
    if (is_abelian(g, m)) return true;
  return false;
}

std::optional<MetacyclicWitness> is_metacyclic(const GroupTable& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapabilityError("metacyclic search on order-" + std::to_string(g.order()) + " group", cap);
  std::vector<SubgroupSet> candidates{trivial_subgroup(g)};
  for (Elem r : cyclic_representatives(g)) {
    const Elem gen[1] = {r};
    auto c = generated_subgroup(g, gen);
    if (is_normal(g, c)) candidates.push_back(std::move(c));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const SubgroupSet& a, const SubgroupSet& b) { return a.order() > b.order(); });
  for (const auto& n : candidates) {
    const std::size_t quotient = g.order() / n.order();
    for (Elem x = 0; x < g.order(); ++x) {
      if (quotient > 1 && n.contains(x)) continue;
      std::size_t k = 1;
      Elem y = x;
      while (!n.contains(y)) {
        y = g.mul(y, x);
        ++k;
      }
      if (k == quotient) return MetacyclicWitness{n, x};
    }
  }
  return std::nullopt;
}

PGroupProfile profile_p_group(const GroupTable& g) {
  PGroupProfile out;
  if (g.order() == 1) {
    out.nilpotency_class = 0;
    out.exponent = 1;
    out.abelian = true;
    out.p_series = {trivial_subgroup(g)};
    return out;
  }
  const auto pk = prime_power(g.order());
  if (!pk) throw InputError("profile requires a group of prime-power order");
  out.p = pk->first;
  out.n = pk->second;
  const auto lcs = lower_central_series(g);
  out.nilpotency_class = static_cast<unsigned>(lcs.size() - 1);
  out.maximal_class = out.n >= 2 && *out.nilpotency_class == out.n - 1;
  out.exponent = exponent(g);
  out.abelian = *out.nilpotency_class <= 1;
  if (out.maximal_class && out.n >= 4) {
    out.p_series.push_back(two_step_centralizer(g));
    out.p_series.insert(out.p_series.end(), lcs.begin() + 1, lcs.end());
  } else {
    out.p_series = lcs;
  }
  return out;
}

}  // namespace selfcent
