#include "selfcent/subgroups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include "selfcent/families.hpp"
#include "selfcent/structure.hpp"

namespace selfcent {

namespace {

void sort_subgroups(std::vector<SubgroupSet>& v) {
  std::sort(v.begin(), v.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.bits().lex_less(b.bits());
  });
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Isomorphism invariants used to pin down (m, n): element-order statistics
// and the abelian invariants of K/K' (as counts of x with x^(p^k) in K').
struct Fingerprint {
  std::map<std::size_t, std::size_t> order_stats;
  std::vector<std::size_t> abelianization_counts;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const GroupTable& k, unsigned p) {
  Fingerprint f;
  for (auto o : element_orders(k)) ++f.order_stats[o];
  const auto whole = whole_group(k);
  const auto derived = derived_subgroup(k, whole);
  const unsigned total = prime_power(k.order()) ? prime_power(k.order())->second : 0;
  std::size_t pk = 1;
  for (unsigned e = 0; e <= total; ++e) {
    std::size_t c = 0;
    for (Elem x = 0; x < k.order(); ++x)
      if (derived.contains(power(k, x, static_cast<long long>(pk)))) ++c;
    f.abelianization_counts.push_back(c);
    pk *= p;
  }
  return f;
}

const Fingerprint& candidate_fingerprint(MinNonabelianKind kind, unsigned p, unsigned m, unsigned n) {
  static std::mutex mu;
  static std::map<std::tuple<int, unsigned, unsigned, unsigned>, Fingerprint> memo;
  const auto key = std::make_tuple(static_cast<int>(kind), p, m, n);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const GroupTable k = kind == MinNonabelianKind::K2 ? minimal_nonabelian_k2(p, m, n)
                                                      : minimal_nonabelian_k3(p, m, n);
  auto fp = fingerprint(k, p);
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(fp)).first->second;
}

}  // namespace

std::vector<Elem> cyclic_representatives(const GroupTable& g) {
  const std::size_t n = g.order();
  ElementSet covered(n);
  std::vector<Elem> reps;
  for (Elem x = 1; x < n; ++x) {
    if (covered.test(x)) continue;
    reps.push_back(x);
    std::vector<Elem> cyc{0};
    for (Elem y = x; y != 0; y = g.mul(y, x)) cyc.push_back(y);
    const std::size_t o = cyc.size();
    for (std::size_t j = 1; j < o; ++j)
      if (std::gcd(j, o) == 1) covered.set(cyc[j]);
  }
  return reps;
}

SubgroupInventory all_subgroups(const GroupTable& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapabilityError("subgroup enumeration of order-" + std::to_string(g.order()) + " group",
                          cap);
  const auto reps = cyclic_representatives(g);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<SubgroupSet> found;
  auto add = [&](SubgroupSet s) {
    if (seen.insert(s.bits()).second) found.push_back(std::move(s));
  };
  add(trivial_subgroup(g));
  for (Elem r : reps) {
    const Elem gen[1] = {r};
    add(generated_subgroup(g, gen));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem r : reps) {
      if (found[i].contains(r)) continue;
      const Elem extra[1] = {r};
      auto bigger = extend_subgroup(g, found[i], extra);
      if (!seen.contains(bigger.bits())) add(std::move(bigger));
    }
  }
  sort_subgroups(found);
  return SubgroupInventory{std::move(found), true};
}

std::vector<Elem> frattini_basis(const GroupTable& g, const SubgroupSet& phi) {
  std::vector<Elem> basis;
  SubgroupSet current = phi;
  for (Elem x = 0; x < g.order() && current.order() < g.order(); ++x) {
    if (current.contains(x)) continue;
    const Elem extra[1] = {x};
    current = extend_subgroup(g, current, extra);
    basis.push_back(x);
  }
  return basis;
}

std::vector<SubgroupSet> maximal_subgroups_p_group(const GroupTable& g, unsigned p) {
  if (g.order() == 1) return {};
  const auto phi = frattini(g);
  const auto basis = frattini_basis(g, phi);
  const std::size_t d = basis.size();
  std::vector<SubgroupSet> out;
  // Hyperplanes of F_p^d as kernels of normalised functionals.
  std::vector<unsigned> f(d, 0);
  const std::size_t total = ipow(p, static_cast<unsigned>(d));
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = d; i-- > 0;) {
      f[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    std::size_t lead = 0;
    while (f[lead] == 0) ++lead;
    if (f[lead] != 1) continue;
    std::vector<Elem> kernel;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == lead) continue;
      const long long shift = (p - f[i]) % p;
      kernel.push_back(g.mul(basis[i], power(g, basis[lead], shift)));
    }
    auto m = extend_subgroup(g, phi, kernel);
    out.push_back(subgroup_from_closed_set(g, m.bits()));
  }
  sort_subgroups(out);
  return out;
}

std::vector<SubgroupSet> maximal_subgroups_generic(const GroupTable& g, std::size_t cap) {
  const auto inv = all_subgroups(g, cap);
  std::vector<SubgroupSet> proper;
  for (const auto& s : inv.subgroups)
    if (s.order() < g.order()) proper.push_back(s);
  std::vector<SubgroupSet> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size() && maximal; ++j)
      if (proper[j].order() > proper[i].order() && proper[i].is_subgroup_of(proper[j]))
        maximal = false;
    if (maximal) out.push_back(proper[i]);
  }
  sort_subgroups(out);
  return out;
}

std::vector<SubgroupSet> maximal_subgroups(const GroupTable& g, std::size_t cap) {
  if (g.order() == 1) return {};
  if (auto pk = prime_power(g.order())) return maximal_subgroups_p_group(g, pk->first);
  return maximal_subgroups_generic(g, cap);
}

SubgroupSet frattini_by_maximals(const GroupTable& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  const auto maxes = maximal_subgroups_generic(g, kDefaultSubgroupCap);
  ElementSet acc = maxes.front().bits();
  for (const auto& m : maxes) acc &= m.bits();
  return subgroup_from_closed_set(g, acc);
}

std::vector<TwoGenerated> two_generated_subgroups(const GroupTable& g, std::size_t cap,
                                                  ClosureCache* cache) {
  if (g.order() > cap)
    throw CapabilityError("pair scan of order-" + std::to_string(g.order()) + " group", cap);
  const auto reps = cyclic_representatives(g);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<TwoGenerated> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const Elem x = reps[i], y = reps[j];
      if (g.commute(x, y)) continue;
      const Elem pair[2] = {x, y};
      SubgroupSet h = cache ? cache->generate(pair) : generated_subgroup(g, pair);
      if (seen.insert(h.bits()).second) out.push_back(TwoGenerated{std::move(h), {x, y}});
    }
  }
  return out;
}

std::vector<SubgroupSet> minimal_nonabelian_subgroups(const GroupTable& g, std::size_t cap,
                                                      ClosureCache* cache) {
  // Every non-abelian subgroup contains a non-commuting pair, so the minimal
  // non-abelian subgroups are exactly the inclusion-minimal <x, y>.
  auto pairs = two_generated_subgroups(g, cap, cache);
  std::sort(pairs.begin(), pairs.end(), [](const TwoGenerated& a, const TwoGenerated& b) {
    return a.subgroup.order() < b.subgroup.order();
  });
  std::vector<SubgroupSet> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& k = pairs[i].subgroup;
    bool minimal = true;
    for (std::size_t j = 0; j < i && minimal; ++j) {
      const auto& other = pairs[j].subgroup;
      if (other.order() < k.order() && other.is_subgroup_of(k)) minimal = false;
    }
    if (minimal) out.push_back(k);
  }
  sort_subgroups(out);
  return out;
}

bool is_minimal_nonabelian(const GroupTable& g, const SubgroupSet& s) {
  if (is_abelian(g, s)) return false;
  const auto r = restrict_to(g, s, "K");
  const auto maxes = maximal_subgroups(r.table, std::max(kDefaultSubgroupCap, s.order()));
  for (const auto& m : maxes)
    if (!is_abelian(r.table, m)) return false;
  return true;
}

unsigned generator_rank(const GroupTable& g, unsigned p) {
  if (g.order() == 1) return 0;
  const auto phi = frattini(g);
  std::size_t index = g.order() / phi.order();
  unsigned d = 0;
  while (index > 1) {
    index /= p;
    ++d;
  }
  return d;
}

std::string to_string(const MinNonabelianClass& c) {
  switch (c.kind) {
    case MinNonabelianKind::K1: return "K1";
    case MinNonabelianKind::K2:
      return "K2(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
    case MinNonabelianKind::K3:
      return "K3(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
    case MinNonabelianKind::NotPGroup: return "not-p-group";
  }
  return "?";
}

MinNonabelianClass classify_minimal_nonabelian(const GroupTable& g, const SubgroupSet& k,
                                               unsigned p) {
  if (!is_minimal_nonabelian(g, k)) throw InputError("subgroup is not minimal non-abelian");
  const auto pk = prime_power(k.order());
  if (!pk || pk->first != p) return {MinNonabelianKind::NotPGroup, 0, 0};
  const unsigned total = pk->second;
  const auto r = restrict_to(g, k, "K");

  if (k.order() == 8) {
    std::size_t involutions = 0;
    for (auto o : element_orders(r.table))
      if (o == 2) ++involutions;
    if (involutions == 1) return {MinNonabelianKind::K1, 0, 0};
  }

  const bool metacyclic = is_metacyclic(r.table, std::max(kDefaultSubgroupCap, k.order())).has_value();
  const auto fp = fingerprint(r.table, p);
  if (metacyclic) {
    for (int mi = static_cast<int>(total) - 1; mi >= 2; --mi) {
      const auto m = static_cast<unsigned>(mi);
      const unsigned n = total - m;
      if (candidate_fingerprint(MinNonabelianKind::K2, p, m, n) == fp)
        return {MinNonabelianKind::K2, m, n};
    }
  } else {
    for (int mi = static_cast<int>(total) - 2; mi >= 1; --mi) {
      const auto m = static_cast<unsigned>(mi);
      const unsigned n = total - 1 - m;
      if (n < 1 || n > m) continue;
      if (p == 2 && m + n <= 2) continue;
      if (candidate_fingerprint(MinNonabelianKind::K3, p, m, n) == fp)
        return {MinNonabelianKind::K3, m, n};
    }
  }
  throw InputError("minimal non-abelian p-group matched no K1/K2/K3 candidate");
}

}  // namespace selfcent
