#include "selfcent/group_core.hpp"

#include <algorithm>
#include <numeric>

namespace selfcent {

namespace {

void check_index(const GroupTable& g, Elem x) {
  if (x >= g.order())
    throw InputError("element index " + std::to_string(x) + " out of range for group of order " +
                     std::to_string(g.order()));
}

std::vector<Elem> unique_in_order(std::span<const Elem> xs) {
  std::vector<Elem> out;
  for (Elem x : xs)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

// Closure by right multiplication. `list` holds the elements of `bits` in
// discovery order; entries before `closed_upto` are already closed under
// `old_gens` and only need the new generators applied.
void close_under(const GroupTable& g, ElementSet& bits, std::vector<Elem>& list,
                 std::size_t closed_upto, std::span<const Elem> old_gens,
                 std::span<const Elem> new_gens) {
  for (std::size_t i = 0; i < closed_upto; ++i) {
    const Elem* r = g.row(list[i]);
    for (Elem s : new_gens)
      if (bits.insert(r[s])) list.push_back(r[s]);
  }
  for (std::size_t i = closed_upto; i < list.size(); ++i) {
    const Elem* r = g.row(list[i]);
    for (Elem s : old_gens)
      if (bits.insert(r[s])) list.push_back(r[s]);
    for (Elem s : new_gens)
      if (bits.insert(r[s])) list.push_back(r[s]);
  }
}

}  // namespace

Elem multiply(const GroupTable& g, Elem x, Elem y) {
  check_index(g, x);
  check_index(g, y);
  return g.mul(x, y);
}

Elem inverse(const GroupTable& g, Elem x) {
  check_index(g, x);
  return g.inv(x);
}

Elem power(const GroupTable& g, Elem x, long long k) {
  check_index(g, x);
  Elem base = x;
  if (k < 0) {
    base = g.inv(x);
    k = -k;
  }
  Elem acc = 0;
  while (k > 0) {
    if (k & 1) acc = g.mul(acc, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return acc;
}

Elem commutator(const GroupTable& g, Elem x, Elem y) {
  check_index(g, x);
  check_index(g, y);
  return comm_unchecked(g, x, y);
}

Elem conjugate(const GroupTable& g, Elem x, Elem y) {
  check_index(g, x);
  check_index(g, y);
  return g.mul(g.mul(g.inv(y), x), y);
}

std::size_t element_order(const GroupTable& g, Elem x) {
  check_index(g, x);
  std::size_t k = 1;
  Elem y = x;
  while (y != 0) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

std::vector<std::size_t> element_orders(const GroupTable& g) {
  std::vector<std::size_t> out(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (out[x]) continue;
    // Walk the cyclic subgroup once; powers x^j have order o / gcd(o, j).
    std::vector<Elem> cyc{0};
    Elem y = x;
    while (y != 0) {
      cyc.push_back(y);
      y = g.mul(y, x);
    }
    const std::size_t o = cyc.size();
    for (std::size_t j = 0; j < o; ++j) out[cyc[j]] = o / std::gcd(o, j == 0 ? o : j);
  }
  return out;
}

SubgroupSet trivial_subgroup(const GroupTable& g) {
  ElementSet bits(g.order());
  bits.set(0);
  return SubgroupSet(std::move(bits), {});
}

SubgroupSet whole_group(const GroupTable& g) {
  ElementSet all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all.set(x);
  return subgroup_from_closed_set(g, all);
}

SubgroupSet extend_subgroup(const GroupTable& g, const SubgroupSet& base,
                            std::span<const Elem> extra) {
  std::vector<Elem> fresh;
  for (Elem x : extra) {
    check_index(g, x);
    if (!base.contains(x) && std::find(fresh.begin(), fresh.end(), x) == fresh.end())
      fresh.push_back(x);
  }
  if (fresh.empty()) return base;
  ElementSet bits = base.bits();
  std::vector<Elem> list = base.elements();
  const std::size_t closed = list.size();
  close_under(g, bits, list, closed, base.generators(), fresh);
  std::vector<Elem> gens = base.generators();
  gens.insert(gens.end(), fresh.begin(), fresh.end());
  return SubgroupSet(std::move(bits), std::move(gens));
}

SubgroupSet generated_subgroup(const GroupTable& g, std::span<const Elem> gens) {
  for (Elem x : gens) check_index(g, x);
  ElementSet bits(g.order());
  bits.set(0);
  std::vector<Elem> list{0};
  const auto uniq = unique_in_order(gens);
  close_under(g, bits, list, 1, {}, uniq);
  return SubgroupSet(std::move(bits), uniq);
}

SubgroupSet subgroup_of_elements(const GroupTable& g, const ElementSet& elems) {
  ElementSet bits(g.order());
  bits.set(0);
  std::vector<Elem> list{0};
  std::vector<Elem> gens;
  elems.for_each([&](Elem x) {
    if (bits.test(x)) return;
    const std::size_t closed = list.size();
    const Elem fresh[1] = {x};
    close_under(g, bits, list, closed, gens, fresh);
    gens.push_back(x);
  });
  return SubgroupSet(std::move(bits), std::move(gens));
}

SubgroupSet subgroup_from_closed_set(const GroupTable& g, const ElementSet& closed) {
  return subgroup_of_elements(g, closed);
}

bool is_closed_subgroup(const GroupTable& g, const ElementSet& elems) {
  if (!elems.test(0)) return false;
  const auto xs = elems.elements();
  for (Elem x : xs) {
    if (!elems.test(g.inv(x))) return false;
    const Elem* r = g.row(x);
    for (Elem y : xs)
      if (!elems.test(r[y])) return false;
  }
  return true;
}

SubgroupSet centralizer_of_elements(const GroupTable& g, std::span<const Elem> elems) {
  for (Elem s : elems) check_index(g, s);
  ElementSet bits(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem* r = g.row(x);
    bool ok = true;
    for (Elem s : elems) {
      if (r[s] != g.mul(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) bits.set(x);
  }
  return subgroup_from_closed_set(g, bits);
}

SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& s) {
  return centralizer_of_elements(g, s.generators());
}

SubgroupSet center(const GroupTable& g) { return centralizer(g, whole_group(g)); }

bool is_abelian(const GroupTable& g, const SubgroupSet& s) {
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commute(gens[i], gens[j])) return false;
  return true;
}

bool is_abelian(const GroupTable& g) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = x + 1; y < g.order(); ++y)
      if (!g.commute(x, y)) return false;
  return true;
}

bool is_normal(const GroupTable& g, const SubgroupSet& s) {
  const auto whole = whole_group(g);
  for (Elem a : s.generators())
    for (Elem x : whole.generators())
      if (!s.contains(g.mul(g.mul(g.inv(x), a), x))) return false;
  return true;
}

SubgroupSet commutator_subgroup(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b) {
  // [A, B] is the normal closure in <A, B> of the commutators of generators.
  std::vector<Elem> seeds;
  for (Elem x : a.generators())
    for (Elem y : b.generators()) seeds.push_back(comm_unchecked(g, x, y));
  SubgroupSet result = generated_subgroup(g, seeds);
  std::vector<Elem> ambient = a.generators();
  ambient.insert(ambient.end(), b.generators().begin(), b.generators().end());
  bool grown = true;
  while (grown) {
    grown = false;
    const auto gens = result.generators();
    for (Elem n : gens) {
      for (Elem x : ambient) {
        const Elem c = g.mul(g.mul(g.inv(x), n), x);
        if (!result.contains(c)) {
          const Elem add[1] = {c};
          result = extend_subgroup(g, result, add);
          grown = true;
        }
      }
    }
  }
  // Keep the bit-vector but drop identity-only generator noise.
  return subgroup_from_closed_set(g, result.bits());
}

SubgroupSet derived_subgroup(const GroupTable& g, const SubgroupSet& s) {
  return commutator_subgroup(g, s, s);
}

SubgroupSet power_subgroup(const GroupTable& g, const SubgroupSet& s, unsigned p) {
  ElementSet powers(g.order());
  s.bits().for_each([&](Elem x) { powers.set(power(g, x, p)); });
  return subgroup_of_elements(g, powers);
}

SubgroupSet omega1(const GroupTable& g, const SubgroupSet& s, unsigned p) {
  ElementSet chosen(g.order());
  s.bits().for_each([&](Elem x) {
    if (x != 0 && power(g, x, p) == 0 && p > 1) chosen.set(x);
  });
  return subgroup_of_elements(g, chosen);
}

SubgroupSet join(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b) {
  return extend_subgroup(g, a, b.generators());
}

SubgroupSet intersection(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b) {
  return subgroup_from_closed_set(g, a.bits() & b.bits());
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  unsigned p = 0;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = static_cast<unsigned>(d);
      break;
    }
  if (p == 0) return std::make_pair(static_cast<unsigned>(n), 1u);
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

SubgroupSet frattini(const GroupTable& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  if (auto pk = prime_power(g.order())) {
    const auto whole = whole_group(g);
    return join(g, derived_subgroup(g, whole), power_subgroup(g, whole, pk->first));
  }
  return frattini_by_maximals(g);
}

std::vector<SubgroupSet> lower_central_series(const GroupTable& g) {
  std::vector<SubgroupSet> series{whole_group(g)};
  const auto whole = series.front();
  while (true) {
    auto next = commutator_subgroup(g, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > max_order())
    throw CapabilityError("direct product order " + std::to_string(n) + " exceeds maximum",
                          max_order());
  std::vector<Elem> table(n * n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xa = x / nb, xb = x % nb;
    Elem* row = table.data() + static_cast<std::size_t>(x) * n;
    for (Elem y = 0; y < n; ++y) {
      const Elem ya = y / nb, yb = y % nb;
      row[y] = static_cast<Elem>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  return GroupTable::from_trusted(n, std::move(table), a.name() + "x" + b.name());
}

GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const std::vector<std::vector<Elem>>& action) {
  const std::size_t nn = normal.order(), nh = acting.order(), n = nn * nh;
  if (action.size() != nh)
    throw ConstructionError("action must list one permutation per acting element");
  for (std::size_t h = 0; h < nh; ++h) {
    const auto& phi = action[h];
    if (phi.size() != nn) throw ConstructionError("action permutation has wrong length");
    ElementSet seen(nn);
    for (Elem v : phi)
      if (v >= nn || !seen.insert(v))
        throw ConstructionError("action of element " + std::to_string(h) + " is not a permutation");
    for (Elem x = 0; x < nn; ++x)
      for (Elem y = 0; y < nn; ++y)
        if (phi[normal.mul(x, y)] != normal.mul(phi[x], phi[y]))
          throw ConstructionError("action of element " + std::to_string(h) +
                                  " is not an automorphism");
  }
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem h2 = 0; h2 < nh; ++h2) {
      const auto& composite = action[acting.mul(h1, h2)];
      for (Elem x = 0; x < nn; ++x)
        if (composite[x] != action[h1][action[h2][x]])
          throw ConstructionError("action is not a homomorphism at (" + std::to_string(h1) + ", " +
                                  std::to_string(h2) + ")");
    }
  if (n > max_order())
    throw CapabilityError("semidirect product order " + std::to_string(n) + " exceeds maximum",
                          max_order());
  std::vector<Elem> table(n * n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xn = x / nh, xh = x % nh;
    const auto& phi = action[xh];
    Elem* row = table.data() + static_cast<std::size_t>(x) * n;
    for (Elem y = 0; y < n; ++y) {
      const Elem yn = y / nh, yh = y % nh;
      row[y] = static_cast<Elem>(normal.mul(xn, phi[yn]) * nh + acting.mul(xh, yh));
    }
  }
  return GroupTable::from_trusted(n, std::move(table), normal.name() + ":" + acting.name());
}

RestrictedGroup restrict_to(const GroupTable& g, const SubgroupSet& s, std::string name) {
  RestrictedGroup out;
  out.embedding = s.elements();
  const std::size_t m = out.embedding.size();
  std::vector<Elem> pos(g.order(), static_cast<Elem>(m));
  for (std::size_t i = 0; i < m; ++i) pos[out.embedding[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const Elem* r = g.row(out.embedding[i]);
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = pos[r[out.embedding[j]]];
  }
  out.table = GroupTable::from_trusted(m, std::move(table), std::move(name));
  return out;
}

std::size_t ClosureCache::VecHash::operator()(const std::vector<Elem>& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Elem x : v) h = (h ^ x) * 0x100000001b3ull + (h >> 17);
  return h;
}

SubgroupSet ClosureCache::generate(std::span<const Elem> gens) {
  std::vector<Elem> key(gens.begin(), gens.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
  }
  auto result = generated_subgroup(group_, key);
  std::lock_guard lock(mutex_);
  memo_.emplace(std::move(key), result);
  return result;
}

std::size_t ClosureCache::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

std::size_t ClosureCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

}  // namespace selfcent
