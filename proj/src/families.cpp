#include "selfcent/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "selfcent/errors.hpp"
#include "selfcent/structure.hpp"

namespace selfcent {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(unsigned p, const char* who) {
  if (!is_prime(p)) throw InputError(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

// p^e, or 0 when it exceeds the hard order ceiling.
std::size_t ipow_capped(std::size_t p, unsigned e) {
  std::size_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= p;
    if (r > kHardMaxOrder * kHardMaxOrder) return 0;
  }
  return r;
}

std::size_t ipow(std::size_t p, unsigned e) {
  const auto r = ipow_capped(p, e);
  if (r == 0) throw CapabilityError("group order", max_order());
  return r;
}

void require_order(std::size_t n, const std::string& what) {
  if (n > max_order())
    throw CapabilityError(what + " has order " + std::to_string(n), max_order());
}

long long mod(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long long powmod(long long b, std::size_t e, long long m) {
  long long r = 1 % m;
  b = mod(b, m);
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::string join_sizes(const std::vector<std::size_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

GroupTable cyclic(std::size_t n) {
  if (n < 1) throw InputError("cyclic: order must be at least 1");
  require_order(n, "cyclic group");
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
  return GroupTable::from_trusted(n, std::move(t), "C" + std::to_string(n));
}

GroupTable abelian(const std::vector<std::size_t>& factors) {
  std::size_t total = 1;
  for (auto f : factors) {
    if (f < 1) throw InputError("abelian: factor orders must be at least 1");
    total *= f;
    require_order(total, "abelian group");
  }
  if (factors.empty()) return cyclic(1);
  GroupTable g = cyclic(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic(factors[i]));
  return g.renamed(factors.size() == 1 ? "C" + std::to_string(factors[0])
                                       : "C" + join_sizes(factors, "xC"));
}

GroupTable elementary_abelian(unsigned p, unsigned k) {
  require_prime(p, "elementary_abelian");
  require_order(ipow(p, k), "elementary abelian group");
  auto g = abelian(std::vector<std::size_t>(k, p));
  return g.renamed("C" + std::to_string(p) + "^" + std::to_string(k));
}

GroupTable metacyclic(std::size_t M, std::size_t N, long long r, long long t, std::string name) {
  if (M < 1 || N < 1) throw InputError("metacyclic: M and N must be at least 1");
  require_order(M * N, "metacyclic group");
  const auto m = static_cast<long long>(M);
  r = mod(r, m);
  t = mod(t, m);
  if (std::gcd(r, m) != 1 && M > 1) throw InputError("metacyclic: r must be a unit mod M");
  if (powmod(r, N, m) != 1 % m) throw InputError("metacyclic: r^N != 1 (mod M)");
  if (mod(r * t - t, m) != 0) throw InputError("metacyclic: r t != t (mod M)");

  // b^j a^k b^-j = a^{k r'^j} with r' = r^-1 mod M.
  long long rinv = 1 % m;
  if (M > 1)
    for (long long v = 1; v < m; ++v)
      if (r * v % m == 1) {
        rinv = v;
        break;
      }
  std::vector<long long> rp(N);
  rp[0] = 1 % m;
  for (std::size_t j = 1; j < N; ++j) rp[j] = rp[j - 1] * rinv % m;

  const std::size_t n = M * N;
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < M; ++k)
        for (std::size_t l = 0; l < N; ++l) {
          long long e = static_cast<long long>(i) + static_cast<long long>(k) * rp[j];
          std::size_t jl = j + l;
          if (jl >= N) {
            e += t;
            jl -= N;
          }
          const auto x = i * N + j, y = k * N + l;
          table[x * n + y] = static_cast<Elem>(static_cast<std::size_t>(mod(e, m)) * N + jl);
        }
  return GroupTable::from_trusted(n, std::move(table), std::move(name));
}

GroupTable dihedral(std::size_t order) {
  if (order < 4 || order % 2) throw InputError("dihedral: order must be even and at least 4");
  return metacyclic(order / 2, 2, -1, 0, "D" + std::to_string(order));
}

GroupTable generalized_quaternion(std::size_t order) {
  const auto pk = prime_power(order);
  if (!pk || pk->first != 2 || pk->second < 3)
    throw InputError("generalized_quaternion: order must be 2^k with k >= 3");
  return metacyclic(order / 2, 2, -1, static_cast<long long>(order / 4), "Q" + std::to_string(order));
}

GroupTable semidihedral(std::size_t order) {
  const auto pk = prime_power(order);
  if (!pk || pk->first != 2 || pk->second < 4)
    throw InputError("semidihedral: order must be 2^k with k >= 4");
  return metacyclic(order / 2, 2, static_cast<long long>(order / 4) - 1, 0,
                    "SD" + std::to_string(order));
}

GroupTable dicyclic(std::size_t order) {
  if (order < 8 || order % 4) throw InputError("dicyclic: order must be a multiple of 4, at least 8");
  return metacyclic(order / 2, 2, -1, static_cast<long long>(order / 4),
                    "Dic" + std::to_string(order / 4));
}

GroupTable minimal_nonabelian_k2(unsigned p, unsigned m, unsigned n) {
  require_prime(p, "K2");
  if (m < 2 || n < 1) throw InputError("K2: need m >= 2 and n >= 1");
  const std::size_t M = ipow(p, m), N = ipow(p, n);
  return metacyclic(M, N, static_cast<long long>(1 + M / p), 0,
                    "K2(" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) + ")");
}

GroupTable central_product_k3(unsigned p, unsigned m, unsigned n) {
  require_prime(p, "K3");
  if (m < 1 || n < 1) throw InputError("K3: need m >= 1 and n >= 1");
  const std::size_t A = ipow(p, m), B = ipow(p, n), P = p;
  const std::size_t total = A * B * P;
  require_order(total, "K3 group");
  // a^i b^j c^k; b^j a^i' = a^i' b^j c^{-j i'} since [a, b] = c is central.
  std::vector<Elem> table(total * total);
  for (std::size_t i = 0; i < A; ++i)
    for (std::size_t j = 0; j < B; ++j)
      for (std::size_t k = 0; k < P; ++k) {
        const std::size_t x = (i * B + j) * P + k;
        for (std::size_t i2 = 0; i2 < A; ++i2)
          for (std::size_t j2 = 0; j2 < B; ++j2)
            for (std::size_t k2 = 0; k2 < P; ++k2) {
              const std::size_t y = (i2 * B + j2) * P + k2;
              const std::size_t ni = (i + i2) % A, nj = (j + j2) % B;
              const std::size_t nk = (k + k2 + P * P - (j * i2) % P) % P;
              table[x * total + y] = static_cast<Elem>((ni * B + nj) * P + nk);
            }
      }
  return GroupTable::from_trusted(
      total, std::move(table),
      "K3(" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) + ")");
}

GroupTable minimal_nonabelian_k3(unsigned p, unsigned m, unsigned n) {
  if (p == 2 && m + n <= 2) throw InputError("K3: m + n > 2 is required when p = 2");
  return central_product_k3(p, m, n);
}

GroupTable heisenberg(unsigned p) {
  return central_product_k3(p, 1, 1).renamed("Heis(" + std::to_string(p) + ")");
}

// ---- King's metacyclic groups ------------------------------------------------

std::string KingParameters::label() const {
  return "King(" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) + "," +
         std::to_string(s) + "," + std::to_string(c) + "," + (eps < 0 ? "-1" : "1") + ")";
}

void validate_king(const KingParameters& k) {
  require_prime(k.p, "king");
  if (k.m < 1 || k.n < 1) throw InputError("king: need m >= 1 and n >= 1");
  if (k.s > k.m) throw InputError("king: need 0 <= s <= m");
  if (k.c > k.m) throw InputError("king: need 0 <= c <= m");
  if (k.eps != 1 && k.eps != -1) throw InputError("king: eps must be 1 or -1");
  if (k.eps == -1 && k.p != 2) throw InputError("king: eps = -1 is only allowed for p = 2");
  const std::size_t M = ipow(k.p, k.m), N = ipow(k.p, k.n);
  require_order(M * N, "king group");
  const auto Ml = static_cast<long long>(M);
  const long long r = mod(k.eps + static_cast<long long>(ipow(k.p, k.m - k.c)), Ml);
  const long long t = mod(static_cast<long long>(ipow(k.p, k.m - k.s)), Ml);
  if (powmod(r, N, Ml) != 1 % Ml)
    throw InputError("king: congruence r^(p^n) = 1 (mod p^m) fails for r = " + std::to_string(r));
  if (mod(r * t - t, Ml) != 0)
    throw InputError("king: congruence r*p^(m-s) = p^(m-s) (mod p^m) fails for r = " +
                     std::to_string(r));
  // For p = 2 the residue eps + 2^(m-c) only has the multiplicative order the
  // center formula assumes when 2^(m-c) >= 4 (or the action is trivial).
  if (k.p == 2 && !(k.eps == 1 && k.c == 0) && k.m < k.c + 2)
    throw InputError("king: reduced form needs m - c >= 2 when p = 2 (unless eps = 1, c = 0)");
}

bool king_is_valid(const KingParameters& k) {
  try {
    validate_king(k);
    return true;
  } catch (const InputError&) {
    return false;
  } catch (const CapabilityError&) {
    return false;
  }
}

std::vector<Elem> KingGroup::predicted_center_generators() const {
  const auto pk = prime_power(table.order());
  const unsigned p = pk ? pk->first : 1;
  return {power(table, a, static_cast<long long>(ipow(p, u))),
          power(table, b, static_cast<long long>(ipow(p, v)))};
}

KingGroup king_metacyclic(const KingParameters& k) {
  validate_king(k);
  const std::size_t M = ipow(k.p, k.m), N = ipow(k.p, k.n);
  const long long r = k.eps + static_cast<long long>(ipow(k.p, k.m - k.c));
  const long long t = static_cast<long long>(ipow(k.p, k.m - k.s));
  KingGroup out;
  out.table = metacyclic(M, N, r, t, k.label());
  out.a = static_cast<Elem>(N);  // a^1 b^0
  out.b = 1;                     // a^0 b^1
  if (k.eps == 1) {
    out.u = out.v = k.c;
  } else {
    out.u = k.m - 1;
    out.v = std::max(1u, k.c);
  }
  if (out.table.order() != M * N) throw ConstructionError("king: order check failed");
  return out;
}

std::vector<KingParameters> king_parameter_grid(unsigned p, std::size_t max_ord) {
  require_prime(p, "king grid");
  std::vector<KingParameters> out;
  for (unsigned m = 1; ipow_capped(p, m + 1) && ipow_capped(p, m + 1) <= max_ord; ++m)
    for (unsigned n = 1; ipow_capped(p, m + n) && ipow_capped(p, m + n) <= max_ord; ++n)
      for (unsigned s = 0; s <= m; ++s)
        for (unsigned c = 0; c <= m; ++c)
          for (int eps : {1, -1}) {
            KingParameters k{p, m, n, s, c, eps};
            if (king_is_valid(k)) out.push_back(k);
          }
  return out;
}

// ---- permutation groups --------------------------------------------------------

GroupTable permutation_group(unsigned degree, const std::vector<std::vector<unsigned>>& gens,
                             std::string name) {
  using Perm = std::vector<unsigned>;
  for (const auto& g : gens) {
    if (g.size() != degree) throw InputError("permutation_group: generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw InputError("permutation_group: generator is not a permutation");
      hit[v] = true;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Perm, Elem> index{{id, 0}};
  std::vector<Perm> elems{id};
  auto compose = [&](const Perm& x, const Perm& y) {
    Perm z(degree);
    for (unsigned i = 0; i < degree; ++i) z[i] = y[x[i]];
    return z;
  };
  for (std::size_t q = 0; q < elems.size(); ++q) {
    for (const auto& g : gens) {
      auto z = compose(elems[q], g);
      if (index.emplace(z, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(z));
        require_order(elems.size(), "permutation group");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = index.at(compose(elems[x], elems[y]));
  return GroupTable::from_trusted(n, std::move(table), std::move(name));
}

GroupTable symmetric(unsigned degree) {
  if (degree < 1) throw InputError("symmetric: degree must be at least 1");
  std::vector<std::vector<unsigned>> gens;
  if (degree >= 2) {
    std::vector<unsigned> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (unsigned i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    gens = {swap, cycle};
  }
  return permutation_group(degree, gens, "S" + std::to_string(degree));
}

GroupTable alternating(unsigned degree) {
  if (degree < 1) throw InputError("alternating: degree must be at least 1");
  std::vector<std::vector<unsigned>> gens;
  for (unsigned k = 2; k < degree; ++k) {
    std::vector<unsigned> g(degree);
    std::iota(g.begin(), g.end(), 0u);
    g[0] = 1;
    g[1] = k;
    g[k] = 0;
    gens.push_back(g);
  }
  return permutation_group(degree, gens, "A" + std::to_string(degree));
}

// ---- maximal class -----------------------------------------------------------------

GroupTable maxclass_abelian_p1(unsigned p, unsigned n) {
  require_prime(p, "maxclass_abelian_p1");
  if (n < 2) throw InputError("maxclass_abelian_p1: need n >= 2");
  require_order(ipow(p, n), "maximal-class group");
  const unsigned L = n - 1;
  const std::size_t size = ipow(p, L);

  std::vector<long long> binom(p + 1, 1);
  for (unsigned j = 1; j <= p; ++j) binom[j] = binom[j - 1] * (p - j + 1) / j;

  // Digits of sum c_k pi^k in base pi, using p = -sum_{j>=2} C(p,j) pi^{j-1}.
  auto normalise = [&](std::vector<long long> c) {
    std::size_t idx = 0, place = 1;
    for (unsigned k = 0; k < L; ++k) {
      long long q = c[k] / static_cast<long long>(p);
      if (c[k] - q * static_cast<long long>(p) < 0) --q;
      c[k] -= q * static_cast<long long>(p);
      for (unsigned j = 2; j <= p && k + j - 1 < L; ++j) c[k + j - 1] -= q * binom[j];
      idx += static_cast<std::size_t>(c[k]) * place;
      place *= p;
    }
    return static_cast<Elem>(idx);
  };
  auto digits = [&](std::size_t idx) {
    std::vector<long long> d(L);
    for (unsigned k = 0; k < L; ++k) {
      d[k] = static_cast<long long>(idx % p);
      idx /= p;
    }
    return d;
  };

  std::vector<Elem> add(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    const auto dx = digits(x);
    for (std::size_t y = 0; y < size; ++y) {
      auto c = digits(y);
      for (unsigned k = 0; k < L; ++k) c[k] += dx[k];
      add[x * size + y] = normalise(std::move(c));
    }
  }
  const auto A = GroupTable::from_trusted(size, std::move(add), "A");

  std::vector<Elem> zeta(size);
  for (std::size_t x = 0; x < size; ++x) {
    const auto d = digits(x);
    std::vector<long long> c(d);
    for (unsigned k = 1; k < L; ++k) c[k] += d[k - 1];
    zeta[x] = normalise(std::move(c));
  }
  std::vector<std::vector<Elem>> action(p);
  action[0].resize(size);
  std::iota(action[0].begin(), action[0].end(), 0u);
  for (unsigned h = 1; h < p; ++h) {
    action[h].resize(size);
    for (std::size_t x = 0; x < size; ++x) action[h][x] = zeta[action[h - 1][x]];
  }
  return semidirect_product(A, cyclic(p), action)
      .renamed("MaxClassAbelianP1(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

PcPresentation maxclass_presentation(unsigned p, unsigned n, const MaxclassConstants& k) {
  require_prime(p, "maxclass_presentation");
  if (n < 4) throw InputError("maxclass_presentation: need n >= 4");
  PcPresentation pres;
  pres.p = p;
  pres.relative_orders.assign(n, p);
  pres.powers.assign(n, {});
  auto word = [](std::initializer_list<std::pair<unsigned, unsigned>> parts) {
    PcWord w;
    for (const auto& [g, e] : parts)
      if (e) w.emplace_back(g, e);
    return w;
  };
  for (unsigned i = 1; i + 1 < n; ++i) pres.commutators[{i, 0}] = {{i + 1, 1}};
  if (n >= 5) {
    pres.commutators[{2, 1}] = word({{n - 2, k.x}, {n - 1, k.y}});
    pres.commutators[{3, 1}] = word({{n - 1, k.z}});
  } else {
    pres.commutators[{2, 1}] = word({{n - 1, k.y}});
  }
  pres.powers[0] = word({{n - 1, k.a}});
  pres.powers[1] = word({{n - 1, k.b}});
  pres.name = "MC(" + std::to_string(p) + "," + std::to_string(n) + ")[" + std::to_string(k.x) +
              "," + std::to_string(k.y) + "," + std::to_string(k.z) + "," + std::to_string(k.a) +
              "," + std::to_string(k.b) + "]";
  return pres;
}

std::optional<CatalogEntry> search_nonabelian_p1(unsigned p, unsigned n) {
  require_prime(p, "search_nonabelian_p1");
  // At order p^4 the 2-step centralizer has order p^3 and contains P2 of
  // order p^2 in its center, so it is abelian. For p = 3 the grid holds no
  // consistent hit (checked up to 3^7), so the search is skipped.
  if (p < 5 || n < 5) return std::nullopt;
  require_order(ipow(p, n), "maximal-class search");
  MaxclassConstants k;
  for (k.a = 0; k.a < p; ++k.a)
    for (k.b = 0; k.b < p; ++k.b)
      for (k.x = 0; k.x < p; ++k.x)
        for (k.y = 0; k.y < p; ++k.y)
          for (k.z = 0; k.z < p; ++k.z) {
            if (k.x == 0 && k.y == 0 && k.z == 0) continue;
            GroupTable g;
            try {
              g = from_pc_presentation(maxclass_presentation(p, n, k));
            } catch (const InconsistentPresentation&) {
              continue;
            }
            if (!is_maximal_class(g, p)) continue;
            if (is_abelian(g, two_step_centralizer(g))) continue;
            return CatalogEntry{g.name(), g};
          }
  return std::nullopt;
}

std::vector<CatalogEntry> maxclass_catalog(unsigned p, unsigned n) {
  require_prime(p, "maxclass_catalog");
  if (n < 2) throw InputError("maxclass_catalog: unsupported (p, n); need n >= 2");
  const auto order = ipow(p, n);
  require_order(order, "maximal-class catalog");

  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::vector<CatalogEntry>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({p, n}); it != memo.end()) return it->second;
  }

  std::vector<CatalogEntry> out;
  auto add = [&](GroupTable g) { out.push_back(CatalogEntry{g.name(), std::move(g)}); };
  if (n == 2) {
    add(cyclic(order));
    add(elementary_abelian(p, 2));
  } else if (p == 2) {
    add(dihedral(order));
    if (n >= 4) add(semidihedral(order));
    add(generalized_quaternion(order));
  } else {
    add(maxclass_abelian_p1(p, n));
    if (n == 3) add(minimal_nonabelian_k2(p, 2, 1));
    if (auto hit = search_nonabelian_p1(p, n)) out.push_back(std::move(*hit));
  }

  std::lock_guard lock(mu);
  return memo.emplace(std::make_pair(p, n), std::move(out)).first->second;
}

}  // namespace selfcent
