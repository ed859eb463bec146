#include "selfcent/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "selfcent/errors.hpp"
#include "selfcent/subgroups.hpp"

namespace selfcent {

namespace {

// ---- descriptors -------------------------------------------------------------

Json d_cyclic(std::size_t n) { return {{"family", "cyclic"}, {"n", n}}; }
Json d_abelian(const std::vector<std::size_t>& f) { return {{"family", "abelian"}, {"factors", f}}; }
Json d_elementary(unsigned p, unsigned k) { return {{"family", "elementary"}, {"p", p}, {"k", k}}; }
Json d_order(const char* fam, std::size_t order) { return {{"family", fam}, {"order", order}}; }
Json d_pmn(const char* fam, unsigned p, unsigned m, unsigned n) {
  return {{"family", fam}, {"p", p}, {"m", m}, {"n", n}};
}
Json d_heis(unsigned p) { return {{"family", "heisenberg"}, {"p", p}}; }
Json d_degree(const char* fam, unsigned d) { return {{"family", fam}, {"degree", d}}; }
Json d_direct(std::initializer_list<Json> parts) {
  Json f = Json::array();
  for (const auto& x : parts) f.push_back(x);
  return {{"family", "direct"}, {"factors", f}};
}
Json d_meta(std::size_t M, std::size_t N, long long r, long long t) {
  return {{"family", "metacyclic"}, {"M", M}, {"N", N}, {"r", r}, {"t", t}};
}
Json d_catalog(unsigned p, unsigned n, std::size_t i) {
  return {{"family", "catalog"}, {"p", p}, {"n", n}, {"index", i}};
}
Json d_maxab(unsigned p, unsigned n) { return {{"family", "maxclass_abelian"}, {"p", p}, {"n", n}}; }

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) {
    r *= b;
    if (r > (std::size_t{1} << 40)) return r;
  }
  return r;
}

class Collector {
 public:
  explicit Collector(std::size_t max_order) : max_(max_order) {}

  void add(Json desc, std::size_t order) {
    if (order > max_) return;
    auto g = build_group(desc);
    out_.push_back({std::move(desc), std::move(g)});
  }
  void add_built(Json desc, GroupTable g) {
    if (g.order() > max_) return;
    out_.push_back({std::move(desc), std::move(g)});
  }
  std::size_t max() const { return max_; }
  std::vector<CorpusMember> take() { return std::move(out_); }

 private:
  std::size_t max_;
  std::vector<CorpusMember> out_;
};

void partitions(unsigned k, unsigned largest, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(k, largest); part >= 1; --part) {
    cur.push_back(part);
    partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

bool has_prime(const std::vector<unsigned>& primes, unsigned p) {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

void family_abelian(Collector& c, const std::vector<unsigned>& primes) {
  for (unsigned p : primes) {
    for (unsigned k = 1; ipow(p, k) <= c.max(); ++k) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(k, k, cur, parts);
      for (const auto& part : parts) {
        if (ipow(p, k) > 64 && part.size() > 3) continue;
        std::vector<std::size_t> f;
        for (unsigned e : part) f.push_back(ipow(p, e));
        c.add(f.size() == 1 ? d_cyclic(f[0]) : d_abelian(f), ipow(p, k));
      }
    }
  }
  const std::vector<std::vector<std::size_t>> mixed{{6}, {10}, {12}, {15}, {2, 6}, {30}, {6, 6}, {2, 2, 6}};
  for (const auto& f : mixed) {
    std::size_t order = 1;
    for (auto x : f) order *= x;
    bool ok = true;
    for (unsigned q : {2u, 3u, 5u})
      if (order % q == 0 && !has_prime(primes, q)) ok = false;
    if (ok) c.add(f.size() == 1 ? d_cyclic(f[0]) : d_abelian(f), order);
  }
}

void family_maxclass(Collector& c, const std::vector<unsigned>& primes) {
  for (unsigned p : primes)
    for (unsigned n = 2; ipow(p, n) <= c.max(); ++n) {
      const auto cat = maxclass_catalog(p, n);
      for (std::size_t i = 0; i < cat.size(); ++i) c.add_built(d_catalog(p, n, i), cat[i].table);
    }
}

void family_k2(Collector& c, const std::vector<unsigned>& primes) {
  for (unsigned p : primes)
    for (unsigned m = 2; ipow(p, m + 1) <= c.max(); ++m)
      for (unsigned n = 1; ipow(p, m + n) <= c.max(); ++n) c.add(d_pmn("K2", p, m, n), ipow(p, m + n));
}

void family_k3(Collector& c, const std::vector<unsigned>& primes) {
  for (unsigned p : primes)
    for (unsigned m = 1; ipow(p, m + 2) <= c.max(); ++m)
      for (unsigned n = 1; n <= m && ipow(p, m + n + 1) <= c.max(); ++n) {
        if (p == 2 && m + n <= 2) continue;
        c.add(d_pmn("K3", p, m, n), ipow(p, m + n + 1));
      }
}

void family_king(Collector& c, const std::vector<unsigned>& primes) {
  for (unsigned p : primes)
    for (const auto& k : king_parameter_grid(p, c.max())) c.add(king_descriptor(k), ipow(p, k.m + k.n));
}

void family_nonp(Collector& c) {
  const Json s3 = d_degree("symmetric", 3);
  c.add(s3, 6);
  c.add(d_order("dihedral", 10), 10);
  c.add(d_direct({d_cyclic(2), s3}), 12);
  c.add(d_order("dihedral", 12), 12);
  c.add(d_order("dicyclic", 12), 12);
  c.add(d_degree("alternating", 4), 12);
  c.add(d_order("dihedral", 14), 14);
  c.add(d_direct({d_cyclic(3), s3}), 18);
  c.add(d_order("dihedral", 18), 18);
  c.add(d_meta(5, 4, 2, 0), 20);
  c.add(d_order("dicyclic", 20), 20);
  c.add(d_order("dihedral", 20), 20);
  c.add(d_meta(7, 3, 2, 0), 21);
  c.add(d_degree("symmetric", 4), 24);
  c.add(d_direct({d_cyclic(2), d_degree("alternating", 4)}), 24);
  c.add(d_direct({d_cyclic(4), s3}), 24);
  c.add(d_order("dihedral", 24), 24);
  c.add(d_direct({s3, s3}), 36);
  c.add(d_degree("alternating", 5), 60);
  c.add(d_degree("symmetric", 5), 120);
}

void family_products(Collector& c, const std::vector<unsigned>& primes) {
  const Json d8 = d_order("dihedral", 8), q8 = d_order("quaternion", 8);
  if (has_prime(primes, 2)) {
    c.add(d_direct({d8, d_cyclic(4)}), 32);
    c.add(d_direct({q8, d_cyclic(4)}), 32);
    c.add(d_direct({d8, d_elementary(2, 2)}), 32);
    c.add(d_direct({d_order("dihedral", 16), d_cyclic(2)}), 32);
    c.add(d_direct({d8, d8}), 64);
    c.add(d_direct({d8, q8}), 64);
    c.add(d_direct({q8, q8}), 64);
    c.add(d_direct({d_pmn("K2", 2, 2, 2), d_cyclic(2)}), 64);
    c.add(d_direct({d_order("semidihedral", 32), d_cyclic(4)}), 128);
    c.add(d_direct({d8, d8, d_cyclic(2)}), 128);
  }
  if (has_prime(primes, 3)) {
    c.add(d_direct({d_heis(3), d_elementary(3, 2)}), 243);
    c.add(d_direct({d_pmn("K2", 3, 2, 1), d_cyclic(9)}), 243);
  }
  if (has_prime(primes, 5)) c.add(d_direct({d_heis(5), d_cyclic(5)}), 625);
  if (has_prime(primes, 2) && has_prime(primes, 3)) {
    c.add(d_direct({d8, d_cyclic(3)}), 24);
    c.add(d_direct({q8, d_cyclic(3)}), 24);
    c.add(d_direct({d_degree("symmetric", 4), d_cyclic(2)}), 48);
    c.add(d_direct({d_degree("alternating", 4), d_cyclic(4)}), 48);
    c.add(d_direct({d_degree("symmetric", 3), d8}), 48);
    c.add(d_direct({d_order("dicyclic", 12), d_cyclic(2)}), 24);
  }
}

void family_order16(Collector& c, const std::vector<unsigned>& primes) {
  if (!has_prime(primes, 2)) return;
  c.add(d_cyclic(16), 16);
  c.add(d_abelian({8, 2}), 16);
  c.add(d_abelian({4, 4}), 16);
  c.add(d_abelian({4, 2, 2}), 16);
  c.add(d_elementary(2, 4), 16);
  c.add(d_direct({d_order("dihedral", 8), d_cyclic(2)}), 16);
  c.add(d_direct({d_order("quaternion", 8), d_cyclic(2)}), 16);
  // Central product C4 ∘ D8: g3^2 = g4 = [g2, g1].
  c.add({{"family", "pc"},
         {"name", "C4oD8"},
         {"p", 2},
         {"relative_orders", {2, 2, 2, 2}},
         {"powers", Json::array({Json::array(), Json::array(), Json::array({{4, 1}}), Json::array()})},
         {"commutators", Json::array({{{"i", 2}, {"j", 1}, {"word", Json::array({{4, 1}})}}})}},
        16);
  c.add(king_descriptor({2, 3, 1, 0, 1, 1}), 16);  // modular M16
  c.add(d_order("dihedral", 16), 16);
  c.add(d_order("semidihedral", 16), 16);
  c.add(d_order("quaternion", 16), 16);
  c.add(king_descriptor({2, 2, 2, 0, 0, -1}), 16);  // C4 ⋊ C4
  c.add(d_pmn("K3", 2, 1, 2), 16);                // C2^2 ⋊ C4
}

void family_order81(Collector& c, const std::vector<unsigned>& primes) {
  if (!has_prime(primes, 3)) return;
  c.add(d_cyclic(81), 81);
  c.add(d_abelian({27, 3}), 81);
  c.add(d_abelian({9, 9}), 81);
  c.add(d_abelian({9, 3, 3}), 81);
  c.add(d_elementary(3, 4), 81);
  c.add(d_maxab(3, 4), 81);
  c.add(d_direct({d_cyclic(3), d_heis(3)}), 81);
  c.add(d_direct({d_cyclic(3), d_pmn("K2", 3, 2, 1)}), 81);
  c.add(d_pmn("K2", 3, 2, 2), 81);
  c.add(d_pmn("K2", 3, 3, 1), 81);
  c.add(d_pmn("K3", 3, 2, 1), 81);
  for (const auto& k : king_parameter_grid(3, 81))
    if (k.m + k.n == 4) c.add(king_descriptor(k), 81);
}

void family_small(Collector& c, const std::vector<unsigned>& primes) {
  for (unsigned p : primes) {
    const std::size_t q = p;
    c.add(d_cyclic(q), q);
    c.add(d_cyclic(q * q), q * q);
    c.add(d_elementary(p, 2), q * q);
    c.add(d_cyclic(q * q * q), q * q * q);
    c.add(d_abelian({q * q, q}), q * q * q);
    c.add(d_elementary(p, 3), q * q * q);
    if (p == 2) {
      c.add(d_order("dihedral", 8), 8);
      c.add(d_order("quaternion", 8), 8);
    } else {
      c.add(d_heis(p), q * q * q);
      c.add(d_pmn("K2", p, 2, 1), q * q * q);
    }
  }
}

void family_exponent(Collector& c, const std::vector<unsigned>& primes) {
  for (unsigned p : primes) {
    for (unsigned k = 1; ipow(p, k) <= c.max() && k <= 6; ++k) c.add(d_elementary(p, k), ipow(p, k));
    if (p == 2) continue;
    c.add(d_heis(p), ipow(p, 3));
    c.add(d_direct({d_cyclic(p), d_heis(p)}), ipow(p, 4));
    c.add(d_direct({d_elementary(p, 2), d_heis(p)}), ipow(p, 5));
    for (unsigned n = 4; n <= p && ipow(p, n) <= c.max(); ++n) c.add(d_maxab(p, n), ipow(p, n));
    for (unsigned n = 5; ipow(p, n) <= c.max(); ++n) {
      const auto cat = maxclass_catalog(p, n);
      for (std::size_t i = 0; i < cat.size(); ++i)
        if (exponent(cat[i].table) == p) c.add_built(d_catalog(p, n, i), cat[i].table);
    }
  }
}

// ---- theorem registry ------------------------------------------------------------

struct Outcome {
  std::vector<char> matched;
  std::vector<Json> failures;  // each carries "direction"
  std::optional<std::string> skipped;
};

struct Ctx {
  const CorpusMember& m;
  Outcome& out;
  const std::vector<std::string>& directions;

  const GroupTable& g() const { return m.table; }
  void match(std::size_t d) { out.matched[d] = 1; }
  void fail(std::size_t d, Json detail) {
    out.matched[d] = 1;
    out.failures.push_back({{"group", m.descriptor},
                            {"name", m.table.name()},
                            {"direction", directions[d]},
                            {"detail", std::move(detail)}});
  }
};

struct TheoremDef {
  std::string id;
  std::string statement;
  std::vector<std::pair<std::string, bool>> directions;  // (name, required)
  std::vector<std::string> families;
  std::size_t max_order;
  std::function<void(Ctx&)> check;
};

Json elems(const SubgroupSet& s) {
  Json a = Json::array();
  s.bits().for_each([&](Elem x) { a.push_back(x); });
  return a;
}

std::optional<unsigned> p_of(const GroupTable& g) {
  if (auto pk = prime_power(g.order())) return pk->first;
  return std::nullopt;
}

bool is_power_of_two(std::size_t v) { return v && (v & (v - 1)) == 0; }

void check_center_in_nonabelian(Ctx& c) {
  const auto& g = c.g();
  if (is_abelian(g) || !is_A(g).in_A) return;
  const auto z = center(g);
  c.match(0);
  // Every non-abelian subgroup contains a non-abelian <x, y>, so the pair
  // subgroups decide the statement for groups too large to enumerate.
  std::vector<SubgroupSet> subs;
  if (g.order() <= kDefaultSubgroupCap) {
    for (auto& h : all_subgroups(g).subgroups)
      if (!is_abelian(g, h)) subs.push_back(std::move(h));
  } else {
    for (auto& t : two_generated_subgroups(g, std::max(kDefaultPairCap, max_order())))
      subs.push_back(std::move(t.subgroup));
  }
  for (const auto& h : subs)
    if (!z.is_subgroup_of(h)) {
      c.fail(0, {{"subgroup", elems(h)}, {"center", elems(z)}});
      return;
    }
}

void check_z_in_frattini(Ctx& c) {
  const auto& g = c.g();
  if (is_abelian(g) || !is_A(g).in_A) return;
  c.match(0);
  const auto z = center(g);
  const auto phi = frattini(g);
  if (!z.is_subgroup_of(phi)) c.fail(0, {{"center", elems(z)}, {"frattini", elems(phi)}});
}

void check_inverting(Ctx& c) {
  const auto& g = c.g();
  const auto orders = element_orders(g);
  bool any = false;
  for (Elem a = 1; a < g.order() && !any; ++a)
    if (orders[a] % 2 == 1)
      for (Elem x = 0; x < g.order() && !any; ++x)
        if (g.mul(g.inv(x), g.mul(a, x)) == g.inv(a)) any = true;
  if (!any || !is_A(g).in_A) return;
  c.match(0);
  for (Elem a = 1; a < g.order(); ++a) {
    if (orders[a] % 2 == 0) continue;
    for (Elem x = 0; x < g.order(); ++x) {
      if (g.mul(g.inv(x), g.mul(a, x)) != g.inv(a)) continue;
      const Elem pair[2] = {a, x};
      const auto cent = centralizer_of_elements(g, pair);
      const Elem x2[1] = {g.mul(x, x)};
      const auto sq = generated_subgroup(g, x2);
      if (!is_power_of_two(orders[x]) || !(cent == sq)) {
        c.fail(0, {{"a", a}, {"x", x}, {"order_x", orders[x]}, {"centralizer", elems(cent)}});
        return;
      }
    }
  }
}

void check_criteria(Ctx& c) {
  try {
    const auto cc = cross_check(c.g());
    if (cc.reports.size() < 2) {
      c.out.skipped = "fewer than two methods fit within their caps";
      return;
    }
    c.match(0);
  } catch (const MethodDisagreement& e) {
    c.fail(0, {{"diagnostic", e.what()}});
  }
}

void check_minnonab(Ctx& c) {
  const auto& g = c.g();
  for (const auto& k : minimal_nonabelian_subgroups(g, std::max(kDefaultPairCap, max_order()))) {
    const auto pk = prime_power(k.order());
    if (!pk) continue;
    const unsigned p = pk->first;
    c.match(0);
    const auto cls = classify_minimal_nonabelian(g, k, p);
    const auto r = restrict_to(g, k, "K");
    const auto whole = whole_group(r.table);
    const auto derived = derived_subgroup(r.table, whole);
    const auto om = omega1(r.table, center(r.table), p);
    unsigned rank = 0;
    for (std::size_t o = om.order(); o > 1; o /= p) ++rank;
    const unsigned d = generator_rank(r.table, p);
    const bool k1_ok = cls.kind != MinNonabelianKind::K1 || (p == 2 && k.order() == 8);
    if (derived.order() != p || d != 2 || rank > 3 || !k1_ok) {
      c.fail(0, {{"subgroup", elems(k)},
                 {"class", to_string(cls)},
                 {"derived_order", derived.order()},
                 {"rank", d},
                 {"omega1_center_rank", rank}});
      return;
    }
  }
}

void check_metacyclic(Ctx& c) {
  const auto& d = c.m.descriptor;
  if (d.value("family", "") != "king") return;
  c.match(0);
  const KingParameters k{d.at("p").get<unsigned>(), d.at("m").get<unsigned>(), d.at("n").get<unsigned>(),
                         d.at("s").get<unsigned>(), d.at("c").get<unsigned>(), d.at("eps").get<int>()};
  const auto kg = king_metacyclic(k);
  const auto z = center(kg.table);
  const auto gens = kg.predicted_center_generators();
  const auto predicted = generated_subgroup(kg.table, gens);
  const auto rep = is_A(kg.table);
  if (!rep.in_A || !(z == predicted))
    c.fail(0, {{"in_A", rep.in_A},
               {"center_order", z.order()},
               {"predicted_order", predicted.order()},
               {"u", kg.u},
               {"v", kg.v},
               {"witness", rep.witness ? to_json(*rep.witness) : Json(nullptr)}});
}

void check_outside_frattini(Ctx& c) {
  const auto& g = c.g();
  if (!p_of(g) || g.order() == 1 || !is_A(g).in_A) return;
  c.match(0);
  const auto phi = frattini(g);
  for (Elem x = 0; x < g.order(); ++x) {
    if (phi.contains(x)) continue;
    const Elem one[1] = {x};
    const auto cent = centralizer_of_elements(g, one);
    if (!is_abelian(g, cent)) {
      c.fail(0, {{"element", x}, {"centralizer", elems(cent)}});
      return;
    }
  }
}

void check_small_order(Ctx& c) {
  const auto& g = c.g();
  const auto pk = prime_power(g.order());
  if (!pk || pk->second > 4) return;
  const bool in = is_A(g).in_A;
  if (pk->second <= 3) {
    c.match(0);
    if (!in) c.fail(0, {{"in_A", false}});
    return;
  }
  const bool abel = is_abelian(g);
  const bool mc = is_maximal_class(g, pk->first);
  const bool phi_z = frattini(g) == center(g);
  const bool cond = abel || mc || phi_z;
  const Json detail{{"in_A", in}, {"abelian", abel}, {"maximal_class", mc}, {"frattini_equals_center", phi_z}};
  if (in) {
    c.match(1);
    if (!cond) c.fail(1, detail);
  }
  if (cond) {
    c.match(2);
    if (!in) c.fail(2, detail);
  }
}

void check_maxclass23(Ctx& c) {
  const auto& g = c.g();
  const auto p = p_of(g);
  if (!p || (*p != 2 && *p != 3) || !is_maximal_class(g, *p)) return;
  c.match(0);
  const auto r = is_A(g);
  if (!r.in_A) c.fail(0, {{"witness", to_json(*r.witness)}});
}

void check_abelian_maximal(Ctx& c) {
  const auto& g = c.g();
  const auto p = p_of(g);
  if (!p || !is_maximal_class(g, *p) || !has_abelian_maximal(g)) return;
  c.match(0);
  const auto r = is_A(g);
  if (!r.in_A) c.fail(0, {{"witness", to_json(*r.witness)}});
}

void check_maxclass_p1(Ctx& c) {
  const auto& g = c.g();
  const auto pk = prime_power(g.order());
  if (!pk || pk->first < 5 || pk->second < 4 || !is_maximal_class(g, pk->first)) return;
  const auto p1 = two_step_centralizer(g);
  const bool ab = is_abelian(g, p1);
  const auto r = is_A(g);
  const std::size_t d = ab ? 0 : 1;
  c.match(d);
  if (r.in_A != ab)
    c.fail(d, {{"in_A", r.in_A},
               {"p1", elems(p1)},
               {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}});
}

void check_exponent_p(Ctx& c) {
  const auto& g = c.g();
  const auto pk = prime_power(g.order());
  if (!pk || exponent(g) != pk->first || !is_A(g).in_A) return;
  c.match(0);
  const unsigned p = pk->first, n = pk->second;
  if (is_elementary_abelian(g, p)) return;
  const bool small = n <= p;
  const bool mc = is_maximal_class(g, p);
  const bool ea_max = has_elementary_abelian_maximal(g, p);
  if (!(small && mc && ea_max))
    c.fail(0, {{"order_exponent", n}, {"maximal_class", mc}, {"elementary_abelian_maximal", ea_max}});
}

const std::vector<std::string> kPropertyFamilies{"standard", "small", "order81", "exponent"};

const std::vector<TheoremDef>& registry() {
  static const std::vector<TheoremDef> defs{
      {"center-in-nonabelian",
       "for G in A, Z(G) lies in every non-abelian subgroup of G",
       {{"in-A and non-abelian => Z(G) <= H for all non-abelian H", true}},
       kPropertyFamilies,
       625,
       check_center_in_nonabelian},
      {"z-in-frattini",
       "for non-abelian G in A, Z(G) <= Frattini(G)",
       {{"non-abelian and in-A => Z <= Frattini", true}},
       kPropertyFamilies,
       625,
       check_z_in_frattini},
      {"inverting",
       "for G in A, if x inverts an element a != 1 of odd order then |x| is a power of 2 and "
       "C(<a, x>) = <x^2>",
       {{"in-A with an inverted odd-order element => law holds", true}},
       kPropertyFamilies,
       625,
       check_inverting},
      {"criteria-equivalence",
       "the subgroup, pair, minimal non-abelian and recursive membership tests agree",
       {{"all methods within caps agree", true}},
       {"standard"},
       256,
       check_criteria},
      {"minnonab-classification",
       "minimal non-abelian p-subgroups are K1, K2 or K3 with |K'| = p, d(K) = 2 and "
       "Omega1(Z(K)) of rank at most 3",
       {{"minimal non-abelian p-subgroup => classified with the stated invariants", true}},
       {"standard"},
       256,
       check_minnonab},
      {"metacyclic-in-A",
       "King's metacyclic p-groups are in A and Z(G) = <a^(p^u), b^(p^v)>",
       {{"king group => in-A and center formula", true}},
       {"king"},
       625,
       check_metacyclic},
      {"outside-frattini-abelian-centralizer",
       "for a p-group G in A and g outside Frattini(G), C(g) is abelian",
       {{"p-group in-A => C(g) abelian for g outside Frattini", true}},
       kPropertyFamilies,
       625,
       check_outside_frattini},
      {"small-order",
       "p-groups of order at most p^3 are in A; a group of order p^4 is in A iff it is abelian, "
       "of maximal class, or Frattini(G) = Z(G)",
       {{"order <= p^3 => in-A", false},
        {"order p^4 and in-A => abelian or maximal class or Frattini = Z", true},
        {"order p^4 and (abelian or maximal class or Frattini = Z) => in-A", true}},
       {"small", "order16", "order81"},
       625,
       check_small_order},
      {"maxclass-23",
       "2-groups and 3-groups of maximal class are in A",
       {{"maximal class, p in {2,3} => in-A", true}},
       {"maxclass"},
       729,
       check_maxclass23},
      {"abelian-maximal-implies-A",
       "a p-group of maximal class with an abelian maximal subgroup is in A",
       {{"maximal class with abelian maximal subgroup => in-A", true}},
       {"maxclass"},
       729,
       check_abelian_maximal},
      {"maxclass-p1",
       "for p >= 5 and order p^n with n >= 4, a group of maximal class is in A iff its 2-step "
       "centralizer P1 is abelian",
       {{"P1 abelian => in-A", true}, {"P1 non-abelian => not-in-A", true}},
       {"maxclass"},
       3125,
       check_maxclass_p1},
      {"exponent-p",
       "a group of exponent p in A is elementary abelian, or has order at most p^p, maximal class "
       "and an elementary abelian subgroup of index p",
       {{"exponent p and in-A => trichotomy", true}},
       {"exponent"},
       3125,
       check_exponent_p},
  };
  return defs;
}

const TheoremDef& find_def(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d;
  throw InputError("unknown theorem id '" + id + "'");
}

std::string verdict_of(std::size_t matched, std::size_t failures) {
  if (failures) return "refuted";
  return matched ? "verified" : "vacuous";
}

TheoremReport run(const TheoremDef& def, const std::vector<CorpusMember>& corpus, Json corpus_json,
                  unsigned jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> dir_names;
  for (const auto& [name, req] : def.directions) dir_names.push_back(name);

  std::vector<Outcome> outcomes(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      auto& out = outcomes[i];
      out.matched.assign(def.directions.size(), 0);
      Ctx ctx{corpus[i], out, dir_names};
      try {
        def.check(ctx);
      } catch (const CapabilityError& e) {
        out.matched.assign(def.directions.size(), 0);
        out.failures.clear();
        out.skipped = e.what();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, corpus.size()))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  TheoremReport rep;
  rep.id = def.id;
  rep.statement = def.statement;
  rep.corpus = std::move(corpus_json);
  for (const auto& [name, req] : def.directions) rep.directions.push_back({name, req, 0, 0, ""});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& out = outcomes[i];
    rep.members.push_back(corpus[i].descriptor);
    if (out.skipped) {
      rep.incomplete = true;
      rep.skipped.push_back({{"group", corpus[i].descriptor}, {"reason", *out.skipped}});
      continue;
    }
    bool any = false;
    for (std::size_t d = 0; d < out.matched.size(); ++d)
      if (out.matched[d]) {
        ++rep.directions[d].matched;
        any = true;
      }
    if (any) ++rep.tested;
    for (const auto& f : out.failures) {
      for (auto& dr : rep.directions)
        if (dr.name == f.at("direction").get<std::string>()) ++dr.failures;
      rep.counterexamples.push_back(f);
    }
  }
  bool vacuous = rep.tested == 0;
  for (auto& dr : rep.directions) {
    dr.verdict = verdict_of(dr.matched, dr.failures);
    if (dr.required && dr.matched == 0) vacuous = true;
  }
  rep.verdict = !rep.counterexamples.empty() ? "refuted" : vacuous ? "vacuous" : "verified";
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

}  // namespace

Json CorpusSpec::to_json() const {
  Json j{{"primes", primes},
         {"min_order", min_order},
         {"families", families},
         {"note", "over constructible corpus"}};
  j["max_order"] = max_order ? Json(*max_order) : Json(nullptr);
  j["n"] = n ? Json(*n) : Json(nullptr);
  return j;
}

const std::vector<std::string>& corpus_family_names() {
  static const std::vector<std::string> names{"abelian", "maxclass", "K2",    "K3",       "king",    "nonp",
                                              "products", "order16", "order81", "small", "exponent", "standard"};
  return names;
}

std::vector<CorpusMember> corpus_family(const std::string& family, const std::vector<unsigned>& primes,
                                        std::size_t max_ord) {
  for (unsigned p : primes)
    if (p < 2) throw InputError("corpus primes must be primes");
  Collector c(std::min(max_ord, max_order()));
  if (family == "abelian") family_abelian(c, primes);
  else if (family == "maxclass") family_maxclass(c, primes);
  else if (family == "K2") family_k2(c, primes);
  else if (family == "K3") family_k3(c, primes);
  else if (family == "king") family_king(c, primes);
  else if (family == "nonp") family_nonp(c);
  else if (family == "products") family_products(c, primes);
  else if (family == "order16") family_order16(c, primes);
  else if (family == "order81") family_order81(c, primes);
  else if (family == "small") family_small(c, primes);
  else if (family == "exponent") family_exponent(c, primes);
  else if (family == "standard") {
    for (const char* f : {"abelian", "maxclass", "K2", "K3", "king", "nonp", "products", "order16"})
      for (auto& m : corpus_family(f, primes, max_ord)) c.add_built(std::move(m.descriptor), std::move(m.table));
  } else {
    throw InputError("unknown corpus family '" + family + "'");
  }
  return c.take();
}

std::vector<CorpusMember> build_corpus(const CorpusSpec& spec) {
  if (spec.families.empty()) throw InputError("corpus needs at least one family");
  const std::size_t max_ord = spec.max_order.value_or(256);
  std::vector<CorpusMember> out;
  std::set<std::string> seen;
  for (const auto& f : spec.families) {
    for (auto& m : corpus_family(f, spec.primes, max_ord)) {
      const std::size_t n = m.table.order();
      if (n < spec.min_order) continue;
      if (spec.n) {
        bool ok = false;
        for (unsigned p : spec.primes)
          if (ipow(p, *spec.n) == n) ok = true;
        if (!ok) continue;
      }
      if (seen.insert(m.descriptor.dump()).second) out.push_back(std::move(m));
    }
  }
  return out;
}

Json TheoremReport::to_json() const {
  Json dirs = Json::array();
  for (const auto& d : directions)
    dirs.push_back({{"name", d.name},
                    {"required", d.required},
                    {"matched", d.matched},
                    {"failures", d.failures},
                    {"verdict", d.verdict}});
  return {{"id", id},
          {"statement", statement},
          {"corpus", corpus},
          {"tested", tested},
          {"verdict", verdict},
          {"counterexamples", counterexamples},
          {"directions", dirs},
          {"incomplete", incomplete},
          {"skipped", skipped},
          {"members", members},
          {"millis", millis}};
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  return ids;
}

std::string theorem_statement(const std::string& id) { return find_def(id).statement; }

CorpusSpec default_corpus(const std::string& id) {
  const auto& def = find_def(id);
  CorpusSpec spec;
  spec.families = def.families;
  spec.max_order = def.max_order;
  return spec;
}

TheoremReport verify(const std::string& id, const CorpusSpec& spec, unsigned jobs) {
  const auto& def = find_def(id);
  CorpusSpec resolved = spec;
  if (resolved.families.empty()) resolved.families = def.families;
  if (!resolved.max_order) resolved.max_order = def.max_order;
  const auto corpus = build_corpus(resolved);
  return run(def, corpus, resolved.to_json(), jobs);
}

TheoremReport verify_members(const std::string& id, const std::vector<Json>& descriptors, unsigned jobs) {
  const auto& def = find_def(id);
  std::vector<CorpusMember> corpus;
  for (const auto& d : descriptors) corpus.push_back({d, build_group(d)});
  return run(def, corpus, Json{{"descriptors", descriptors.size()}, {"note", "over constructible corpus"}},
             jobs);
}

Json survey_record(const CorpusMember& m) {
  Json rec{{"group", m.descriptor}, {"name", m.table.name()}, {"order", m.table.order()}};
  try {
    if (prime_power(m.table.order())) rec["profile"] = to_json(profile_p_group(m.table));
    rec["membership"] = to_json(is_A(m.table));
  } catch (const CapabilityError& e) {
    rec["error"] = e.what();
  }
  return rec;
}

}  // namespace selfcent
