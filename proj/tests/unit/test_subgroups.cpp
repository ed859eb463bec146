#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "selfcent/families.hpp"
#include "selfcent/structure.hpp"
#include "selfcent/subgroups.hpp"

using namespace selfcent;

TEST_CASE("subgroup counts") {
  // Frozen counts for well-known groups.
  const std::vector<std::pair<GroupTable, std::size_t>> cases{
      {symmetric(3), 6},       {dihedral(8), 10},     {generalized_quaternion(8), 6},
      {elementary_abelian(2, 3), 16}, {abelian({4, 2}), 8}, {alternating(4), 10},
      {symmetric(4), 30},      {dihedral(12), 16},    {alternating(5), 59},
      {cyclic(12), 6},         {elementary_abelian(3, 2), 6}};
  for (const auto& [g, count] : cases) {
    CAPTURE(g.name());
    const auto inv = all_subgroups(g);
    CHECK(inv.complete);
    CHECK(inv.subgroups.size() == count);
  }
}

TEST_CASE("subgroup inventory matches naive closure enumeration") {
  for (const auto& g : {dihedral(16), symmetric(4), minimal_nonabelian_k3(2, 2, 1), heisenberg(3)}) {
    CAPTURE(g.name());
    std::set<oracle::Set> mine;
    for (const auto& h : all_subgroups(g).subgroups) mine.insert(h.elements());
    CHECK(mine == oracle::subgroups3(g));
  }
}

TEST_CASE("maximal subgroups") {
  const auto c8 = cyclic(8);
  const auto m = maximal_subgroups(c8);
  REQUIRE(m.size() == 1);
  CHECK(m[0].order() == 4);
  for (const auto& g : {dihedral(16), abelian({4, 2, 2}), minimal_nonabelian_k2(3, 2, 1)}) {
    CAPTURE(g.name());
    const auto pk = prime_power(g.order());
    auto a = maximal_subgroups_p_group(g, pk->first);
    auto b = maximal_subgroups_generic(g, 256);
    auto key = [](const SubgroupSet& x, const SubgroupSet& y) { return x.bits().lex_less(y.bits()); };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    CHECK(a == b);
  }
  CHECK(maximal_subgroups(symmetric(4)).size() == 8);  // A4, three D8, four S3
}

TEST_CASE("two-generated subgroups come from non-commuting pairs") {
  CHECK(two_generated_subgroups(elementary_abelian(2, 3)).empty());
  // S3 is the only non-abelian 2-generated subgroup of S3.
  const auto t = two_generated_subgroups(symmetric(3));
  REQUIRE(t.size() == 1);
  CHECK(t[0].subgroup.order() == 6);
  std::map<std::size_t, int> by_order;
  for (const auto& s : two_generated_subgroups(symmetric(4))) ++by_order[s.subgroup.order()];
  CHECK(by_order[6] == 4);
  CHECK(by_order[8] == 3);
  CHECK(by_order[12] == 1);
  CHECK(by_order[24] == 1);
}

TEST_CASE("minimal non-abelian classification round trips through the constructors") {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned m = 2; m <= 3; ++m)
      for (unsigned n = 1; n <= 2; ++n) {
        if (std::pow(p, m + n) > 2048) continue;
        const auto g = minimal_nonabelian_k2(p, m, n);
        CAPTURE(g.name());
        REQUIRE(is_minimal_nonabelian(g, whole_group(g)));
        CHECK(classify_minimal_nonabelian(g, whole_group(g), p) ==
              MinNonabelianClass{MinNonabelianKind::K2, m, n});
      }
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned m = 1; m <= 2; ++m)
      for (unsigned n = 1; n <= m; ++n) {
        if (p == 2 && m + n <= 2) continue;
        if (std::pow(p, m + n + 1) > 2048) continue;
        const auto g = minimal_nonabelian_k3(p, m, n);
        CAPTURE(g.name());
        REQUIRE(is_minimal_nonabelian(g, whole_group(g)));
        CHECK(classify_minimal_nonabelian(g, whole_group(g), p) ==
              MinNonabelianClass{MinNonabelianKind::K3, m, n});
      }
  const auto q8 = generalized_quaternion(8);
  CHECK(classify_minimal_nonabelian(q8, whole_group(q8), 2).kind == MinNonabelianKind::K1);
  const auto h3 = heisenberg(3);
  CHECK(classify_minimal_nonabelian(h3, whole_group(h3), 3) == MinNonabelianClass{MinNonabelianKind::K3, 1, 1});
  const auto s3 = symmetric(3);
  CHECK(classify_minimal_nonabelian(s3, whole_group(s3), 2).kind == MinNonabelianKind::NotPGroup);
}

TEST_CASE("K3 derived subgroup is central of order p") {
  const auto g = minimal_nonabelian_k3(3, 2, 1);
  const auto d = derived_subgroup(g, whole_group(g));
  CHECK(d.order() == 3);
  CHECK(d.is_subgroup_of(center(g)));
}

TEST_CASE("the K3 presentation at p = 2, m = n = 1 gives D8") {
  CHECK_THROWS_AS(minimal_nonabelian_k3(2, 1, 1), InputError);
  const auto g = central_product_k3(2, 1, 1);
  REQUIRE(g.order() == 8);
  const auto orders = element_orders(g);
  CHECK(std::count(orders.begin(), orders.end(), 2u) == 5);  // D8 has five involutions, Q8 one
  CHECK(is_metacyclic(g).has_value());
  CHECK(classify_minimal_nonabelian(g, whole_group(g), 2) == MinNonabelianClass{MinNonabelianKind::K2, 2, 1});
}

TEST_CASE("minimal non-abelian subgroups of S4") {
  const auto g = symmetric(4);
  const auto ks = minimal_nonabelian_subgroups(g);
  std::map<std::size_t, int> by_order;
  for (const auto& k : ks) {
    CHECK(is_minimal_nonabelian(g, k));
    ++by_order[k.order()];
  }
  // Four S3, three D8 and A4.
  CHECK(by_order[6] == 4);
  CHECK(by_order[8] == 3);
  CHECK(by_order[12] == 1);
}

TEST_CASE("cyclic representatives") {
  const auto g = cyclic(12);
  CHECK(cyclic_representatives(g).size() == 5);  // one per non-trivial divisor
}
