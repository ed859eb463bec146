#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "selfcent/errors.hpp"
#include "selfcent/families.hpp"
#include "selfcent/membership.hpp"

using namespace selfcent;

namespace {

// Independent witness scan over the raw table.
bool witness_ok(const GroupTable& g, const Witness& w) {
  const auto h = w.subgroup.elements();
  if (std::binary_search(h.begin(), h.end(), w.element)) return false;
  if (oracle::closure(g, h) != h) return false;
  if (oracle::abelian(g, h)) return false;
  for (Elem x : h)
    if (g.mul(x, w.element) != g.mul(w.element, x)) return false;
  return true;
}

}  // namespace

TEST_CASE("Q8 is in A under every method") {
  const auto q8 = generalized_quaternion(8);
  for (Method m : kAllMethods) {
    const auto r = run_method(q8, m);
    CAPTURE(to_string(m));
    CHECK(r.in_A);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("D12 is not in A, with a re-checkable witness") {
  for (const auto& g : {dihedral(12), direct_product(cyclic(2), symmetric(3))}) {
    for (Method m : kAllMethods) {
      CAPTURE(to_string(m));
      const auto r = run_method(g, m);
      CHECK_FALSE(r.in_A);
      REQUIRE(r.witness);
      CHECK(witness_is_valid(g, *r.witness));
      CHECK(witness_ok(g, *r.witness));
    }
  }
}

TEST_CASE("witness_is_valid rejects tampered witnesses") {
  const auto g = dihedral(12);
  const auto r = is_A_bruteforce(g);
  REQUIRE(r.witness);
  Witness w = *r.witness;
  w.element = w.subgroup.elements()[1];  // inside H
  CHECK_FALSE(witness_is_valid(g, w));
  Witness a{trivial_subgroup(g), r.witness->element};  // abelian H
  CHECK_FALSE(witness_is_valid(g, a));
}

TEST_CASE("methods agree with the definition on small groups") {
  const std::vector<GroupTable> gs{
      symmetric(3),           symmetric(4),           alternating(4),
      dihedral(8),            dihedral(12),           dihedral(16),
      generalized_quaternion(16), semidihedral(16),   dicyclic(12),
      minimal_nonabelian_k3(2, 2, 1), heisenberg(3),  direct_product(cyclic(3), symmetric(3)),
      direct_product(dihedral(8), cyclic(2)), direct_product(generalized_quaternion(8), cyclic(2)),
      metacyclic(5, 4, 2, 0, "F20"), abelian({4, 2})};
  for (const auto& g : gs) {
    CAPTURE(g.name());
    const bool truth = oracle::in_A(g);
    const auto cc = cross_check(g);
    CHECK(cc.reports.size() == 4);
    CHECK(cc.in_A == truth);
  }
}

TEST_CASE("known verdicts") {
  CHECK(is_A(symmetric(3)).in_A);
  CHECK(is_A(alternating(4)).in_A);
  CHECK(is_A(symmetric(4)).in_A);
  CHECK_FALSE(is_A(direct_product(dihedral(8), cyclic(2))).in_A);
  CHECK_FALSE(is_A(direct_product(cyclic(3), heisenberg(3))).in_A);
  CHECK(is_A(minimal_nonabelian_k2(3, 2, 1)).in_A);
}

TEST_CASE("caps are reported, not silently ignored") {
  const auto g = cyclic(512);
  CHECK_THROWS_AS(is_A_bruteforce(g), CapabilityError);
  const auto cc = cross_check(g);
  CHECK(cc.in_A);
  CHECK_FALSE(cc.skipped.empty());
}

TEST_CASE("method names") {
  for (Method m : kAllMethods) CHECK(method_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(method_from_string("magic"), InputError);
}
