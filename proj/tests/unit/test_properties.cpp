// Randomized properties over the standard corpus, fixed seeds.

#include <random>

#include "doctest.h"
#include "selfcent/theorems.hpp"

using namespace selfcent;

namespace {

const std::vector<CorpusMember>& corpus() {
  static const auto c = [] {
    CorpusSpec spec;
    spec.families = {"standard", "order81"};
    spec.max_order = 128;
    return build_corpus(spec);
  }();
  return c;
}

}  // namespace

TEST_CASE("group laws on random triples") {
  std::mt19937 rng(1);
  for (const auto& m : corpus()) {
    const auto& g = m.table;
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    for (int t = 0; t < 20; ++t) {
      const Elem x = pick(rng), y = pick(rng), z = pick(rng);
      REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(inverse(g, commutator(g, x, y)) == commutator(g, y, x));
      // x^y = x [x, y]
      CHECK(conjugate(g, x, y) == g.mul(x, commutator(g, x, y)));
    }
  }
}

TEST_CASE("generated subgroups are closed and orders divide |G|") {
  std::mt19937 rng(2);
  for (const auto& m : corpus()) {
    const auto& g = m.table;
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    for (int t = 0; t < 5; ++t) {
      const Elem gens[2] = {pick(rng), pick(rng)};
      const auto h = generated_subgroup(g, gens);
      CHECK(g.order() % h.order() == 0);
      CHECK(h.contains(gens[0]));
      CHECK(h.contains(gens[1]));
      CHECK(is_closed_subgroup(g, h.bits()));
      const auto c = centralizer(g, h);
      CHECK(center(g).is_subgroup_of(c));
    }
  }
}

TEST_CASE("subgroups of members of A are in A") {
  std::mt19937 rng(3);
  for (const auto& m : corpus()) {
    const auto& g = m.table;
    if (g.order() > 64 || !is_A(g).in_A) continue;
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    for (int t = 0; t < 3; ++t) {
      const Elem gens[2] = {pick(rng), pick(rng)};
      const auto h = generated_subgroup(g, gens);
      const auto r = restrict_to(g, h, "H");
      CAPTURE(g.name());
      CHECK(is_A(r.table).in_A);
    }
  }
}

TEST_CASE("frattini: G' and G^p lie in it for p-groups") {
  for (const auto& m : corpus()) {
    const auto& g = m.table;
    const auto pk = prime_power(g.order());
    if (!pk) continue;
    const auto phi = frattini(g);
    const auto w = whole_group(g);
    CHECK(derived_subgroup(g, w).is_subgroup_of(phi));
    CHECK(power_subgroup(g, w, pk->first).is_subgroup_of(phi));
    CHECK(g.order() / phi.order() == [&] {
      std::size_t q = 1;
      for (unsigned i = 0; i < generator_rank(g, pk->first); ++i) q *= pk->first;
      return q;
    }());
  }
}

TEST_CASE("pairs and recursive verdicts agree on the corpus") {
  for (const auto& m : corpus()) {
    const auto& g = m.table;
    if (!prime_power(g.order())) continue;
    CAPTURE(g.name());
    CHECK(is_A_pairs(g).in_A == is_A_recursive(g).in_A);
  }
}
