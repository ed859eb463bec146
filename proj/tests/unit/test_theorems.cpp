#include <algorithm>
#include <set>

#include "doctest.h"
#include "selfcent/errors.hpp"
#include "selfcent/theorems.hpp"

using namespace selfcent;

TEST_CASE("descriptors build the expected groups") {
  CHECK(build_group({{"family", "quaternion"}, {"k", 3}}).order() == 8);
  CHECK(build_group({{"family", "king"}, {"p", 2}, {"m", 3}, {"n", 1}, {"s", 0}, {"c", 1}, {"eps", 1}}).order() ==
        16);
  CHECK(build_group(Json::parse(R"({"family":"direct","factors":[{"family":"cyclic","n":2},
                                   {"family":"symmetric","degree":3}]})"))
            .order() == 12);
  CHECK(build_group({{"family", "catalog"}, {"p", 2}, {"n", 4}, {"index", 1}}).name() == "SD16");
  CHECK_THROWS_AS(build_group({{"family", "nope"}}), InputError);
  CHECK_THROWS_AS(build_group({{"family", "cyclic"}, {"n", 4}, {"extra", 1}}), InputError);
  CHECK_THROWS_AS(build_group({{"family", "cyclic"}}), InputError);
}

TEST_CASE("pc JSON round trip") {
  const auto j = Json::parse(R"({"p":2,"relative_orders":[2,2,2,2],"powers":[[],[],[[4,1]],[]],
                                 "commutators":[{"i":2,"j":1,"word":[[4,1]]}],"name":"C4oD8"})");
  const auto pres = pc_from_json(j);
  CHECK(pres.rank() == 4);
  auto back = pc_to_json(pres);
  CHECK(back["family"] == "pc");
  back.erase("family");
  CHECK(back == j);
  CHECK(from_pc_presentation(pres).order() == 16);
}

TEST_CASE("membership report JSON fields") {
  const auto r = is_A(build_group({{"family", "dihedral"}, {"order", 12}}));
  const auto j = to_json(r);
  for (const char* key : {"group", "order", "verdict", "method", "witness", "stats"}) CHECK(j.contains(key));
  CHECK(j["verdict"] == "not-in-A");
  CHECK(j["witness"]["subgroup"].is_array());
  CHECK(j["stats"].contains("examined"));
  CHECK(j["stats"].contains("micros"));
}

TEST_CASE("theorem registry covers the claim list") {
  const std::set<std::string> claims{"center-in-nonabelian",
                                     "z-in-frattini",
                                     "inverting",
                                     "criteria-equivalence",
                                     "minnonab-classification",
                                     "metacyclic-in-A",
                                     "outside-frattini-abelian-centralizer",
                                     "small-order",
                                     "maxclass-23",
                                     "abelian-maximal-implies-A",
                                     "maxclass-p1",
                                     "exponent-p"};
  const auto ids = theorem_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()) == claims);
  CHECK(ids.size() == claims.size());
  for (const auto& id : ids) CHECK_FALSE(theorem_statement(id).empty());
  CHECK_THROWS_AS(verify("no-such-theorem", {}), InputError);
}

TEST_CASE("metacyclic-in-A over p = 2, 3, 5 up to 625") {
  CorpusSpec spec;
  spec.primes = {2, 3, 5};
  spec.max_order = 625;
  spec.families = {"king"};
  const auto rep = verify("metacyclic-in-A", spec);
  CHECK(rep.verdict == "verified");
  CHECK(rep.tested >= 30);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.to_json()["corpus"]["note"] == "over constructible corpus");
}

TEST_CASE("small-order on the order-16 corpus") {
  CorpusSpec spec;
  spec.primes = {2};
  spec.families = {"order16"};
  const auto rep = verify("small-order", spec);
  CHECK(rep.verdict == "verified");
  CHECK(rep.members.size() == 14);
}

TEST_CASE("maxclass-p1 at p = 3, n = 4 is vacuous and says so") {
  CorpusSpec spec;
  spec.primes = {3};
  spec.n = 4;
  const auto rep = verify("maxclass-p1", spec);
  CHECK(rep.verdict == "vacuous");
  CHECK(rep.tested == 0);
  CHECK_FALSE(rep.members.empty());
  for (const auto& d : rep.directions) CHECK(d.matched == 0);
}

TEST_CASE("a report re-verifies from its member descriptors") {
  CorpusSpec spec;
  spec.primes = {2, 3};
  spec.max_order = 64;
  spec.families = {"standard"};
  const auto rep = verify("z-in-frattini", spec);
  REQUIRE(rep.verdict == "verified");
  const auto again = verify_members("z-in-frattini", rep.members);
  CHECK(again.verdict == rep.verdict);
  CHECK(again.tested == rep.tested);
  CHECK(again.members == rep.members);
}

TEST_CASE("parallel runs merge in corpus order") {
  CorpusSpec spec;
  spec.primes = {2, 3};
  spec.max_order = 81;
  spec.families = {"standard"};
  auto a = verify("outside-frattini-abelian-centralizer", spec, 1).to_json();
  auto b = verify("outside-frattini-abelian-centralizer", spec, 3).to_json();
  a.erase("millis");
  b.erase("millis");
  CHECK(a == b);
}

TEST_CASE("corpus construction") {
  const auto o16 = corpus_family("order16", {2}, 256);
  CHECK(o16.size() == 14);
  for (const auto& m : o16) CHECK(m.table.order() == 16);
  const auto o81 = corpus_family("order81", {3}, 256);
  CHECK(o81.size() >= 5);
  for (const auto& m : o81) CHECK(m.table.order() == 81);
  CHECK(corpus_family("order81", {2}, 256).empty());
  CHECK_THROWS_AS(corpus_family("bogus", {2}, 64), InputError);

  CorpusSpec spec;
  spec.families = {"abelian", "abelian"};
  spec.max_order = 32;
  const auto c = build_corpus(spec);
  std::set<std::string> seen;
  for (const auto& m : c) CHECK(seen.insert(m.descriptor.dump()).second);
  for (const auto& m : c) CHECK(build_group(m.descriptor).raw_table() == m.table.raw_table());
}

TEST_CASE("survey records") {
  const auto members = corpus_family("maxclass", {2}, 32);
  REQUIRE_FALSE(members.empty());
  for (const auto& m : members) {
    const auto rec = survey_record(m);
    CHECK(rec["membership"]["verdict"] == "in-A");
    CHECK(rec.contains("profile"));
  }
}
