#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "selfcent/errors.hpp"
#include "selfcent/families.hpp"
#include "selfcent/group_core.hpp"
#include "selfcent/structure.hpp"

using namespace selfcent;

namespace {

oracle::Set as_set(const SubgroupSet& s) { return s.elements(); }

// Random Latin square on {0..n-1} with 0 as two-sided identity, by
// randomized backtracking.
bool fill_loop(std::size_t n, std::vector<Elem>& t, std::size_t cell, std::mt19937& rng) {
  if (cell == n * n) return true;
  const std::size_t x = cell / n, y = cell % n;
  if (x == 0 || y == 0) return fill_loop(n, t, cell + 1, rng);
  std::vector<Elem> cand(n);
  for (Elem v = 0; v < n; ++v) cand[v] = v;
  std::shuffle(cand.begin(), cand.end(), rng);
  for (Elem v : cand) {
    bool ok = true;
    for (std::size_t k = 0; k < y && ok; ++k) ok = t[x * n + k] != v;
    for (std::size_t k = 0; k < x && ok; ++k) ok = t[k * n + y] != v;
    if (!ok) continue;
    t[x * n + y] = v;
    if (fill_loop(n, t, cell + 1, rng)) return true;
  }
  return false;
}

std::vector<Elem> random_loop(std::size_t n, std::mt19937& rng) {
  std::vector<Elem> t(n * n, 0);
  for (Elem i = 0; i < n; ++i) t[i] = t[i * n] = i;
  fill_loop(n, t, 0, rng);
  return t;
}

std::string tbl_text(std::size_t n, const std::vector<Elem>& t) {
  std::ostringstream out;
  out << n << "\n";
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out << (y ? " " : "") << t[x * n + y];
    out << "\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("cyclic groups") {
  const auto c6 = cyclic(6);
  CHECK(c6.order() == 6);
  CHECK(element_order(c6, 1) == 6);
  CHECK(cyclic(1).order() == 1);
  CHECK(is_abelian(c6));
}

TEST_CASE("associativity check agrees with the n^3 scan on random loops") {
  std::mt19937 rng(20240611);
  int groups = 0, loops = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto t = random_loop(n, rng);
    const bool naive = oracle::associative(n, t);
    const auto bad = find_nonassociative_triple(n, t);
    CHECK(naive == !bad.has_value());
    if (bad) {
      const auto [a, b, c] = *bad;
      CHECK(t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]);
      ++loops;
    } else {
      ++groups;
    }
  }
  CHECK(groups > 0);
  CHECK(loops > 0);
}

TEST_CASE("table deserialization") {
  std::istringstream q(tbl_text(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}));
  CHECK(read_tbl(q, "c3").order() == 3);

  std::istringstream truncated("3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(read_tbl(truncated, "t"), InputError);

  std::istringstream not_identity(tbl_text(2, {1, 0, 0, 1}));
  CHECK_THROWS_AS(read_tbl(not_identity, "t"), AxiomError);

  // The smallest non-associative loop has order 5.
  std::mt19937 rng(7);
  std::vector<Elem> loop;
  do loop = random_loop(5, rng);
  while (oracle::associative(5, loop));
  std::istringstream bad(tbl_text(5, loop));
  try {
    read_tbl(bad, "loop");
    FAIL("non-associative table accepted");
  } catch (const AxiomError& e) {
    REQUIRE(e.has_triple());
    const auto [a, b, c] = e.triple();
    CHECK(loop[loop[a * 5 + b] * 5 + c] != loop[a * 5 + loop[b * 5 + c]]);
  }
}

TEST_CASE("tbl round trip is bit-exact") {
  const auto g = dihedral(12);
  std::ostringstream out;
  write_tbl(out, g);
  std::istringstream in(out.str());
  const auto h = read_tbl(in, "D12");
  CHECK(h.raw_table() == g.raw_table());
}

TEST_CASE("element arithmetic follows x^-1 y^-1 x y and b^-1 a b") {
  const auto s3 = symmetric(3);
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) {
      CHECK(commutator(s3, x, y) == oracle::comm(s3, x, y));
      CHECK(conjugate(s3, x, y) == s3.mul(oracle::inv(s3, y), s3.mul(x, y)));
    }
  CHECK(power(s3, 1, -1) == inverse(s3, 1));
  CHECK(power(s3, 1, 0) == 0);
}

TEST_CASE("center, centralizer and derived subgroup against naive scans") {
  const std::vector<GroupTable> gs{symmetric(4), dihedral(12), generalized_quaternion(16),
                                   minimal_nonabelian_k3(3, 1, 1), alternating(5), semidihedral(32),
                                   direct_product(cyclic(2), symmetric(3))};
  for (const auto& g : gs) {
    CAPTURE(g.name());
    CHECK(as_set(center(g)) == oracle::center(g));
    CHECK(as_set(derived_subgroup(g, whole_group(g))) == oracle::derived(g));
    const Elem gens[1] = {1};
    const auto c1 = centralizer_of_elements(g, gens);
    CHECK(as_set(c1) == oracle::centralizer(g, {1}));
  }
}

TEST_CASE("frattini fast path matches intersection of maximal subgroups") {
  const std::vector<GroupTable> gs{dihedral(8),          generalized_quaternion(8), abelian({4, 2}),
                                   symmetric(4),         dihedral(12),              minimal_nonabelian_k2(2, 3, 1),
                                   minimal_nonabelian_k3(3, 1, 1), dicyclic(12),    cyclic(30)};
  for (const auto& g : gs) {
    CAPTURE(g.name());
    CHECK(frattini(g) == frattini_by_maximals(g));
    if (g.order() <= 24) CHECK(as_set(frattini(g)) == oracle::frattini(g));
  }
}

TEST_CASE("semidirect product C3 by inversion is S3") {
  const auto c3 = cyclic(3), c2 = cyclic(2);
  const auto s3 = semidirect_product(c3, c2, {{0, 1, 2}, {0, 2, 1}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_abelian(s3));
  CHECK_THROWS_AS(semidirect_product(c3, c2, {{0, 1, 2}, {1, 0, 2}}), ConstructionError);
}

TEST_CASE("lower central series of the order-625 maximal-class group") {
  const auto g = maxclass_abelian_p1(5, 4);
  const auto lcs = lower_central_series(g);
  std::vector<std::size_t> orders;
  for (const auto& s : lcs) orders.push_back(s.order());
  CHECK(orders == std::vector<std::size_t>{625, 25, 5, 1});
  CHECK(nilpotency_class(g) == 3u);
}

TEST_CASE("the metacyclic presentation with a^b = a^(1+p) and b^p = 1 needs p^(n-1) <= p^2") {
  CHECK_THROWS_AS(metacyclic(125, 5, 6, 0, "x"), InputError);
  CHECK(metacyclic(25, 5, 6, 0, "x").order() == 125);
}

TEST_CASE("restrict_to embeds the subgroup") {
  const auto g = symmetric(4);
  const auto a4 = derived_subgroup(g, whole_group(g));
  const auto r = restrict_to(g, a4, "A4");
  REQUIRE(r.table.order() == 12);
  for (Elem x = 0; x < 12; ++x)
    for (Elem y = 0; y < 12; ++y) CHECK(r.embedding[r.table.mul(x, y)] == g.mul(r.embedding[x], r.embedding[y]));
}

TEST_CASE("order cap") {
  const auto old = max_order();
  set_max_order(64);
  CHECK_THROWS_AS(cyclic(128), CapabilityError);
  set_max_order(old);
  CHECK_THROWS(set_max_order(kHardMaxOrder + 1));
}
