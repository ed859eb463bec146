#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "selfcent/group_core.hpp"
#include "selfcent/pc_presentation.hpp"

namespace selfcent {

GroupTable cyclic(std::size_t n);
/// Direct product of cyclic groups of the given orders (empty list: trivial).
GroupTable abelian(const std::vector<std::size_t>& factors);
GroupTable elementary_abelian(unsigned p, unsigned k);

/// <a, b | a^M = 1, b^N = a^t, a^b = a^r> on normal forms a^i b^j, with
/// index i*N + j. Requires gcd(r, M) = 1, r^N = 1 and r t = t (mod M).
GroupTable metacyclic(std::size_t M, std::size_t N, long long r, long long t, std::string name);

/// Dihedral group of the given order (even, at least 4).
GroupTable dihedral(std::size_t order);
/// Q_{2^k}, k >= 3.
GroupTable generalized_quaternion(std::size_t order);
/// SD_{2^k}, k >= 4.
GroupTable semidihedral(std::size_t order);
/// <a, b | a^{2m} = 1, b^2 = a^m, a^b = a^-1>, order 4m, m >= 2.
GroupTable dicyclic(std::size_t order);

/// <a, b | a^{p^m} = b^{p^n} = 1, a^b = a^{1+p^{m-1}}>, m >= 2, n >= 1.
GroupTable minimal_nonabelian_k2(unsigned p, unsigned m, unsigned n);
/// <a, b, c | a^{p^m} = b^{p^n} = c^p = 1, [a,b] = c central>, m, n >= 1 and
/// m + n > 2 when p = 2.
GroupTable minimal_nonabelian_k3(unsigned p, unsigned m, unsigned n);
/// The K3 presentation without the p = 2 restriction (K3(2,1,1) is D8).
GroupTable central_product_k3(unsigned p, unsigned m, unsigned n);
/// Extraspecial group of order p^3 and exponent p (p odd); D8 for p = 2.
GroupTable heisenberg(unsigned p);

/// <a, b | a^{p^m} = 1, b^{p^n} = a^{p^{m-s}}, a^b = a^{eps + p^{m-c}}>.
struct KingParameters {
  unsigned p = 2;
  unsigned m = 1;
  unsigned n = 1;
  unsigned s = 0;
  unsigned c = 0;
  int eps = 1;

  std::string label() const;
  bool operator==(const KingParameters&) const = default;
};

/// Throws InputError naming the violated condition.
void validate_king(const KingParameters& k);
bool king_is_valid(const KingParameters& k);

struct KingGroup {
  GroupTable table;
  Elem a = 0;
  Elem b = 0;
  unsigned u = 0;  // predicted Z(G) = <a^{p^u}, b^{p^v}>
  unsigned v = 0;
  std::vector<Elem> predicted_center_generators() const;
};

KingGroup king_metacyclic(const KingParameters& k);

/// Every valid tuple with p^{m+n} <= max_order, in (m, n, s, c, eps) order.
std::vector<KingParameters> king_parameter_grid(unsigned p, std::size_t max_order);

/// Closure of permutations of {0..degree-1}; (x y)(i) = y(x(i)).
GroupTable permutation_group(unsigned degree, const std::vector<std::vector<unsigned>>& gens,
                             std::string name);
GroupTable symmetric(unsigned degree);
GroupTable alternating(unsigned degree);

/// C_p acting on A = Z_p[zeta]/(pi^{n-1}) (pi = zeta - 1) by multiplication
/// with zeta. Maximal class of order p^n whose 2-step centralizer A is
/// abelian. For n - 1 <= p - 1, A is elementary abelian and the action is a
/// single Jordan block.
GroupTable maxclass_abelian_p1(unsigned p, unsigned n);

/// pc presentation on g1..gn, all relative orders p, [g_i, g1] = g_{i+1} for
/// i >= 2, with the free structure constants listed.
struct MaxclassConstants {
  unsigned x = 0;  // [g3, g2] = g_{n-1}^x g_n^y   (n >= 5; n = 4: g_4^y)
  unsigned y = 0;
  unsigned z = 0;  // [g4, g2] = g_n^z           (n >= 5)
  unsigned a = 0;  // g1^p = g_n^a
  unsigned b = 0;  // g2^p = g_n^b
};
PcPresentation maxclass_presentation(unsigned p, unsigned n, const MaxclassConstants& k);

struct CatalogEntry {
  std::string name;
  GroupTable table;
};

/// Maximal-class groups of order p^n, n >= 2: for p = 2 the cyclic-by-C2
/// series, otherwise the abelian-P1 group plus the first non-abelian-P1 hit
/// of a bounded structure-constant search. Memoized.
std::vector<CatalogEntry> maxclass_catalog(unsigned p, unsigned n);

/// First consistent maximal-class group of order p^n with a non-abelian
/// 2-step centralizer over the MaxclassConstants grid (a, b outermost).
/// Only searched for p >= 5 and n >= 5.
std::optional<CatalogEntry> search_nonabelian_p1(unsigned p, unsigned n);

}  // namespace selfcent
