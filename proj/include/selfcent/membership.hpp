#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfcent/group_core.hpp"
#include "selfcent/subgroups.hpp"

namespace selfcent {

enum class Method { Bruteforce, Pairs, Minimal, Recursive };

std::string to_string(Method m);
/// Accepts "bruteforce", "pairs", "minimal", "recursive".
Method method_from_string(const std::string& s);
inline constexpr Method kAllMethods[] = {Method::Bruteforce, Method::Pairs, Method::Minimal,
                                         Method::Recursive};

/// A non-abelian subgroup H and an element z outside H centralizing H.
struct Witness {
  SubgroupSet subgroup;
  Elem element = 0;
};

/// Re-checks a witness from the multiplication table alone.
bool witness_is_valid(const GroupTable& g, const Witness& w);

struct MembershipReport {
  std::string group;
  std::size_t order = 0;
  bool in_A = true;
  Method method = Method::Pairs;
  std::optional<Witness> witness;
  std::size_t examined = 0;
  std::int64_t micros = 0;
};

/// Every non-abelian subgroup of the full inventory contains its centralizer.
MembershipReport is_A_bruteforce(const GroupTable& g, std::size_t cap = kDefaultSubgroupCap);
/// C(<x, y>) <= <x, y> for every non-commuting pair.
MembershipReport is_A_pairs(const GroupTable& g, std::size_t cap = kDefaultPairCap);
/// C(K) <= K for every minimal non-abelian subgroup K.
MembershipReport is_A_minimal(const GroupTable& g, std::size_t cap = kDefaultPairCap);
/// Abelian, or every maximal subgroup in the class and Z(G) <= Φ(G).
MembershipReport is_A_recursive(const GroupTable& g, std::size_t cap = kDefaultSubgroupCap);

MembershipReport run_method(const GroupTable& g, Method m);

/// p-groups go through the recursive test, other groups through pairs; the
/// pair cap is raised to the current max_order().
MembershipReport is_A(const GroupTable& g);

/// Thrown when two methods disagree or a witness fails re-checking. The
/// message carries the table and every report.
class MethodDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CrossCheck {
  bool in_A = true;
  std::vector<MembershipReport> reports;  // methods that ran, in kAllMethods order
  std::vector<Method> skipped;            // methods whose caps were exceeded
};

CrossCheck cross_check(const GroupTable& g);

}  // namespace selfcent
