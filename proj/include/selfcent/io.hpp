#pragma once

#include <string>

#include "json.hpp"
#include "selfcent/families.hpp"
#include "selfcent/membership.hpp"
#include "selfcent/structure.hpp"

namespace selfcent {

using Json = nlohmann::json;

/// Builds a group from a descriptor such as
///   {"family":"king","p":2,"m":3,"n":1,"s":0,"c":1,"eps":1}
///   {"family":"direct","factors":[{"family":"cyclic","n":2},{"family":"symmetric","degree":3}]}
/// Unknown families or fields raise InputError.
GroupTable build_group(const Json& descriptor);

/// pc presentations in JSON use 1-based generators:
///   {"p":2, "relative_orders":[2,2,2], "powers":[[[2,1]],[],[]],
///    "commutators":[{"i":2,"j":1,"word":[[3,1]]}], "name":"..."}
PcPresentation pc_from_json(const Json& j);
Json pc_to_json(const PcPresentation& pres);

Json king_descriptor(const KingParameters& k);

Json to_json(const MembershipReport& r);
Json to_json(const Witness& w);
Json to_json(const PGroupProfile& p);

/// "in-A" / "not-in-A".
std::string verdict_string(bool in_A);

}  // namespace selfcent
