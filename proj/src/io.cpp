#include "selfcent/io.hpp"

#include <set>

#include "selfcent/errors.hpp"

namespace selfcent {

namespace {

void only_keys(const Json& d, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok{"family", "name"};
  for (const char* k : allowed) ok.insert(k);
  for (const auto& [key, value] : d.items()) {
    (void)value;
    if (!ok.contains(key))
      throw InputError("descriptor field '" + key + "' is not valid for family '" +
                       d.value("family", std::string("?")) + "'");
  }
}

long long get_int(const Json& d, const char* key) {
  if (!d.contains(key)) throw InputError(std::string("descriptor is missing '") + key + "'");
  const auto& v = d.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("descriptor field '") + key + "' must be an integer");
  return v.get<long long>();
}

unsigned get_uint(const Json& d, const char* key) {
  const long long v = get_int(d, key);
  if (v < 0 || v > 1'000'000) throw InputError(std::string("descriptor field '") + key + "' is out of range");
  return static_cast<unsigned>(v);
}

// "k" (order 2^k) or "order".
std::size_t two_power_order(const Json& d) {
  if (d.contains("k") == d.contains("order"))
    throw InputError("descriptor needs exactly one of 'k' or 'order'");
  if (d.contains("order")) return get_uint(d, "order");
  const unsigned k = get_uint(d, "k");
  if (k >= 31) throw InputError("descriptor field 'k' is out of range");
  return std::size_t{1} << k;
}

PcWord word_from_json(const Json& w, std::size_t rank) {
  if (!w.is_array()) throw InputError("pc word must be an array of [generator, exponent] pairs");
  PcWord out;
  for (const auto& part : w) {
    if (!part.is_array() || part.size() != 2 || !part[0].is_number_integer() ||
        !part[1].is_number_integer())
      throw InputError("pc word entries must be [generator, exponent]");
    const long long g = part[0].get<long long>(), e = part[1].get<long long>();
    if (g < 1 || static_cast<std::size_t>(g) > rank) throw InputError("pc word uses unknown generator");
    if (e < 0) throw InputError("pc word exponents must be non-negative");
    out.emplace_back(static_cast<unsigned>(g - 1), static_cast<unsigned>(e));
  }
  return out;
}

Json word_to_json(const PcWord& w) {
  Json out = Json::array();
  for (const auto& [g, e] : w) out.push_back({g + 1, e});
  return out;
}

Json subgroup_elements(const SubgroupSet& s) {
  Json out = Json::array();
  s.bits().for_each([&](Elem x) { out.push_back(x); });
  return out;
}

}  // namespace

PcPresentation pc_from_json(const Json& j) {
  only_keys(j, {"p", "relative_orders", "powers", "commutators"});
  PcPresentation pres;
  pres.p = get_uint(j, "p");
  if (!j.contains("relative_orders") || !j.at("relative_orders").is_array())
    throw InputError("pc presentation needs 'relative_orders'");
  for (const auto& ro : j.at("relative_orders")) {
    if (!ro.is_number_integer() || ro.get<long long>() < 2)
      throw InputError("pc relative orders must be integers >= 2");
    pres.relative_orders.push_back(ro.get<unsigned>());
  }
  const std::size_t r = pres.rank();
  pres.powers.assign(r, {});
  if (j.contains("powers")) {
    const auto& pw = j.at("powers");
    if (!pw.is_array() || pw.size() != r) throw InputError("pc 'powers' needs one word per generator");
    for (std::size_t i = 0; i < r; ++i) pres.powers[i] = word_from_json(pw[i], r);
  }
  if (j.contains("commutators")) {
    for (const auto& c : j.at("commutators")) {
      if (!c.is_object()) throw InputError("pc commutator entries must be objects");
      for (const auto& [key, value] : c.items()) {
        (void)value;
        if (key != "i" && key != "j" && key != "word")
          throw InputError("pc commutator field '" + key + "' is not valid");
      }
      const unsigned i = get_uint(c, "i"), jj = get_uint(c, "j");
      if (i < 1 || jj < 1 || i > r || jj >= i)
        throw InputError("pc commutator needs r >= i > j >= 1");
      if (!c.contains("word")) throw InputError("pc commutator is missing 'word'");
      if (!pres.commutators.emplace(std::make_pair(i - 1, jj - 1), word_from_json(c.at("word"), r)).second)
        throw InputError("pc commutator [g" + std::to_string(i) + ", g" + std::to_string(jj) +
                         "] given twice");
    }
  }
  pres.name = j.value("name", std::string("pc"));
  return pres;
}

Json pc_to_json(const PcPresentation& pres) {
  Json j{{"family", "pc"}, {"p", pres.p}, {"relative_orders", pres.relative_orders}, {"name", pres.name}};
  Json powers = Json::array();
  for (const auto& w : pres.powers) powers.push_back(word_to_json(w));
  j["powers"] = powers;
  Json comms = Json::array();
  for (const auto& [key, w] : pres.commutators)
    if (!w.empty()) comms.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"word", word_to_json(w)}});
  j["commutators"] = comms;
  return j;
}

Json king_descriptor(const KingParameters& k) {
  return {{"family", "king"}, {"p", k.p}, {"m", k.m}, {"n", k.n}, {"s", k.s}, {"c", k.c}, {"eps", k.eps}};
}

GroupTable build_group(const Json& d) {
  if (!d.is_object() || !d.contains("family") || !d.at("family").is_string())
    throw InputError("group descriptor must be an object with a string 'family'");
  const auto family = d.at("family").get<std::string>();
  GroupTable g = [&]() -> GroupTable {
    if (family == "cyclic") {
      only_keys(d, {"n"});
      return cyclic(get_uint(d, "n"));
    }
    if (family == "abelian") {
      only_keys(d, {"factors"});
      if (!d.contains("factors") || !d.at("factors").is_array())
        throw InputError("abelian descriptor needs a 'factors' array");
      std::vector<std::size_t> f;
      for (const auto& x : d.at("factors")) {
        if (!x.is_number_integer() || x.get<long long>() < 1)
          throw InputError("abelian factors must be positive integers");
        f.push_back(x.get<std::size_t>());
      }
      return abelian(f);
    }
    if (family == "elementary") {
      only_keys(d, {"p", "k"});
      return elementary_abelian(get_uint(d, "p"), get_uint(d, "k"));
    }
    if (family == "dihedral") {
      only_keys(d, {"k", "order"});
      return dihedral(two_power_order(d));
    }
    if (family == "quaternion") {
      only_keys(d, {"k", "order"});
      return generalized_quaternion(two_power_order(d));
    }
    if (family == "semidihedral") {
      only_keys(d, {"k", "order"});
      return semidihedral(two_power_order(d));
    }
    if (family == "dicyclic") {
      only_keys(d, {"order"});
      return dicyclic(get_uint(d, "order"));
    }
    if (family == "metacyclic") {
      only_keys(d, {"M", "N", "r", "t"});
      return metacyclic(get_uint(d, "M"), get_uint(d, "N"), get_int(d, "r"), get_int(d, "t"),
                        "Meta(" + std::to_string(get_uint(d, "M")) + "," + std::to_string(get_uint(d, "N")) +
                            "," + std::to_string(get_int(d, "r")) + "," + std::to_string(get_int(d, "t")) + ")");
    }
    if (family == "king") {
      only_keys(d, {"p", "m", "n", "s", "c", "eps"});
      const long long eps = get_int(d, "eps");
      if (eps != 1 && eps != -1) throw InputError("king: eps must be 1 or -1");
      return king_metacyclic({get_uint(d, "p"), get_uint(d, "m"), get_uint(d, "n"), get_uint(d, "s"),
                              get_uint(d, "c"), static_cast<int>(eps)})
          .table;
    }
    if (family == "K2") {
      only_keys(d, {"p", "m", "n"});
      return minimal_nonabelian_k2(get_uint(d, "p"), get_uint(d, "m"), get_uint(d, "n"));
    }
    if (family == "K3") {
      only_keys(d, {"p", "m", "n"});
      return minimal_nonabelian_k3(get_uint(d, "p"), get_uint(d, "m"), get_uint(d, "n"));
    }
    if (family == "heisenberg") {
      only_keys(d, {"p"});
      return heisenberg(get_uint(d, "p"));
    }
    if (family == "symmetric") {
      only_keys(d, {"degree"});
      return symmetric(get_uint(d, "degree"));
    }
    if (family == "alternating") {
      only_keys(d, {"degree"});
      return alternating(get_uint(d, "degree"));
    }
    if (family == "permutation") {
      only_keys(d, {"degree", "generators"});
      const unsigned degree = get_uint(d, "degree");
      if (!d.contains("generators") || !d.at("generators").is_array())
        throw InputError("permutation descriptor needs 'generators'");
      std::vector<std::vector<unsigned>> gens;
      for (const auto& g : d.at("generators")) {
        if (!g.is_array()) throw InputError("permutation generators must be arrays");
        std::vector<unsigned> perm;
        for (const auto& v : g) {
          if (!v.is_number_integer() || v.get<long long>() < 0)
            throw InputError("permutation entries must be non-negative integers");
          perm.push_back(v.get<unsigned>());
        }
        gens.push_back(std::move(perm));
      }
      return permutation_group(degree, gens, "Perm" + std::to_string(degree));
    }
    if (family == "maxclass_abelian") {
      only_keys(d, {"p", "n"});
      return maxclass_abelian_p1(get_uint(d, "p"), get_uint(d, "n"));
    }
    if (family == "catalog") {
      only_keys(d, {"p", "n", "index"});
      const auto cat = maxclass_catalog(get_uint(d, "p"), get_uint(d, "n"));
      const unsigned idx = get_uint(d, "index");
      if (idx >= cat.size()) throw InputError("catalog index out of range");
      return cat[idx].table;
    }
    if (family == "pc") {
      return from_pc_presentation(pc_from_json(d));
    }
    if (family == "direct") {
      only_keys(d, {"factors"});
      if (!d.contains("factors") || !d.at("factors").is_array() || d.at("factors").empty())
        throw InputError("direct descriptor needs a non-empty 'factors' array");
      GroupTable acc;
      std::string name;
      for (const auto& f : d.at("factors")) {
        auto part = build_group(f);
        name += (name.empty() ? "" : "x") + part.name();
        acc = acc.order() == 0 ? part : direct_product(acc, part);
      }
      return acc.renamed(name);
    }
    if (family == "semidirect") {
      only_keys(d, {"normal", "acting", "action"});
      if (!d.contains("normal") || !d.contains("acting") || !d.contains("action"))
        throw InputError("semidirect descriptor needs 'normal', 'acting' and 'action'");
      const auto n = build_group(d.at("normal"));
      const auto h = build_group(d.at("acting"));
      std::vector<std::vector<Elem>> action;
      for (const auto& perm : d.at("action")) {
        std::vector<Elem> p;
        for (const auto& v : perm) {
          if (!v.is_number_integer() || v.get<long long>() < 0)
            throw InputError("semidirect action entries must be non-negative integers");
          p.push_back(v.get<Elem>());
        }
        action.push_back(std::move(p));
      }
      return semidirect_product(n, h, action).renamed(n.name() + ":" + h.name());
    }
    if (family == "table") {
      only_keys(d, {"rows"});
      if (!d.contains("rows") || !d.at("rows").is_array()) throw InputError("table descriptor needs 'rows'");
      const auto& rows = d.at("rows");
      const std::size_t n = rows.size();
      std::vector<Elem> t;
      t.reserve(n * n);
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw InputError("table rows must have length n");
        for (const auto& v : row) {
          if (!v.is_number_integer() || v.get<long long>() < 0)
            throw InputError("table entries must be non-negative integers");
          t.push_back(v.get<Elem>());
        }
      }
      return GroupTable::from_untrusted(n, std::move(t), "table");
    }
    throw InputError("unknown group family '" + family + "'");
  }();
  if (d.contains("name")) {
    if (!d.at("name").is_string()) throw InputError("descriptor 'name' must be a string");
    g = g.renamed(d.at("name").get<std::string>());
  }
  return g;
}

std::string verdict_string(bool in_A) { return in_A ? "in-A" : "not-in-A"; }

Json to_json(const Witness& w) {
  return {{"subgroup", subgroup_elements(w.subgroup)}, {"element", w.element}};
}

Json to_json(const MembershipReport& r) {
  return {{"group", r.group},
          {"order", r.order},
          {"verdict", verdict_string(r.in_A)},
          {"method", to_string(r.method)},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"stats", {{"examined", r.examined}, {"micros", r.micros}}}};
}

Json to_json(const PGroupProfile& p) {
  Json series = Json::array();
  for (const auto& s : p.p_series) series.push_back(s.order());
  return {{"p", p.p},
          {"n", p.n},
          {"class", p.nilpotency_class ? Json(*p.nilpotency_class) : Json(nullptr)},
          {"maximal_class", p.maximal_class},
          {"p_series_orders", series},
          {"exponent", p.exponent},
          {"abelian", p.abelian}};
}

}  // namespace selfcent
