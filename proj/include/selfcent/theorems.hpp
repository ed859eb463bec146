#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "selfcent/io.hpp"

namespace selfcent {

/// A corpus group together with the descriptor that rebuilds it.
struct CorpusMember {
  Json descriptor;
  GroupTable table;
};

/// Corpus families:
///   abelian     abelian p-groups (rank <= 3 above order 64) and a few mixed orders
///   maxclass    maxclass_catalog(p, n)
///   K2, K3      minimal non-abelian p-groups
///   king        the valid King parameter grid
///   nonp        small groups that are not of prime-power order
///   products    direct products with a non-abelian factor, mostly outside A
///   order16     fourteen groups of order 16
///   order81     groups of order 81
///   small       p-groups of order at most p^3
///   exponent    exponent-p groups
///   standard    abelian, maxclass, K2, K3, king, nonp, products, order16
struct CorpusSpec {
  std::vector<unsigned> primes{2, 3, 5};
  std::optional<std::size_t> max_order;  // theorem default when unset
  std::size_t min_order = 1;
  std::optional<unsigned> n;  // keep only orders p^n, p in primes
  std::vector<std::string> families;  // theorem default when empty

  Json to_json() const;
};

const std::vector<std::string>& corpus_family_names();

/// Members of one family, deterministic order. Groups above max_order are
/// never constructed.
std::vector<CorpusMember> corpus_family(const std::string& family, const std::vector<unsigned>& primes,
                                        std::size_t max_order);

/// Union of the families after the order filters, duplicates (by
/// descriptor) removed, first occurrence kept.
std::vector<CorpusMember> build_corpus(const CorpusSpec& spec);

struct DirectionReport {
  std::string name;
  bool required = true;
  std::size_t matched = 0;
  std::size_t failures = 0;
  std::string verdict;  // verified | refuted | vacuous
};

struct TheoremReport {
  std::string id;
  std::string statement;
  Json corpus;
  std::size_t tested = 0;
  std::string verdict;  // verified | refuted | vacuous
  std::vector<Json> counterexamples;
  std::vector<DirectionReport> directions;
  std::vector<Json> skipped;  // members a cap prevented from being checked
  bool incomplete = false;
  std::vector<Json> members;  // descriptors of every corpus member, in order
  std::int64_t millis = 0;

  Json to_json() const;
};

/// Registered theorem ids, in registry order.
std::vector<std::string> theorem_ids();
std::string theorem_statement(const std::string& id);
/// Default corpus families and order bound for a theorem.
CorpusSpec default_corpus(const std::string& id);

/// Throws InputError for an unknown id. `jobs` worker threads share the
/// corpus; results are merged in corpus order.
TheoremReport verify(const std::string& id, const CorpusSpec& spec, unsigned jobs = 1);

/// Re-runs a theorem over explicit descriptors (e.g. the members of a
/// serialized report).
TheoremReport verify_members(const std::string& id, const std::vector<Json>& descriptors,
                             unsigned jobs = 1);

/// One survey line: descriptor, name, order, profile (p-groups), membership.
Json survey_record(const CorpusMember& m);

}  // namespace selfcent
