#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selfcent/element_set.hpp"
#include "selfcent/errors.hpp"

namespace selfcent {

/// Hard ceiling on group order; the runtime default may be lowered through
/// the SELFCENT_MAX_ORDER environment variable or set_max_order().
inline constexpr std::size_t kHardMaxOrder = 4096;

std::size_t max_order();
void set_max_order(std::size_t cap);

/// A finite group as a dense multiplication table. Index 0 is the identity.
/// Immutable; copies share the underlying table.
class GroupTable {
 public:
  GroupTable() = default;

  /// Builds from a table of unknown provenance and checks every group axiom
  /// (closure, identity at 0, Latin-square rows, inverses, associativity).
  /// Throws AxiomError on failure.
  static GroupTable from_untrusted(std::size_t n, std::vector<Elem> table, std::string name);

  /// Builds from a table produced by a verified construction. Only the
  /// inverse map is derived; no axiom checks beyond shape.
  static GroupTable from_trusted(std::size_t n, std::vector<Elem> table, std::string name);

  std::size_t order() const noexcept { return data_ ? data_->n : 0; }
  const std::string& name() const noexcept { return data_->name; }
  GroupTable renamed(std::string name) const;

  Elem mul(Elem x, Elem y) const noexcept { return data_->table[x * data_->n + y]; }
  Elem inv(Elem x) const noexcept { return data_->inverse[x]; }
  const Elem* row(Elem x) const noexcept { return data_->table.data() + x * data_->n; }
  const std::vector<Elem>& raw_table() const noexcept { return data_->table; }

  bool commute(Elem x, Elem y) const noexcept { return mul(x, y) == mul(y, x); }

  bool same_table(const GroupTable& o) const noexcept {
    return order() == o.order() && raw_table() == o.raw_table();
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::string name;
  };
  explicit GroupTable(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// Decides associativity of an n-element table whose rows are permutations
/// (Light's test over a generating set). Returns a failing triple if any.
std::optional<std::array<Elem, 3>> find_nonassociative_triple(std::size_t n,
                                                              const std::vector<Elem>& table);

/// Cayley-table text format: first line n, then n rows of n indices.
GroupTable read_tbl(std::istream& in, const std::string& name);
GroupTable read_tbl_file(const std::string& path);
void write_tbl(std::ostream& out, const GroupTable& g);

}  // namespace selfcent
