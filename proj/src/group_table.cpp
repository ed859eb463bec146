#include "selfcent/group_table.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace selfcent {

namespace {

std::size_t initial_max_order() {
  if (const char* env = std::getenv("SELFCENT_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v >= 1 && v <= kHardMaxOrder) return static_cast<std::size_t>(v);
  }
  return kHardMaxOrder;
}

std::atomic<std::size_t>& max_order_slot() {
  static std::atomic<std::size_t> slot{initial_max_order()};
  return slot;
}

void check_shape(std::size_t n, const std::vector<Elem>& table) {
  if (n == 0) throw InputError("group order must be positive");
  if (n > max_order())
    throw CapabilityError("group order " + std::to_string(n) + " exceeds maximum supported order",
                          max_order());
  if (table.size() != n * n)
    throw InputError("table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(n * n));
}

std::vector<Elem> derive_inverses(std::size_t n, const std::vector<Elem>& table) {
  std::vector<Elem> inverse(n, static_cast<Elem>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* row = table.data() + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      if (row[y] == 0) {
        inverse[x] = static_cast<Elem>(y);
        break;
      }
    }
  }
  return inverse;
}

}  // namespace

std::size_t max_order() { return max_order_slot().load(); }

void set_max_order(std::size_t cap) {
  if (cap < 1 || cap > kHardMaxOrder)
    throw InputError("maximum order must lie in [1, " + std::to_string(kHardMaxOrder) + "]");
  max_order_slot().store(cap);
}

std::optional<std::array<Elem, 3>> find_nonassociative_triple(std::size_t n,
                                                              const std::vector<Elem>& table) {
  auto mul = [&](Elem x, Elem y) { return table[x * n + y]; };

  // Greedy generating set under right multiplication. The set of g with
  // (xg)y = x(gy) for all x, y is closed under the operation, so checking
  // a generating set decides associativity.
  std::vector<Elem> gens;
  ElementSet reached(n);
  std::vector<Elem> order;
  order.reserve(n);
  while (order.size() < n) {
    Elem fresh = 0;
    while (reached.test(fresh)) ++fresh;
    gens.push_back(fresh);
    const std::size_t old = order.size();
    if (reached.insert(fresh)) order.push_back(fresh);
    for (std::size_t i = 0; i < old; ++i) {
      const Elem y = mul(order[i], fresh);
      if (reached.insert(y)) order.push_back(y);
    }
    for (std::size_t i = old; i < order.size(); ++i) {
      for (Elem s : gens) {
        const Elem y = mul(order[i], s);
        if (reached.insert(y)) order.push_back(y);
      }
    }
  }

  for (Elem g : gens) {
    const Elem* grow = table.data() + static_cast<std::size_t>(g) * n;
    for (Elem x = 0; x < n; ++x) {
      const Elem xg = mul(x, g);
      const Elem* xgrow = table.data() + static_cast<std::size_t>(xg) * n;
      const Elem* xrow = table.data() + static_cast<std::size_t>(x) * n;
      for (Elem y = 0; y < n; ++y) {
        if (xgrow[y] != xrow[grow[y]]) return std::array<Elem, 3>{x, g, y};
      }
    }
  }
  return std::nullopt;
}

GroupTable GroupTable::from_untrusted(std::size_t n, std::vector<Elem> table, std::string name) {
  check_shape(n, table);
  for (Elem v : table)
    if (v >= n) throw AxiomError("table entry " + std::to_string(v) + " out of range");
  for (Elem y = 0; y < n; ++y) {
    if (table[y] != y || table[static_cast<std::size_t>(y) * n] != y)
      throw AxiomError("element 0 is not the identity (fails at " + std::to_string(y) + ")");
  }
  // Latin square: every row and column is a permutation.
  ElementSet seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    seen = ElementSet(n);
    for (std::size_t y = 0; y < n; ++y)
      if (!seen.insert(table[x * n + y]))
        throw AxiomError("row " + std::to_string(x) + " repeats an entry");
  }
  for (std::size_t y = 0; y < n; ++y) {
    seen = ElementSet(n);
    for (std::size_t x = 0; x < n; ++x)
      if (!seen.insert(table[x * n + y]))
        throw AxiomError("column " + std::to_string(y) + " repeats an entry");
  }
  auto inverse = derive_inverses(n, table);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[inverse[x] * n + x] == 0) continue;
    // x y = 1 and z x = 1 with z != y: (z x) y = y but z (x y) = z.
    Elem z = 0;
    while (table[z * n + x] != 0) ++z;
    const std::array<Elem, 3> triple{z, static_cast<Elem>(x), inverse[x]};
    throw AxiomError("element " + std::to_string(x) + " has no two-sided inverse, so (" + std::to_string(z) +
                         ", " + std::to_string(x) + ", " + std::to_string(inverse[x]) + ") is not associative",
                     triple);
  }
  if (auto bad = find_nonassociative_triple(n, table)) {
    const auto [a, b, c] = *bad;
    throw AxiomError("table is not associative at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ", " + std::to_string(c) + ")",
                     *bad);
  }
  auto d = std::make_shared<Data>();
  d->n = n;
  d->table = std::move(table);
  d->inverse = std::move(inverse);
  d->name = std::move(name);
  return GroupTable(std::move(d));
}

GroupTable GroupTable::from_trusted(std::size_t n, std::vector<Elem> table, std::string name) {
  check_shape(n, table);
  auto d = std::make_shared<Data>();
  d->n = n;
  d->inverse = derive_inverses(n, table);
  d->table = std::move(table);
  d->name = std::move(name);
  return GroupTable(std::move(d));
}

GroupTable GroupTable::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*data_);
  d->name = std::move(name);
  return GroupTable(std::move(d));
}

GroupTable read_tbl(std::istream& in, const std::string& name) {
  long long n = 0;
  if (!(in >> n) || n < 1) throw InputError("table file: missing or invalid order on line 1");
  if (static_cast<std::size_t>(n) > max_order())
    throw CapabilityError("table file order " + std::to_string(n) + " exceeds maximum", max_order());
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Elem> table;
  table.reserve(un * un);
  for (std::size_t i = 0; i < un * un; ++i) {
    long long v = 0;
    if (!(in >> v))
      throw InputError("table file: truncated after " + std::to_string(i) + " entries");
    if (v < 0 || v >= n) throw InputError("table file: entry " + std::to_string(v) + " out of range");
    table.push_back(static_cast<Elem>(v));
  }
  std::string extra;
  if (in >> extra) throw InputError("table file: trailing data after " + std::to_string(un * un) +
                                    " entries");
  return GroupTable::from_untrusted(un, std::move(table), name);
}

GroupTable read_tbl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table file " + path);
  auto stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.rfind(".tbl"); dot != std::string::npos && dot + 4 == stem.size())
    stem = stem.substr(0, dot);
  return read_tbl(in, stem);
}

void write_tbl(std::ostream& out, const GroupTable& g) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (Elem x = 0; x < n; ++x) {
    const Elem* r = g.row(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << r[y];
    }
    out << '\n';
  }
}

}  // namespace selfcent
