#include "selfcent/membership.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_map>

#include "selfcent/errors.hpp"

namespace selfcent {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

MembershipReport start_report(const GroupTable& g, Method m) {
  MembershipReport r;
  r.group = g.name();
  r.order = g.order();
  r.method = m;
  return r;
}

// Least element of `a` outside `b`, if any.
std::optional<Elem> first_outside(const ElementSet& a, const ElementSet& b) {
  ElementSet d = a;
  d.subtract(b);
  if (d.empty()) return std::nullopt;
  return static_cast<Elem>(d.first());
}

std::vector<ElementSet> element_centralizers(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<ElementSet> c(n, ElementSet(n));
  for (Elem x = 0; x < n; ++x) {
    c[x].set(x);
    for (Elem y = x + 1; y < n; ++y)
      if (g.commute(x, y)) {
        c[x].set(y);
        c[y].set(x);
      }
  }
  return c;
}

// Breadth-first closure of <x, y> under right multiplication that stops as
// soon as every element of `target` has been reached.
bool closure_reaches(const GroupTable& g, Elem x, Elem y, const ElementSet& target,
                     std::vector<Elem>& queue) {
  std::size_t missing = target.count();
  ElementSet seen(g.order());
  queue.clear();
  queue.push_back(0);
  seen.set(0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (Elem s : {x, y}) {
      const Elem v = g.mul(queue[q], s);
      if (!seen.insert(v)) continue;
      queue.push_back(v);
      if (target.test(v) && --missing == 0) return true;
    }
  }
  return false;
}

class Recursion {
 public:
  Recursion(const GroupTable& top, std::size_t cap) : top_(top), cap_(cap) {}

  // Witness in top-level indices as (elements of H, z).
  using Found = std::optional<std::pair<std::vector<Elem>, Elem>>;

  Found check(const GroupTable& t, const std::vector<Elem>& emb) {
    ElementSet key(top_.order());
    for (Elem e : emb) key.set(e);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++visited_;
    Found out = compute(t, emb);
    memo_.emplace(std::move(key), out);
    return out;
  }

  std::size_t visited() const noexcept { return visited_; }

 private:
  Found compute(const GroupTable& t, const std::vector<Elem>& emb) {
    if (is_abelian(t)) return std::nullopt;
    const auto maxes = maximal_subgroups(t, cap_);
    for (const auto& m : maxes) {
      auto sub = restrict_to(t, m, "M");
      std::vector<Elem> emb2(sub.embedding.size());
      for (std::size_t i = 0; i < emb2.size(); ++i) emb2[i] = emb[sub.embedding[i]];
      if (auto f = check(sub.table, emb2)) return f;
    }
    const auto z = center(t);
    const auto phi = frattini(t);
    const auto bad = first_outside(z.bits(), phi.bits());
    if (!bad) return std::nullopt;
    // z lies outside some maximal M; M is non-abelian, else G = <M, z> would be abelian.
    for (const auto& m : maxes) {
      if (m.contains(*bad)) continue;
      std::vector<Elem> h;
      m.bits().for_each([&](Elem x) { h.push_back(emb[x]); });
      return std::make_pair(std::move(h), emb[*bad]);
    }
    throw std::logic_error("recursive membership: no maximal subgroup avoids a non-Frattini element");
  }

  const GroupTable& top_;
  std::size_t cap_;
  std::unordered_map<ElementSet, Found, ElementSetHash> memo_;
  std::size_t visited_ = 0;
};

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Bruteforce: return "bruteforce";
    case Method::Pairs: return "pairs";
    case Method::Minimal: return "minimal";
    case Method::Recursive: return "recursive";
  }
  return "?";
}

Method method_from_string(const std::string& s) {
  for (Method m : kAllMethods)
    if (to_string(m) == s) return m;
  throw InputError("unknown membership method '" + s + "'");
}

bool witness_is_valid(const GroupTable& g, const Witness& w) {
  const std::size_t n = g.order();
  if (w.subgroup.bits().universe() != n || w.element >= n) return false;
  if (w.subgroup.contains(w.element)) return false;
  const auto h = w.subgroup.elements();
  for (Elem x : h)
    for (Elem y : h)
      if (!w.subgroup.contains(g.mul(x, y))) return false;
  bool nonabelian = false;
  for (Elem x : h) {
    if (g.mul(x, w.element) != g.mul(w.element, x)) return false;
    for (Elem y : h)
      if (g.mul(x, y) != g.mul(y, x)) nonabelian = true;
  }
  return nonabelian;
}

MembershipReport is_A_bruteforce(const GroupTable& g, std::size_t cap) {
  const auto t0 = Clock::now();
  auto r = start_report(g, Method::Bruteforce);
  const auto inv = all_subgroups(g, cap);
  for (const auto& h : inv.subgroups) {
    ++r.examined;
    if (is_abelian(g, h)) continue;
    const auto c = centralizer(g, h);
    if (auto z = first_outside(c.bits(), h.bits())) {
      r.in_A = false;
      r.witness = Witness{h, *z};
      break;
    }
  }
  r.micros = micros_since(t0);
  return r;
}

MembershipReport is_A_pairs(const GroupTable& g, std::size_t cap) {
  const auto t0 = Clock::now();
  auto r = start_report(g, Method::Pairs);
  if (g.order() > cap)
    throw CapabilityError("pair scan of order-" + std::to_string(g.order()) + " group", cap);
  const std::size_t n = g.order();
  const auto reps = cyclic_representatives(g);
  const auto cent = element_centralizers(g);
  std::vector<ElementSet> cyc;
  cyc.reserve(reps.size());
  for (Elem x : reps) {
    ElementSet s(n);
    s.set(0);
    for (Elem y = x; y != 0; y = g.mul(y, x)) s.set(y);
    cyc.push_back(std::move(s));
  }
  std::vector<Elem> scratch;
  scratch.reserve(n);

  // In a 2-generator p-group, x and y independent modulo Φ generate G, whose
  // centralizer Z(G) lies inside it. Cosets of Φ are labelled by their least
  // element; power_labels[i] holds the labels of the powers of reps[i].
  std::vector<Elem> coset(n, 0);
  std::vector<std::vector<Elem>> power_labels;
  bool rank_two = false;
  if (const auto pk = prime_power(n)) {
    const auto phi = frattini(g);
    if (n / phi.order() == std::size_t{pk->first} * pk->first) {
      rank_two = true;
      ElementSet done(n);
      const auto fe = phi.elements();
      for (Elem x = 0; x < n; ++x) {
        if (done.test(x)) continue;
        for (Elem f : fe) {
          coset[g.mul(x, f)] = x;
          done.set(g.mul(x, f));
        }
      }
      for (Elem x : reps) {
        std::vector<Elem> labels{0};
        for (Elem y = x; y != 0; y = g.mul(y, x))
          if (std::find(labels.begin(), labels.end(), coset[y]) == labels.end())
            labels.push_back(coset[y]);
        power_labels.push_back(std::move(labels));
      }
    }
  }
  for (std::size_t i = 0; i < reps.size() && r.in_A; ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const Elem x = reps[i], y = reps[j];
      if (g.commute(x, y)) continue;
      ++r.examined;
      if (rank_two && power_labels[i].size() > 1 &&
          std::find(power_labels[i].begin(), power_labels[i].end(), coset[y]) ==
              power_labels[i].end())
        continue;
      ElementSet c = cent[x];
      c &= cent[y];
      // Cheap acceptance: C(<x,y>) already inside <x> ∪ <y>.
      ElementSet rest = c;
      rest.subtract(cyc[i]);
      rest.subtract(cyc[j]);
      if (rest.empty()) continue;
      if (closure_reaches(g, x, y, rest, scratch)) continue;
      const Elem pair[2] = {x, y};
      auto h = generated_subgroup(g, pair);
      if (auto z = first_outside(c, h.bits())) {
        if (is_abelian(g, h)) throw std::logic_error("pairs: non-commuting pair generated an abelian group");
        r.in_A = false;
        r.witness = Witness{std::move(h), *z};
        break;
      }
    }
  }
  r.micros = micros_since(t0);
  return r;
}

MembershipReport is_A_minimal(const GroupTable& g, std::size_t cap) {
  const auto t0 = Clock::now();
  auto r = start_report(g, Method::Minimal);
  for (const auto& k : minimal_nonabelian_subgroups(g, cap)) {
    ++r.examined;
    const auto c = centralizer(g, k);
    if (auto z = first_outside(c.bits(), k.bits())) {
      r.in_A = false;
      r.witness = Witness{k, *z};
      break;
    }
  }
  r.micros = micros_since(t0);
  return r;
}

MembershipReport is_A_recursive(const GroupTable& g, std::size_t cap) {
  const auto t0 = Clock::now();
  auto r = start_report(g, Method::Recursive);
  if (!prime_power(g.order()) && g.order() > cap)
    throw CapabilityError("maximal subgroups of order-" + std::to_string(g.order()) + " group", cap);
  std::vector<Elem> emb(g.order());
  for (Elem i = 0; i < g.order(); ++i) emb[i] = i;
  Recursion rec(g, cap);
  if (auto f = rec.check(g, emb)) {
    ElementSet bits(g.order());
    for (Elem e : f->first) bits.set(e);
    r.in_A = false;
    r.witness = Witness{subgroup_from_closed_set(g, bits), f->second};
  }
  r.examined = rec.visited();
  r.micros = micros_since(t0);
  return r;
}

MembershipReport run_method(const GroupTable& g, Method m) {
  switch (m) {
    case Method::Bruteforce: return is_A_bruteforce(g);
    case Method::Pairs: return is_A_pairs(g);
    case Method::Minimal: return is_A_minimal(g);
    case Method::Recursive: return is_A_recursive(g);
  }
  throw InputError("unknown method");
}

MembershipReport is_A(const GroupTable& g) {
  if (prime_power(g.order())) return is_A_recursive(g);
  return is_A_pairs(g, std::max(kDefaultPairCap, max_order()));
}

CrossCheck cross_check(const GroupTable& g) {
  CrossCheck out;
  for (Method m : kAllMethods) {
    try {
      out.reports.push_back(run_method(g, m));
    } catch (const CapabilityError&) {
      out.skipped.push_back(m);
    }
  }
  if (out.reports.empty())
    throw CapabilityError("cross_check: no method fits order " + std::to_string(g.order()),
                          kDefaultPairCap);
  bool agree = true, witnesses_ok = true;
  for (const auto& r : out.reports) {
    if (r.in_A != out.reports.front().in_A) agree = false;
    if (!r.in_A && (!r.witness || !witness_is_valid(g, *r.witness))) witnesses_ok = false;
  }
  if (!agree || !witnesses_ok) {
    std::ostringstream msg;
    msg << "membership methods " << (agree ? "agree but a witness is invalid" : "disagree")
        << " on " << g.name() << "\n";
    for (const auto& r : out.reports) {
      msg << "  " << to_string(r.method) << ": " << (r.in_A ? "in" : "not-in");
      if (r.witness) {
        msg << " H=[";
        bool first = true;
        r.witness->subgroup.bits().for_each([&](Elem x) {
          msg << (first ? "" : ",") << x;
          first = false;
        });
        msg << "] z=" << r.witness->element;
      }
      msg << "\n";
    }
    msg << "table:\n";
    write_tbl(msg, g);
    throw MethodDisagreement(msg.str());
  }
  out.in_A = out.reports.front().in_A;
  return out;
}

}  // namespace selfcent
