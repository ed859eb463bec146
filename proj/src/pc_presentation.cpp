#include "selfcent/pc_presentation.hpp"

#include <string>

#include "selfcent/errors.hpp"

namespace selfcent {

namespace {

class Collector {
 public:
  explicit Collector(const PcPresentation& pres) : pres_(pres), r_(pres.rank()) {
    conj_.resize(r_ * r_);
    for (const auto& [key, word] : pres.commutators) conj_[key.first * r_ + key.second] = word;
  }

  // e <- e * g_k
  void mul_gen(std::vector<unsigned>& e, unsigned k) {
    if (++steps_ > kStepBudget)
      throw InconsistentPresentation("collection exceeded its step budget", {}, false);
    std::vector<unsigned> tail(e.begin() + k + 1, e.end());
    std::fill(e.begin() + k + 1, e.end(), 0u);
    if (++e[k] == pres_.relative_orders[k]) {
      e[k] = 0;
      mul_word(e, pres_.powers[k]);
    }
    // tail^{g_k} = prod_j (g_j [g_j, g_k])^{tail_j}
    for (unsigned j = k + 1; j < r_; ++j) {
      for (unsigned t = 0; t < tail[j - k - 1]; ++t) {
        mul_gen(e, j);
        mul_word(e, conj_[j * r_ + k]);
      }
    }
  }

  void mul_word(std::vector<unsigned>& e, const PcWord& w) {
    for (const auto& [gen, exp] : w)
      for (unsigned t = 0; t < exp; ++t) mul_gen(e, gen);
  }

 private:
  static constexpr std::size_t kStepBudget = 2'000'000'000;
  const PcPresentation& pres_;
  std::size_t r_;
  std::vector<PcWord> conj_;
  std::size_t steps_ = 0;
};

bool is_power_of(unsigned v, unsigned p) {
  if (v < p) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

// Overlap tests on generators: (g_k g_j) g_i = g_k (g_j g_i) for k > j > i,
// and the three variants where one factor is a relative power. A failure is
// reported with 1-based generator indices; repeated indices mark the power
// variants, e.g. (j, j, i) compares (g_j^r) g_i with g_j^(r-1) (g_j g_i).
void check_consistency(const PcPresentation& pres, const std::vector<Elem>& table,
                       const std::vector<std::size_t>& stride) {
  const std::size_t n = pres.order();
  const unsigned r = static_cast<unsigned>(pres.rank());
  auto mul = [&](Elem x, Elem y) { return table[x * n + y]; };
  auto gen = [&](unsigned i) { return static_cast<Elem>(stride[i]); };
  auto pow = [&](Elem x, unsigned e) {
    Elem acc = 0;
    while (e--) acc = mul(acc, x);
    return acc;
  };
  auto fail = [&](unsigned a, unsigned b, unsigned c, const std::string& what) {
    throw InconsistentPresentation("inconsistent pc presentation: " + what + " differs for generators (g" +
                                       std::to_string(a + 1) + ", g" + std::to_string(b + 1) + ", g" +
                                       std::to_string(c + 1) + ")",
                                   {a + 1, b + 1, c + 1}, true);
  };
  for (unsigned i = 0; i < r; ++i) {
    const Elem gi = gen(i);
    const unsigned ri = pres.relative_orders[i];
    if (mul(pow(gi, ri), gi) != mul(gi, pow(gi, ri))) fail(i, i, i, "(g_i^r) g_i vs g_i (g_i^r)");
    for (unsigned j = i + 1; j < r; ++j) {
      const Elem gj = gen(j);
      const unsigned rj = pres.relative_orders[j];
      if (mul(pow(gj, rj), gi) != mul(pow(gj, rj - 1), mul(gj, gi)))
        fail(j, j, i, "(g_j^r) g_i vs g_j^(r-1) (g_j g_i)");
      if (mul(mul(gj, pow(gi, ri - 1)), gi) != mul(gj, pow(gi, ri)))
        fail(j, i, i, "(g_j g_i^(r-1)) g_i vs g_j (g_i^r)");
      for (unsigned k = j + 1; k < r; ++k) {
        const Elem gk = gen(k);
        if (mul(mul(gk, gj), gi) != mul(gk, mul(gj, gi))) fail(k, j, i, "(g_k g_j) g_i vs g_k (g_j g_i)");
      }
    }
  }
}

}  // namespace

std::size_t PcPresentation::order() const {
  std::size_t n = 1;
  for (auto ro : relative_orders) n *= ro;
  return n;
}

void validate_pc_presentation(const PcPresentation& pres) {
  const std::size_t r = pres.rank();
  if (pres.p < 2) throw InputError("pc presentation: prime must be at least 2");
  for (unsigned d = 2; d * d <= pres.p; ++d)
    if (pres.p % d == 0) throw InputError("pc presentation: " + std::to_string(pres.p) + " is not prime");
  if (pres.powers.size() != r)
    throw InputError("pc presentation: need one power relation per generator");
  for (std::size_t i = 0; i < r; ++i) {
    if (!is_power_of(pres.relative_orders[i], pres.p))
      throw InputError("pc presentation: relative order of g" + std::to_string(i + 1) +
                       " is not a power of p");
  }
  auto check_word = [&](const PcWord& w, std::size_t lead, const std::string& what) {
    for (const auto& [gen, exp] : w) {
      if (gen >= r) throw InputError("pc presentation: " + what + " uses unknown generator");
      if (gen <= lead)
        throw InputError("pc presentation: " + what + " must only use generators after g" +
                         std::to_string(lead + 1));
      (void)exp;
    }
  };
  for (std::size_t i = 0; i < r; ++i) check_word(pres.powers[i], i, "power of g" + std::to_string(i + 1));
  for (const auto& [key, word] : pres.commutators) {
    const auto [i, j] = key;
    if (i >= r || j >= i)
      throw InputError("pc presentation: commutator keys must be (i, j) with r > i > j");
    check_word(word, i, "[g" + std::to_string(i + 1) + ", g" + std::to_string(j + 1) + "]");
  }
  if (pres.order() > max_order())
    throw CapabilityError("pc presentation order " + std::to_string(pres.order()) +
                              " exceeds maximum",
                          max_order());
}

Elem pc_element(const PcPresentation& pres, const std::vector<unsigned>& exponents) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < pres.rank(); ++i)
    idx = idx * pres.relative_orders[i] + (exponents[i] % pres.relative_orders[i]);
  return static_cast<Elem>(idx);
}

GroupTable from_pc_presentation(const PcPresentation& pres) {
  validate_pc_presentation(pres);
  const std::size_t r = pres.rank();
  const std::size_t n = pres.order();
  if (r == 0) return GroupTable::from_trusted(1, {0}, pres.name);

  std::vector<std::size_t> stride(r, 1);
  for (std::size_t i = r - 1; i-- > 0;) stride[i] = stride[i + 1] * pres.relative_orders[i + 1];

  auto decode = [&](std::size_t idx) {
    std::vector<unsigned> e(r);
    for (std::size_t i = 0; i < r; ++i) {
      e[i] = static_cast<unsigned>(idx / stride[i]);
      idx %= stride[i];
    }
    return e;
  };

  // Right multiplication by each generator, via collection.
  Collector collector(pres);
  std::vector<Elem> right(n * r);
  for (std::size_t x = 0; x < n; ++x) {
    for (unsigned k = 0; k < r; ++k) {
      auto e = decode(x);
      collector.mul_gen(e, k);
      right[x * r + k] = pc_element(pres, e);
    }
  }

  // y = y' g_l where l is y's last non-zero exponent, so row x fills left to right.
  std::vector<unsigned> last(n, 0);
  std::vector<std::size_t> prev(n, 0);
  for (std::size_t y = 1; y < n; ++y) {
    std::size_t l = r - 1;
    while ((y / stride[l]) % pres.relative_orders[l] == 0) --l;
    last[y] = static_cast<unsigned>(l);
    prev[y] = y - stride[l];
  }
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem* row = table.data() + x * n;
    row[0] = static_cast<Elem>(x);
    for (std::size_t y = 1; y < n; ++y) row[y] = right[row[prev[y]] * r + last[y]];
  }

  check_consistency(pres, table, stride);
  try {
    return GroupTable::from_untrusted(n, std::move(table), pres.name);
  } catch (const AxiomError& err) {
    throw InconsistentPresentation(std::string("inconsistent pc presentation: ") + err.what(),
                                   err.triple(), err.has_triple());
  }
}

}  // namespace selfcent
