#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace selfcent {

using Elem = std::uint32_t;

/// Fixed-size bit-vector over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return size_; }

  bool test(Elem x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(Elem x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(Elem x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  /// Sets x and reports whether it was newly inserted.
  bool insert(Elem x) noexcept {
    auto& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes every element of o.
  ElementSet& subtract(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  bool operator==(const ElementSet& o) const noexcept {
    return size_ == o.size_ && words_ == o.words_;
  }

  /// Lexicographic comparison on the sorted element lists.
  bool lex_less(const ElementSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t a = words_[i], b = o.words_[i];
      if (a == b) continue;
      const std::uint64_t diff = a ^ b;
      const std::uint64_t low = diff & (~diff + 1);
      // The set holding the lowest differing element comes first.
      return (a & low) != 0;
    }
    return false;
  }

  /// Least element not less than `from`, or universe() if none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) {
        const std::size_t r = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return r < size_ ? r : size_;
      }
      if (++wi >= words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Elem>((wi << 6) + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace selfcent
