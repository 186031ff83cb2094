#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace permutable {

using Element = std::uint32_t;

/// Fixed-universe bitset over the element indices 0..n-1 of a group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t intersection_size(const ElementSet& other) const noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return total;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& other) const {
    ElementSet out(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }

  ElementSet operator|(const ElementSet& other) const {
    ElementSet out(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
    return out;
  }

  /// Members in increasing index order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        f(static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Lexicographic comparison of the sorted member lists.
  friend bool lexicographic_less(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const auto diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      const auto bit = diff & (~diff + 1);
      // The lowest differing element x belongs to exactly one side. The side
      // holding x is smaller unless the other side has run out of elements.
      const bool in_a = (a.words_[i] & bit) != 0;
      const auto& other = in_a ? b : a;
      bool other_has_more = (other.words_[i] & ~((bit << 1) - 1)) != 0;
      for (std::size_t j = i + 1; !other_has_more && j < other.words_.size(); ++j)
        other_has_more = other.words_[j] != 0;
      return in_a ? other_has_more : !other_has_more;
    }
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace permutable
