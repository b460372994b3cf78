#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sctop/error.hpp"

namespace sctop {

/// A subset of the carrier {0, ..., universe-1}, stored as a dense bit vector.
///
/// Equality is extensional. The total order is lexicographic on the membership
/// word b_0 b_1 ... b_{n-1} (index 0 is the most significant letter, absent
/// sorts before present); this is the canonical order used by SubsetFamily.
class Subset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  static Subset of(std::size_t universe, std::initializer_list<std::size_t> elems) {
    Subset s(universe);
    for (auto e : elems) s.insert(e);
    return s;
  }

  static Subset of(std::size_t universe, std::span<const std::size_t> elems) {
    Subset s(universe);
    for (auto e : elems) s.insert(e);
    return s;
  }

  /// Bit i of `mask` becomes membership of index i.
  static Subset from_mask(std::size_t universe, std::uint64_t mask) {
    Subset s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  static Subset singleton(std::size_t universe, std::size_t i) {
    Subset s(universe);
    s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const {
    check_index(i);
    return (words_[i / kBits] >> (i % kBits)) & 1U;
  }
  bool operator[](std::size_t i) const { return contains(i); }

  void insert(std::size_t i) {
    check_index(i);
    words_[i / kBits] |= Word{1} << (i % kBits);
  }
  void erase(std::size_t i) {
    check_index(i);
    words_[i / kBits] &= ~(Word{1} << (i % kBits));
  }
  void set(std::size_t i, bool v) { v ? insert(i) : erase(i); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  bool is_full() const noexcept { return count() == universe_; }

  bool is_subset_of(const Subset& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Subset& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Subset& operator|=(const Subset& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// Set difference.
  Subset& operator-=(const Subset& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  /// Complement relative to the carrier.
  Subset operator~() const {
    Subset s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  std::optional<std::size_t> first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * kBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return std::nullopt;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        fn(k * kBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Membership word, e.g. "0110" for {1,2} over a 4-point carrier.
  std::string word() const {
    std::string s(universe_, '0');
    for_each([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  std::uint64_t to_mask() const {
    if (universe_ > kBits) throw Error(ErrorKind::IndexOutOfRange, "subset too large for a 64-bit mask");
    return words_.empty() ? 0 : words_[0];
  }

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      Word diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        Word low = diff & (~diff + 1);
        return (a.words_[k] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= universe_)
      throw Error(ErrorKind::IndexOutOfRange,
                  "index " + std::to_string(i) + " outside carrier of size " + std::to_string(universe_));
  }
  void check_same(const Subset& o) const {
    if (o.universe_ != universe_)
      throw Error(ErrorKind::SpaceMismatch, "subsets over carriers of size " + std::to_string(universe_) +
                                                " and " + std::to_string(o.universe_));
  }
  void trim() {
    if (universe_ % kBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

/// Image of a subset under an index table (table[i] is the image of i).
inline Subset image(const Subset& s, std::span<const std::size_t> table, std::size_t target_universe) {
  Subset out(target_universe);
  s.for_each([&](std::size_t i) { out.insert(table[i]); });
  return out;
}

/// Preimage of a subset under an index table.
inline Subset preimage(const Subset& s, std::span<const std::size_t> table) {
  Subset out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (s.contains(table[i])) out.insert(i);
  return out;
}

/// A duplicate-free family of subsets over one carrier, kept in canonical
/// (lexicographic membership-word) order.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(std::size_t universe) : universe_(universe) {}
  SubsetFamily(std::size_t universe, std::vector<Subset> sets) : universe_(universe), sets_(std::move(sets)) {
    for (const auto& s : sets_)
      if (s.universe() != universe_)
        throw Error(ErrorKind::SpaceMismatch, "family member over a different carrier");
    normalize();
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }
  const Subset& operator[](std::size_t i) const { return sets_.at(i); }
  const std::vector<Subset>& sets() const noexcept { return sets_; }

  bool contains(const Subset& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

  /// Position of `s` in canonical order, if present.
  std::optional<std::size_t> index_of(const Subset& s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    if (it == sets_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - sets_.begin());
  }

  template <class Pred>
  SubsetFamily filter(Pred&& pred) const {
    SubsetFamily out(universe_);
    for (const auto& s : sets_)
      if (pred(s)) out.sets_.push_back(s);
    return out;
  }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  void normalize() {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  std::size_t universe_ = 0;
  std::vector<Subset> sets_;
};

/// Calls fn on every subset of {0..n-1}. Throws CapExceeded when n > cap.
template <class Fn>
void for_each_subset(std::size_t n, Fn&& fn, std::size_t cap = kDefaultCap) {
  check_cap(n, cap, "subset enumeration");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) fn(Subset::from_mask(n, m));
}

/// Calls fn on every subset of `base`. Throws CapExceeded when |base| > cap.
template <class Fn>
void for_each_subset_of(const Subset& base, Fn&& fn, std::size_t cap = kDefaultCap) {
  const auto idx = base.indices();
  check_cap(idx.size(), cap, "subset enumeration");
  const std::uint64_t total = std::uint64_t{1} << idx.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    Subset s(base.universe());
    for (std::size_t b = 0; b < idx.size(); ++b)
      if ((m >> b) & 1U) s.insert(idx[b]);
    fn(s);
  }
}

}  // namespace sctop
