#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qmlab {

using CellIndex = std::size_t;

// Fixed-universe bit set of cell indices.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static CellSet full(std::size_t universe) {
    CellSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static CellSet of(std::size_t universe, const std::vector<CellIndex>& cells) {
    CellSet s(universe);
    for (auto c : cells) s.insert(c);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(CellIndex c) const {
    return c < universe_ && ((words_[c / 64] >> (c % 64)) & 1U) != 0;
  }
  void insert(CellIndex c) { words_[c / 64] |= std::uint64_t{1} << (c % 64); }
  void erase(CellIndex c) { words_[c / 64] &= ~(std::uint64_t{1} << (c % 64)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool is_full() const { return count() == universe_; }

  CellSet complement() const {
    CellSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  CellSet& operator|=(const CellSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  CellSet& operator&=(const CellSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  CellSet& operator-=(const CellSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
  friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
  friend CellSet operator-(CellSet a, const CellSet& b) { return a -= b; }

  bool is_subset_of(const CellSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const CellSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(i * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<CellIndex> indices() const {
    std::vector<CellIndex> out;
    out.reserve(count());
    for_each([&](CellIndex c) { out.push_back(c); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 1099511628211ULL ^ static_cast<std::size_t>(w);
    return h;
  }

  bool operator==(const CellSet&) const = default;

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qmlab
