#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "islide/errors.hpp"

namespace islide {

using Vertex = int;

// A subset of {0, ..., universe-1}, stored as a dense bitset.
//
// Sets taken from different universes never compare equal; binary set
// operations require matching universes. Ordering is lexicographic on the
// ascending member lists, which is the order used for i-set catalogs.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) {
      if (v < 0 || static_cast<std::size_t>(v) >= universe)
        throw ArgumentError("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(static_cast<long long>(universe) - 1));
      insert(v);
    }
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
           (words_[v >> 6] >> (v & 63) & 1u);
  }
  void insert(Vertex v) {
    assert(v >= 0 && static_cast<std::size_t>(v) < universe_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    assert(v >= 0 && static_cast<std::size_t>(v) < universe_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  std::optional<Vertex> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (auto w = words_[i]; w; w &= w - 1)
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Same members in a larger (or equal) universe; members >= universe are dropped
  // when shrinking.
  VertexSet resized(std::size_t universe) const {
    VertexSet s(universe);
    for (std::size_t i = 0; i < std::min(words_.size(), s.words_.size()); ++i)
      s.words_[i] = words_[i];
    s.trim();
    return s;
  }

  // Members shifted up by `offset` inside a universe of size `universe`.
  VertexSet shifted(Vertex offset, std::size_t universe) const {
    VertexSet s(universe);
    for_each([&](Vertex v) { s.insert(v + offset); });
    return s;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    if (auto c = std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(),
                                                        mb.end());
        c != 0)
      return c;
    return a.universe_ <=> b.universe_;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace islide
