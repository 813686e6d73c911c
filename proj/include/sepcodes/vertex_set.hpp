#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sepcodes/errors.hpp"

namespace sepcodes {

using Vertex = std::size_t;

// Set of vertex ids drawn from a fixed universe {0, ..., universe-1}, stored
// as a packed bitset. Binary operations require equal universes.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_range(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
  }

  void insert(Vertex v) {
    check(v);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }

  void erase(Vertex v) {
    check(v);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // |this \ o| without materialising the difference.
  std::size_t count_without(const VertexSet& o) const {
    same_universe(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
    return c;
  }

  // Whether (this \ removed) meets o.
  bool intersects_without(const VertexSet& o, const VertexSet& removed) const {
    same_universe(o);
    same_universe(removed);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~removed.words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) { return apply(o, [](Word a, Word b) { return a | b; }); }
  VertexSet& operator&=(const VertexSet& o) { return apply(o, [](Word a, Word b) { return a & b; }); }
  VertexSet& operator^=(const VertexSet& o) { return apply(o, [](Word a, Word b) { return a ^ b; }); }
  VertexSet& operator-=(const VertexSet& o) { return apply(o, [](Word a, Word b) { return a & ~b; }); }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Smallest member, or universe() when empty.
  Vertex first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return universe_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const Word> words() const noexcept { return words_; }

  std::string to_string() const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](Vertex v) {
      if (!first_member) s += ",";
      s += std::to_string(v);
      first_member = false;
    });
    return s + "}";
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_)
      throw InvalidInput("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
  }

  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_)
      throw UniverseMismatch("vertex sets over universes " + std::to_string(universe_) +
                             " and " + std::to_string(o.universe_));
  }

  template <typename Op>
  VertexSet& apply(const VertexSet& o, Op op) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], o.words_[i]);
    return *this;
  }

  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

// (a \ b) ∪ (b \ a)
inline VertexSet sym_diff(const VertexSet& a, const VertexSet& b) { return a ^ b; }

// Lexicographic order on the ascending member lists.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto av = a.to_vector();
  const auto bv = b.to_vector();
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(s.universe());
    for (auto w : s.words()) h ^= std::hash<VertexSet::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace sepcodes
