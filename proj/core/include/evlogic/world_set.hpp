#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace evlogic {

using World = std::size_t;

/// Hard capacity of a WorldSet. Representation models of three-world
/// inputs need 72 worlds, four-world inputs up to 256.
inline constexpr std::size_t kMaxWorlds = 256;

/// Fixed-capacity bitset over world indices.
class WorldSet {
 public:
  static constexpr std::size_t kWords = kMaxWorlds / 64;

  constexpr WorldSet() = default;
  WorldSet(std::initializer_list<World> worlds) {
    for (World w : worlds) insert(w);
  }

  static WorldSet full(std::size_t n) {
    WorldSet s;
    for (std::size_t i = 0; i < kWords && n > 0; ++i) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[i] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }
  static WorldSet singleton(World w) {
    WorldSet s;
    s.insert(w);
    return s;
  }
  static WorldSet from_mask(std::uint64_t mask) {
    WorldSet s;
    s.words_[0] = mask;
    return s;
  }

  bool contains(World w) const { return (words_[w >> 6] >> (w & 63)) & 1U; }
  void insert(World w) { words_[w >> 6] |= std::uint64_t{1} << (w & 63); }
  void erase(World w) { words_[w >> 6] &= ~(std::uint64_t{1} << (w & 63)); }

  bool empty() const {
    for (auto x : words_)
      if (x) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t c = 0;
    for (auto x : words_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool subset_of(const WorldSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const WorldSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Lowest member; the set must be nonempty.
  World first() const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i]) return i * 64 + static_cast<World>(std::countr_zero(words_[i]));
    return kMaxWorlds;
  }

  /// Only meaningful when every member is below 64.
  std::uint64_t mask() const { return words_[0]; }

  WorldSet& operator&=(const WorldSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  WorldSet& operator|=(const WorldSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  WorldSet& operator-=(const WorldSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend WorldSet operator-(WorldSet a, const WorldSet& b) { return a -= b; }

  friend bool operator==(const WorldSet&, const WorldSet&) = default;
  /// Orders by mask value (low word first compared last), which for
  /// small universes is numeric order of the membership mask.
  friend std::strong_ordering operator<=>(const WorldSet& a, const WorldSet& b) {
    for (std::size_t i = kWords; i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t x = words_[i];
      while (x) {
        fn(i * 64 + static_cast<World>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<World> to_vector() const {
    std::vector<World> out;
    for_each([&](World w) { out.push_back(w); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : words_) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct WorldSetHash {
  std::size_t operator()(const WorldSet& s) const { return s.hash(); }
};

/// A family of world sets. Kept sorted and duplicate-free by `normalize`.
using Family = std::vector<WorldSet>;

void normalize(Family& family);
Family normalized(Family family);

/// Intersection of every member; the empty family meets to `universe`.
WorldSet meet(const Family& family, const WorldSet& universe);
/// Union of every member.
WorldSet join(const Family& family);

/// Binary relation on worlds 0..n-1, stored as successor rows.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n) {}

  static Relation identity(std::size_t n);
  static Relation total(std::size_t n);
  static Relation from_pairs(std::size_t n, const std::vector<std::pair<World, World>>& pairs);

  std::size_t size() const { return rows_.size(); }
  bool contains(World a, World b) const { return rows_[a].contains(b); }
  void add(World a, World b) { rows_[a].insert(b); }
  void remove(World a, World b) { rows_[a].erase(b); }
  const WorldSet& successors(World a) const { return rows_[a]; }
  WorldSet& successors(World a) { return rows_[a]; }
  WorldSet predecessors(World b) const;
  /// Worlds with at least one predecessor.
  WorldSet range() const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_preorder() const { return is_reflexive() && is_transitive(); }
  bool subset_of(const Relation& o) const;

  Relation reflexive_transitive_closure() const;
  std::vector<std::pair<World, World>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<WorldSet> rows_;
};

}  // namespace evlogic
