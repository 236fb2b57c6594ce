#include "evlogic/world_set.hpp"

#include <algorithm>

namespace evlogic {

void normalize(Family& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

Family normalized(Family family) {
  normalize(family);
  return family;
}

WorldSet meet(const Family& family, const WorldSet& universe) {
  WorldSet acc = universe;
  for (const auto& x : family) acc &= x;
  return acc;
}

WorldSet join(const Family& family) {
  WorldSet acc;
  for (const auto& x : family) acc |= x;
  return acc;
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (World w = 0; w < n; ++w) r.add(w, w);
  return r;
}

Relation Relation::total(std::size_t n) {
  Relation r(n);
  for (World w = 0; w < n; ++w) r.rows_[w] = WorldSet::full(n);
  return r;
}

Relation Relation::from_pairs(std::size_t n, const std::vector<std::pair<World, World>>& pairs) {
  Relation r(n);
  for (auto [a, b] : pairs) r.add(a, b);
  return r;
}

WorldSet Relation::predecessors(World b) const {
  WorldSet out;
  for (World a = 0; a < rows_.size(); ++a)
    if (rows_[a].contains(b)) out.insert(a);
  return out;
}

WorldSet Relation::range() const {
  WorldSet out;
  for (const auto& row : rows_) out |= row;
  return out;
}

bool Relation::is_reflexive() const {
  for (World w = 0; w < rows_.size(); ++w)
    if (!rows_[w].contains(w)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (World a = 0; a < rows_.size(); ++a) {
    WorldSet reach;
    rows_[a].for_each([&](World b) { reach |= rows_[b]; });
    if (!reach.subset_of(rows_[a])) return false;
  }
  return true;
}

bool Relation::subset_of(const Relation& o) const {
  if (o.size() != size()) return false;
  for (World a = 0; a < rows_.size(); ++a)
    if (!rows_[a].subset_of(o.rows_[a])) return false;
  return true;
}

Relation Relation::reflexive_transitive_closure() const {
  Relation r = *this;
  const std::size_t n = size();
  for (World w = 0; w < n; ++w) r.add(w, w);
  // Warshall over rows.
  for (World k = 0; k < n; ++k)
    for (World i = 0; i < n; ++i)
      if (r.rows_[i].contains(k)) r.rows_[i] |= r.rows_[k];
  return r;
}

std::vector<std::pair<World, World>> Relation::pairs() const {
  std::vector<std::pair<World, World>> out;
  for (World a = 0; a < rows_.size(); ++a) rows_[a].for_each([&](World b) { out.emplace_back(a, b); });
  return out;
}

}  // namespace evlogic
