#include <gtest/gtest.h>

#include "evlogic/world_set.hpp"

using namespace evlogic;

TEST(WorldSet, BasicOperations) {
  WorldSet a{0, 2, 5};
  WorldSet b{2, 3};
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(5));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a & b, (WorldSet{2}));
  EXPECT_EQ(a | b, (WorldSet{0, 2, 3, 5}));
  EXPECT_EQ(a - b, (WorldSet{0, 5}));
  EXPECT_TRUE((WorldSet{2}).subset_of(a));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.first(), 0u);
  EXPECT_EQ(a.to_vector(), (std::vector<World>{0, 2, 5}));
}

TEST(WorldSet, HighWords) {
  WorldSet s = WorldSet::full(200);
  EXPECT_EQ(s.size(), 200u);
  EXPECT_TRUE(s.contains(199));
  EXPECT_FALSE(s.contains(200));
  s.erase(0);
  s.erase(64);
  EXPECT_EQ(s.first(), 1u);
  EXPECT_EQ(s.size(), 198u);
  EXPECT_EQ(WorldSet::full(kMaxWorlds).size(), kMaxWorlds);
}

TEST(WorldSet, MaskRoundTrip) {
  for (std::uint64_t m = 0; m < 64; ++m) EXPECT_EQ(WorldSet::from_mask(m).mask(), m);
}

TEST(Family, NormalizeSortsAndDeduplicates) {
  Family f{{1, 2}, {0}, {1, 2}, {0, 1, 2}};
  normalize(f);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
  EXPECT_EQ(meet(f, WorldSet::full(3)), WorldSet{});
  EXPECT_EQ(join(f), WorldSet::full(3));
  EXPECT_EQ(meet({}, WorldSet::full(3)), WorldSet::full(3));
}

TEST(Relation, ClosureAndPredicates) {
  Relation r = Relation::from_pairs(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(r.is_reflexive());
  Relation c = r.reflexive_transitive_closure();
  EXPECT_TRUE(c.is_preorder());
  EXPECT_TRUE(c.contains(0, 2));
  EXPECT_FALSE(c.contains(2, 0));
  EXPECT_TRUE(r.subset_of(c));
  EXPECT_EQ(c.predecessors(2), (WorldSet{0, 1, 2}));
  EXPECT_EQ(r.range(), (WorldSet{1, 2}));
  EXPECT_EQ(Relation::identity(3).pairs().size(), 3u);
  EXPECT_EQ(Relation::total(3).pairs().size(), 9u);
}
