#include <gtest/gtest.h>

#include <subgrowth/classes.hpp>

using namespace subgrowth;
using namespace subgrowth::classes;

namespace {

std::vector<GroupKind> grid_kinds()
{
  return {GroupKind::free(1),          GroupKind::free(2),          GroupKind::free(3),
          GroupKind::orientable(1),    GroupKind::orientable(2),    GroupKind::orientable(3),
          GroupKind::nonorientable(2), GroupKind::nonorientable(3), GroupKind::nonorientable(4)};
}

auto provider(GroupKind kind)
{
  return [kind](unsigned m) { return census::covering_fiber(kind, m); };
}

std::vector<BigInt> column(CensusTable const &t, BigInt CensusRow::*field)
{
  std::vector<BigInt> out;
  for (auto const &r : t.rows)
    out.push_back(r.*field);
  return out;
}

} // namespace

TEST(CountClassesGeneric, Examples)
{
  auto single = [](unsigned) { return std::vector<FiberClass>{{HomologySignature::free(3), 5}}; };
  EXPECT_EQ(count_classes_generic(1, single), 5);

  EXPECT_EQ(count_classes_generic(2, provider(GroupKind::free(2))), 3);
  EXPECT_EQ(count_classes_generic(3, provider(GroupKind::free(2))), 7);
  EXPECT_EQ(classes_accumulator(3, provider(GroupKind::free(2))), 21);
}

TEST(CountClassesGeneric, RejectsProviderThatIsNotAGroup)
{
  // Z_2-quotient count 1 with an index-2 multiplicity of 0 gives 1, odd.
  auto bogus = [](unsigned m) {
    return m == 1 ? std::vector<FiberClass>{{HomologySignature::free(1), 1}} : std::vector<FiberClass>{};
  };
  EXPECT_THROW(count_classes_generic(2, bogus), consistency_error);
  EXPECT_THROW(count_classes_generic(0, bogus), domain_error);
}

TEST(CountClasses, Examples)
{
  EXPECT_EQ(count_classes(GroupKind::free(2), 4), 26);
  EXPECT_EQ(count_classes(GroupKind::orientable(1), 6), 12);
  EXPECT_EQ(count_classes(GroupKind::orientable(2), 2), 15);
  EXPECT_EQ(count_classes(GroupKind::nonorientable(2), 2), 3);
  EXPECT_EQ(count_classes(GroupKind::nonorientable(3), 2), 7);
}

TEST(CountClasses, SpecializedEqualsGeneric)
{
  for (auto const &kind : grid_kinds())
    for (unsigned n = 1; n <= 10; ++n)
      EXPECT_EQ(count_classes(kind, n), count_classes_generic(n, provider(kind))) << kind.to_string() << " n=" << n;
}

TEST(CountClasses, InfiniteCyclic)
{
  for (unsigned n = 1; n <= 20; ++n)
    EXPECT_EQ(count_classes(GroupKind::free(1), n), 1);
}

TEST(CensusTable, FreeRankTwo)
{
  auto one = census_table(GroupKind::free(2), 1);
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_EQ(one.rows[0].subgroups, 1);
  EXPECT_EQ(one.rows[0].classes, 1);
  EXPECT_FALSE(one.rows[0].orientable);

  auto t = census_table(GroupKind::free(2), 6);
  EXPECT_EQ(column(t, &CensusRow::subgroups), (std::vector<BigInt>{1, 3, 13, 71, 461, 3447}));
  EXPECT_EQ(column(t, &CensusRow::classes), (std::vector<BigInt>{1, 3, 7, 26, 97, 624}));
}

TEST(CensusTable, KleinBottle)
{
  auto t = census_table(GroupKind::nonorientable(2), 2);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].subgroups, 1);
  EXPECT_EQ(*t.rows[0].orientable, 0);
  EXPECT_EQ(*t.rows[0].nonorientable, 1);
  EXPECT_EQ(t.rows[0].classes, 1);
  EXPECT_EQ(t.rows[1].subgroups, 3);
  EXPECT_EQ(*t.rows[1].orientable, 1);
  EXPECT_EQ(*t.rows[1].nonorientable, 2);
  EXPECT_EQ(t.rows[1].classes, 3);
}

TEST(CensusTable, StructuralInvariantsHold)
{
  for (auto const &kind : grid_kinds()) {
    auto t = census_table(kind, 10);
    EXPECT_TRUE(table_violations(t).empty()) << kind.to_string();
  }
}

TEST(CensusTable, ViolationsAreReported)
{
  auto t = census_table(GroupKind::nonorientable(3), 3);
  t.rows[1].classes = 100;
  *t.rows[2].orientable += 1;
  auto v = table_violations(t);
  EXPECT_GE(v.size(), 3u);
  EXPECT_THROW(census_table(GroupKind::free(2), 0), domain_error);
}
