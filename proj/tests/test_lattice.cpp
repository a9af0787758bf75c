#include "kpaths/lattice.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace kpaths;

namespace {

std::set<std::string> names(const PathFamily& f) {
  std::set<std::string> out;
  enumerate_paths(f, [&](const LatticePath& p) { out.insert(p.to_string()); });
  return out;
}

SegmentProfile prof(std::initializer_list<std::pair<const unsigned, unsigned>> init) {
  SegmentProfile p;
  for (const auto& [len, c] : init) {
    for (unsigned i = 0; i < c; ++i) p.add(len);
  }
  return p;
}

}  // namespace

TEST(Path, ParseAndMeasure) {
  const LatticePath p = LatticePath::parse("uhdhuudd", 2);
  EXPECT_EQ(p.ups(), 3U);
  EXPECT_EQ(p.downs(), 3U);
  EXPECT_EQ(p.horizontals(), 2U);
  EXPECT_EQ(p.length(), 10U);
  EXPECT_EQ(p.end_height(), 0);
  EXPECT_TRUE(p.is_nonnegative());
  EXPECT_TRUE(p.has_horizontal_on_axis());
  EXPECT_FALSE(LatticePath::parse("uhduudd", 2).has_horizontal_on_axis());
  EXPECT_EQ(p.to_string(), "uhdhuudd");
  EXPECT_THROW(LatticePath::parse("uxd", 1), std::exception);
  EXPECT_THROW(LatticePath::parse("h", 0), std::exception);
}

TEST(Path, AxisChecks) {
  EXPECT_TRUE(LatticePath::parse("hud", 1).has_horizontal_on_axis());
  EXPECT_FALSE(LatticePath::parse("du", 0).is_nonnegative());
}

TEST(Enumerate, SpecExamples) {
  EXPECT_EQ(names(PathFamily::p(1, 1, 1)), (std::set<std::string>{"uhd", "hud", "udh"}));
  EXPECT_EQ(names(PathFamily::p(0, 3, 0)).size(), 5U);
  EXPECT_EQ(names(PathFamily::q(2, 1, 1)), (std::set<std::string>{"uhd"}));
  EXPECT_EQ(count_family(PathFamily::p(0, 4, 0)), 14);
  EXPECT_EQ(count_family(PathFamily::p(1, 0, 2)), 1);
  EXPECT_EQ(count_by_length(2, 4), 6);
}

TEST(Enumerate, DeterministicOrderUHD) {
  std::vector<std::string> order;
  enumerate_paths(PathFamily::p(1, 1, 1), [&](const LatticePath& p) { order.push_back(p.to_string()); });
  EXPECT_EQ(order, (std::vector<std::string>{"uhd", "udh", "hud"}));
}

TEST(Enumerate, EmptyPath) {
  const auto paths = collect_paths(PathFamily::p(0, 0, 0));
  ASSERT_EQ(paths.size(), 1U);
  EXPECT_EQ(paths[0].to_string(), "");
}

TEST(Enumerate, ZeroKWithHorizontalsRejected) { EXPECT_THROW(count_family(PathFamily::p(0, 1, 2)), std::exception); }

TEST(Enumerate, FamiliesAreNested) {
  for (unsigned k = 0; k <= 3; ++k) {
    for (unsigned m = 0; m <= 4; ++m) {
      for (unsigned j = 0; j <= (k == 0 ? 0U : 3U); ++j) {
        const PathFamily P = PathFamily::p(k, m, j);
        const PathFamily Q = PathFamily::q(k, m, j);
        enumerate_paths(Q, [&](const LatticePath& p) {
          EXPECT_TRUE(P.contains(p));
          EXPECT_FALSE(p.has_horizontal_on_axis());
        });
        enumerate_paths(P, [&](const LatticePath& p) {
          EXPECT_TRUE(p.is_nonnegative());
          EXPECT_EQ(p.ups(), m);
          EXPECT_EQ(p.horizontals(), j);
        });
        EXPECT_LE(count_family(Q), count_family(P));
        EXPECT_LE(count_family(P), count_family(PathFamily::free(k, m, j)));
      }
    }
  }
}

TEST(Enumerate, FreePathsAreMultinomial) {
  // Free paths: any arrangement of m u, m d, j h.
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned j = 0; j <= 3; ++j) {
      const unsigned parts[] = {m, m, j};
      EXPECT_EQ(count_family(PathFamily::free(1, m, j)), multinomial(2 * m + j, parts));
    }
  }
}

TEST(Profile, USegments) {
  EXPECT_EQ(u_segment_profile(LatticePath::parse("uududd", 0)), prof({{2, 1}, {1, 1}}));
  EXPECT_EQ(u_segment_profile(LatticePath::parse("hh", 2)).r(), 0U);
  EXPECT_EQ(u_segment_profile(LatticePath::parse("uuuddd", 0)), prof({{3, 1}}));
  EXPECT_EQ(u_segment_profile(LatticePath::parse("uuuddd", 0)).total_length(), 3U);
}

TEST(Profile, InternalUSegments) {
  EXPECT_EQ(internal_u_segment_profile(LatticePath::parse("uududd", 0)), prof({{1, 1}}));
  EXPECT_EQ(internal_u_segment_profile(LatticePath::parse("hud", 1)), prof({{1, 1}}));
  EXPECT_EQ(internal_u_segment_profile(LatticePath::parse("udud", 0)), prof({{1, 1}}));
}

TEST(Profile, OffAxisSegments) {
  EXPECT_EQ(off_axis_u_segment_profile(LatticePath::parse("udud", 0)).r(), 0U);
  EXPECT_EQ(off_axis_u_segment_profile(LatticePath::parse("uuddud", 0)).r(), 0U);
  EXPECT_EQ(off_axis_u_segment_profile(LatticePath::parse("uududd", 0)), prof({{1, 1}}));
  EXPECT_EQ(off_axis_u_segment_profile(LatticePath::parse("uhudd", 1)), prof({{1, 1}}));
  EXPECT_EQ(off_axis_u_segment_profile(LatticePath::parse("hud", 1)).r(), 0U);
}

TEST(Profile, AsType) {
  const auto t = u_segment_profile(LatticePath::parse("uduudd", 0)).as_type(3);
  EXPECT_EQ(t, (std::vector<unsigned>{1, 1, 0}));
}

TEST(UhSegments, Readings) {
  const UhSegments a = uh_segment_profile(LatticePath::parse("uhdhuudd", 2));
  EXPECT_EQ(a.first, 1U);
  EXPECT_EQ(a.internal, (std::vector<unsigned>{2}));
  const UhSegments b = uh_segment_profile(LatticePath::parse("hh", 2));
  EXPECT_EQ(b.first, 0U);
  EXPECT_TRUE(b.internal.empty());
  const UhSegments c = uh_segment_profile(LatticePath::parse("uudd", 2));
  EXPECT_EQ(c.first, 2U);
  EXPECT_TRUE(c.internal.empty());
}

TEST(Conditions, Tilde) {
  EXPECT_TRUE(satisfies_tilde_conditions(LatticePath::parse("hh", 2), 2, 0));
  EXPECT_FALSE(satisfies_tilde_conditions(LatticePath::parse("uhd", 2), 2, 0));
  EXPECT_TRUE(satisfies_tilde_conditions(LatticePath::parse("uudd", 2), 2, 0));
  EXPECT_THROW(satisfies_tilde_conditions(LatticePath::parse("uudd", 2), 2, 2), std::exception);
}

TEST(Conditions, Bar) {
  EXPECT_TRUE(satisfies_bar_conditions(LatticePath::parse("uudd", 2), 2, 0));
  EXPECT_FALSE(satisfies_bar_conditions(LatticePath::parse("udud", 2), 2, 0));
  EXPECT_TRUE(satisfies_bar_conditions(LatticePath::parse("h", 2), 2, 0));
}

TEST(Conditions, VacuousAtKOne) {
  for (unsigned n = 0; n <= 8; ++n) {
    EXPECT_EQ(count_by_length(1, n, [](const LatticePath& p) { return satisfies_tilde_conditions(p, 1, 0); }),
              count_by_length(1, n));
  }
}
