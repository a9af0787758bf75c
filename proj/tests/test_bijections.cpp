#include "kpaths/bijections.hpp"

#include <gtest/gtest.h>

using namespace kpaths;

namespace {

LatticePath P(const char* s, unsigned k = 1) { return LatticePath::parse(s, k); }

}  // namespace

TEST(Phi, SpecExamples) {
  EXPECT_EQ(phi(MarkedPath{P("ud"), 0}).to_string(), "du");
  EXPECT_EQ(phi(MarkedPath{P("ud"), 1}).to_string(), "ud");
  EXPECT_EQ(phi(MarkedPath{P("uudd"), 2}).to_string(), "uudd");
}

TEST(Phi, RejectsBadMarks) {
  EXPECT_THROW(phi(MarkedPath{P("ud"), 2}), std::exception);
  EXPECT_THROW(phi(MarkedPath{P("du"), 0}), std::exception);
}

TEST(PhiInv, SpecExamples) {
  EXPECT_EQ(phi_inv(P("du")), (MarkedPath{P("ud"), 0}));
  EXPECT_EQ(phi_inv(P("ud")), (MarkedPath{P("ud"), 1}));
  EXPECT_EQ(phi_inv(P("hdu")), (MarkedPath{P("udh"), 0}));
  EXPECT_THROW(phi_inv(P("uud")), std::exception);
}

TEST(Phi, RoundTripAndTypeProperty) {
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned m = 0; m <= 4; ++m) {
      for (unsigned j = 0; j <= (k == 0 ? 0U : 2U); ++j) {
        BigInt marked(0);
        enumerate_paths(PathFamily::p(k, m, j), [&](const LatticePath& p) {
          for (unsigned mark = 0; mark <= m; ++mark) {
            const MarkedPath mp{p, mark};
            const LatticePath l = phi(mp);
            EXPECT_TRUE(is_free_path(l));
            EXPECT_EQ(phi_inv(l), mp);
            EXPECT_EQ(u_segment_profile(l), u_segment_profile(p));
            marked += 1;
          }
        });
        EXPECT_EQ(marked, count_family(PathFamily::free(k, m, j)));
        enumerate_paths(PathFamily::free(k, m, j), [&](const LatticePath& l) { EXPECT_EQ(phi(phi_inv(l)), l); });
      }
    }
  }
}

TEST(Schroder, ToDyck) {
  EXPECT_EQ(schroder_to_dyck(P("hh", 2)).to_string(), "udud");
  EXPECT_EQ(schroder_to_dyck(P("uudd", 2)).to_string(), "uudd");
  EXPECT_EQ(schroder_to_dyck(P("uuhdd", 2)).to_string(), "uuuddd");
  EXPECT_THROW(schroder_to_dyck(P("ud", 2)), std::exception);
  EXPECT_THROW(schroder_to_dyck(P("uudd", 1)), std::exception);
}

TEST(Schroder, FromDyck) {
  EXPECT_EQ(dyck_to_schroder(P("udud", 0)).to_string(), "hh");
  EXPECT_EQ(dyck_to_schroder(P("uudd", 0)).to_string(), "uudd");
  EXPECT_EQ(dyck_to_schroder(P("uuuddd", 0)).to_string(), "uuhdd");
  EXPECT_THROW(dyck_to_schroder(P("du", 0)), std::exception);
}

TEST(Schroder, RoundTripProperty) {
  for (unsigned n = 0; n <= 6; ++n) {
    enumerate_paths(PathFamily::p(0, n, 0), [&](const LatticePath& d) {
      const LatticePath s = dyck_to_schroder(d);
      EXPECT_EQ(s.length(), 2 * n);
      for (const auto& [len, c] : u_segment_profile(s).counts) EXPECT_EQ(len % 2, 0U);
      EXPECT_EQ(schroder_to_dyck(s), d);
    });
  }
}
