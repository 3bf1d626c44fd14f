#include <gtest/gtest.h>

#include "finduality/enumerate.hpp"
#include "finduality/pervin.hpp"
#include "oracle.hpp"

using namespace finduality;

TEST(Pervin, InvalidFamilies) {
  try {
    PervinSpace::make({"a", "b"}, {0b01, 0b11});
    FAIL() << "expected InvariantViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvariantViolation);
  }
  EXPECT_THROW(PervinSpace::make({"a", "b", "c"}, {0, 0b001, 0b010, 0b111}), Error);
}

TEST(Pervin, EnumerationMatchesOracle) {
  // Topologies and T0 topologies up to homeomorphism.
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_pervin(n).size()), oracle::count_pervin_spaces(n, false)) << n;
    EXPECT_EQ(static_cast<int>(enumerate_pervin(n, true).size()), oracle::count_pervin_spaces(n, true)) << n;
  }
  EXPECT_EQ(enumerate_pervin(5).size(), 139u);
  EXPECT_EQ(enumerate_pervin(5, true).size(), 63u);
  EXPECT_EQ(enumerate_pervin_upto(4, true, 8).size(), 17u);
}

TEST(Pervin, OmegaTopology) {
  EXPECT_EQ(omega_topology(catalog::SIER()), catalog::SIER().family);
  EXPECT_EQ(omega_topology(catalog::P3()), catalog::P3().family);
}

TEST(Pervin, ClassifyMap) {
  const PervinSpace S = catalog::SIER();
  const MapClass id = classify_map(PervinMap::identity(S));
  EXPECT_TRUE(id.epi && id.extremal_mono && id.dense && id.iso);

  const PervinSpace A = PervinSpace::make({"a"}, {0, 1});
  const MapClass inc = classify_map(PervinMap{A, S, {0}});
  EXPECT_TRUE(inc.extremal_mono);
  EXPECT_FALSE(inc.epi);

  const MapClass konst = classify_map(PervinMap{S, catalog::INDISC(), {0, 0}});
  EXPECT_FALSE(konst.epi);
}

TEST(Pervin, Symmetrize) {
  EXPECT_EQ(symmetrize(catalog::SIER()).family.size(), 4);
  EXPECT_EQ(symmetrize(catalog::INDISC()).family, catalog::INDISC().family);
  EXPECT_EQ(symmetrize(catalog::P3()).family.size(), 8);
}

TEST(Pervin, Specialization) {
  const Preorder s = specialization(catalog::SIER());
  EXPECT_TRUE(s.leq(1, 0));
  EXPECT_FALSE(s.leq(0, 1));
  const Preorder i = specialization(catalog::INDISC());
  EXPECT_TRUE(i.leq(0, 1) && i.leq(1, 0));
  const Preorder p = specialization(catalog::P3());
  EXPECT_TRUE(p.leq(2, 1) && p.leq(1, 0));
  EXPECT_FALSE(p.leq(0, 1));
}

TEST(Pervin, SeparationAxioms) {
  EXPECT_TRUE(is_T0(catalog::SIER()));
  EXPECT_TRUE(is_TD(catalog::SIER()));
  EXPECT_FALSE(is_T0(catalog::INDISC()));
  EXPECT_FALSE(is_TD(catalog::INDISC()));
  EXPECT_TRUE(is_T0(catalog::one_point()));
  EXPECT_TRUE(is_TD(catalog::one_point()));
  for (const auto& P : enumerate_pervin_upto(4)) {
    EXPECT_EQ(td_condition1(P), td_condition2(P));
    EXPECT_EQ(td_condition1(P), td_condition3(P));
  }
}

TEST(Pervin, CauchyFilters) {
  const PervinSpace S = catalog::SIER();
  const auto fs = cauchy_filters(S);
  EXPECT_EQ(fs.size(), 2u);
  for (const auto& F : fs) EXPECT_NE(limits(S, F), Mask{0});
  EXPECT_EQ(cauchy_filters(catalog::INDISC()).size(), 3u);
  for (const auto& P : enumerate_pervin_upto(4)) {
    EXPECT_TRUE(is_cauchy_complete(P));
    EXPECT_EQ(cauchy_filters(P).size(), cauchy_filters_definitional(P).size());
  }
}

TEST(Pervin, NeighborhoodMap) {
  const PervinMap s = neighborhood_map(catalog::SIER());
  EXPECT_TRUE(classify_map(s).iso);
  const PervinMap i = neighborhood_map(catalog::INDISC());
  EXPECT_FALSE(i.injective());
  EXPECT_TRUE(classify_map(neighborhood_map(catalog::P3())).iso);
}

TEST(Pervin, PrimeFilterSpace) {
  EXPECT_TRUE(find_pervin_isomorphism(pf_space(catalog::C3()), catalog::SIER()).has_value());
  EXPECT_EQ(pf_space(catalog::C2()).size(), 1);
  const PervinSpace b = pf_space(catalog::B4());
  EXPECT_EQ(b.size(), 2);
  EXPECT_EQ(b.family.size(), 4);
}

TEST(Pervin, StronglyExact) {
  for (const auto& P : enumerate_pervin_upto(4)) {
    EXPECT_EQ(open_intersection_closure(P), P.family);
    EXPECT_TRUE(is_strongly_exact(P));
  }
}
