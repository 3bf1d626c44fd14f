#include <gtest/gtest.h>

#include "finduality/characterization.hpp"

using namespace finduality;

TEST(Characterization, SierpinskiAndChain) {
  for (const auto& P : {catalog::SIER(), catalog::P3()}) {
    const CharReport r = theorem_char_report(P, 4);
    EXPECT_TRUE(r.cauchy_complete && r.complete && r.extremal_dense);
    EXPECT_TRUE(r.iso_pff && r.iso_pt_idl && r.iso_pt_idl_some && r.iso_pff_some);
    EXPECT_TRUE(r.w_pff.has_value());
    EXPECT_TRUE(r.w_pt_idl.has_value());
    EXPECT_FALSE(r.counterexample.has_value());
  }
}

TEST(Characterization, RequiresT0) {
  try {
    theorem_char_report(catalog::INDISC(), 3);
    FAIL() << "expected NotT0";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotT0);
  }
}

TEST(Characterization, SmallT0Sweep) {
  const auto spaces = t0_spaces_upto(3);
  for (const auto& P : spaces) {
    const CharReport r = theorem_char_report(P, spaces);
    EXPECT_TRUE(r.all_agree());
    EXPECT_TRUE(r.complete);
  }
}

TEST(Characterization, BanaschewskiPultrPervin) {
  const BPReport s = banaschewski_pultr_check(catalog::SIER(), 3);
  EXPECT_TRUE(s.complete_side && s.td_side);
  EXPECT_TRUE(s.agrees());
  const BPReport p = banaschewski_pultr_check(catalog::P3(), 4);
  EXPECT_TRUE(p.complete_side && p.td_side);
  const BPReport o = banaschewski_pultr_check(catalog::one_point(), 2);
  EXPECT_TRUE(o.complete_side && o.td_side);
}

TEST(Characterization, BanaschewskiPultrAgreesOnSmallSpaces) {
  for (const auto& Q : t0_spaces_upto(3)) EXPECT_TRUE(banaschewski_pultr_check(Q, 3).agrees());
}

TEST(Characterization, FrithBanaschewski) {
  const FBReport c3 = frith_banaschewski_check(FrithPair::full(catalog::C3()), 4);
  EXPECT_TRUE(c3.in_scope && c3.complete_side && c3.locale_based_side && c3.agrees());
  const FBReport c2 = frith_banaschewski_check(FrithPair::full(catalog::C2()), 4);
  EXPECT_TRUE(c2.complete_side && c2.locale_based_side);
  const FrithPair pre = FrithPair::make(catalog::B4(), ElemSet::of(4, {0, 1, 3}));
  const FBReport b = frith_banaschewski_check(pre, 4);
  EXPECT_FALSE(b.in_scope);
  EXPECT_EQ(b.locale_based_direct, is_locale_based(pre));
}
