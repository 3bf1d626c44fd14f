#include <gtest/gtest.h>

#include "finduality/adjunctions.hpp"
#include "finduality/bitop.hpp"

using namespace finduality;

TEST(Bitop, SkulaOfSierpinski) {
  const BiSpace X = skula_space(catalog::SIER());
  EXPECT_EQ(X.pos, (SubsetFamily{2, {0, 0b01, 0b11}}.canonical()));
  EXPECT_EQ(X.neg, (SubsetFamily{2, {0, 0b10, 0b11}}.canonical()));
  EXPECT_EQ(patch(X).size(), 4);
  EXPECT_TRUE(pos_clopens(X).contains(0b01));
  EXPECT_TRUE(is_zero_dimensional(X));
  EXPECT_TRUE(is_pairwise_stone(X));
  EXPECT_EQ(clplus(X).family, catalog::SIER().family);
}

TEST(Bitop, SierpinskiBispace) {
  const BiSpace X = catalog::SIER_BI();
  EXPECT_EQ(pos_clopens(X), (SubsetFamily{2, {0, 0b11}}.canonical()));
  EXPECT_FALSE(is_zero_dimensional(X));
  EXPECT_FALSE(is_pairwise_stone(X));
  EXPECT_EQ(clplus(X).family, catalog::INDISC().family);
}

TEST(Bitop, DiscreteBispace) {
  const PervinSpace D = catalog::discrete(2);
  const BiSpace X = BiSpace::make(D.ground, D.family.members, D.family.members);
  EXPECT_EQ(patch(X).size(), 4);
  EXPECT_EQ(pos_clopens(X).size(), 4);
}

TEST(Bitop, Compactness) {
  for (const auto& X : bispace_family(3)) EXPECT_TRUE(is_compact(X));
  for (const auto& B : biframe_family(6)) EXPECT_TRUE(is_compact(B));
}

TEST(Bitop, SkulaBiframe) {
  const SkulaBiframe s = skula_biframe(FrithPair::full(catalog::C3()));
  EXPECT_EQ(s.frame.main.size(), 4);
  EXPECT_EQ(s.frame.pos.count(), 3);
  EXPECT_TRUE(find_isomorphism(s.frame.main, catalog::B4()).has_value());
  const BbPlus b = bbplus(s.frame);
  EXPECT_TRUE(find_isomorphism(b.pair.lattice, catalog::C3()).has_value());
  EXPECT_TRUE(classify_hom(fsk_unit(FrithPair::full(catalog::C3()))).iso);
}

TEST(Bitop, Biframe332) {
  const BiFrame B = catalog::BF332();
  const BbPlus b = bbplus(B);
  EXPECT_EQ(b.pair.lattice.size(), 2);
  const NonCommutation w = non_commutation_witness(B);
  EXPECT_EQ(w.pt_bbplus, 1);
  EXPECT_EQ(w.clplus_pt_b, 2);
}

TEST(Bitop, BetaIso) {
  const BiMap c3 = beta_natural_iso(FrithPair::full(catalog::C3()));
  EXPECT_EQ(c3.dom.size(), 2);
  EXPECT_TRUE(c3.is_iso());
  EXPECT_EQ(beta_natural_iso(FrithPair::full(catalog::C2())).dom.size(), 1);
}

TEST(Bitop, MonotopologicalRestrictions) {
  EXPECT_TRUE(in_perv_prime(catalog::discrete(2)));
  EXPECT_FALSE(in_perv_prime(catalog::SIER()));
  const BbPlus b = bb_frame(catalog::B4());
  EXPECT_EQ(b.pair.lattice.size(), 4);
  EXPECT_TRUE(is_zero_dimensional_frame(catalog::B4()));
}

TEST(Bitop, SkulaAdjunctionInstances) {
  const auto r = skula_adjunction_check(skula_space(catalog::SIER()), catalog::SIER());
  EXPECT_TRUE(r.bijection);
  EXPECT_TRUE(r.triangles);
  EXPECT_TRUE(r.counit_iso);
  EXPECT_EQ(r.unit_iso, r.zero_dimensional);
}
