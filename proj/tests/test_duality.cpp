#include <gtest/gtest.h>

#include "finduality/dot.hpp"
#include "finduality/duality.hpp"
#include "finduality/enumerate.hpp"

using namespace finduality;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Duality, Spectral) {
  const SubsetFamily sier = u(catalog::SIER());
  EXPECT_TRUE(is_spectral(sier));
  EXPECT_EQ(compact_opens(sier).size(), 3);
  EXPECT_FALSE(is_spectral(catalog::INDISC().family));
  EXPECT_TRUE(is_spectral(catalog::one_point().family));
  for (const auto& P : enumerate_pervin_upto(4)) EXPECT_EQ(is_spectral(u(P)), is_T0(P));
}

TEST(Duality, Stone) {
  const PervinSpace S = catalog::SIER();
  EXPECT_EQ(ko(S.ground, u(S)), S);
  EXPECT_EQ(ko({"x"}, catalog::one_point().family), catalog::one_point());
  const SubsetFamily t = u(catalog::P3());
  EXPECT_EQ(u(ko(catalog::P3().ground, t)), t);
  try {
    ko(catalog::INDISC().ground, catalog::INDISC().family);
    FAIL() << "expected NotSpectral";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSpectral);
  }
}

TEST(Duality, Priestley) {
  const PriestleySpace Y = pp(catalog::SIER());
  EXPECT_EQ(Y.size(), 2);
  EXPECT_EQ(Y.topology.size(), 4);
  EXPECT_TRUE(Y.order.leq(1, 0));
  EXPECT_FALSE(Y.order.leq(0, 1));
  EXPECT_EQ(cup(Y), catalog::SIER());
  EXPECT_EQ(pp(catalog::one_point()).size(), 1);
  for (const auto& P : enumerate_pervin_upto(4, true)) {
    EXPECT_EQ(cup(pp(P)), P);
    EXPECT_EQ(spectral_to_priestley(P.ground, u(P)), pp(P));
    EXPECT_EQ(priestley_to_spectral(pp(P)), u(P));
  }
}

TEST(Duality, LawReports) {
  const auto t0 = enumerate_pervin_upto(3, true);
  EXPECT_TRUE(all_pass(stone_iso_check(t0, enumerate_pervin_upto(3))));
  EXPECT_TRUE(all_pass(priestley_iso_check(t0)));
}

TEST(Duality, PairwiseStone) {
  EXPECT_TRUE(is_pairwise_stone(skula_space(catalog::SIER())));
  EXPECT_FALSE(is_pairwise_stone(catalog::SIER_BI()));
}

TEST(Dot, HasseDiagrams) {
  const std::string c3 = emit_dot(catalog::C3());
  EXPECT_EQ(count(c3, "->"), 2);
  EXPECT_NE(c3.find("rankdir=BT"), std::string::npos);
  const std::string b4 = emit_dot(catalog::B4());
  EXPECT_EQ(count(b4, "[label="), 4);
  EXPECT_EQ(count(b4, "->"), 4);
  EXPECT_EQ(count(emit_dot(pp(catalog::SIER())), "->"), 1);
}
