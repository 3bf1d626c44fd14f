#include <gtest/gtest.h>

#include "finduality/adjunctions.hpp"

using namespace finduality;

TEST(Adjunctions, BatteryPasses) {
  BatteryOptions o;
  o.max_points = 2;
  o.lattice_size = 4;
  o.skula_size = 3;
  for (const auto& a : adjunction_battery(o)) EXPECT_TRUE(a.ok()) << a.name << ": " << a.witness();
}

TEST(Adjunctions, NegativeControlsFailWithWitness) {
  BatteryOptions o;
  o.max_points = 2;
  o.lattice_size = 4;
  o.skula_size = 3;
  for (const auto& a : negative_controls(o)) {
    EXPECT_FALSE(all_pass(a.laws)) << a.name;
    EXPECT_TRUE(a.ok());
    EXPECT_FALSE(a.witness().empty());
  }
}

TEST(Adjunctions, PsymHomSetsBiject) {
  // For symmetric B: maps B -> P correspond to maps B -> psym P through the identity on points.
  for (const auto& B : symmetric_family(3))
    for (const auto& P : pervin_family(3)) {
      const auto direct = enumerate_pervin_maps(B, P);
      const auto via = enumerate_pervin_maps(B, symmetrize(P));
      ASSERT_EQ(direct.size(), via.size());
      for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_EQ(direct[i].map, via[i].map);
    }
}

TEST(Adjunctions, IdentityAdjunction) {
  const auto r = verify_adjunction(identity_adjunction(), pervin_family(2), pervin_family(2));
  EXPECT_TRUE(all_pass(r));
}
