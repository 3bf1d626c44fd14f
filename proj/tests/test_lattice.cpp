#include <gtest/gtest.h>

#include "finduality/enumerate.hpp"
#include "finduality/lattice.hpp"
#include "oracle.hpp"

using namespace finduality;

namespace {

std::function<bool(int, int)> leq_of(const FinLattice& L) {
  return [L](int a, int b) { return L.leq(a, b); };
}

FinLattice two_maximal_poset_check() {
  // 0 below two incomparable elements, no top.
  return validate_lattice(FinPoset::from_covers(3, {{0, 1}, {0, 2}}));
}

}  // namespace

TEST(Lattice, ValidateChain) {
  const FinLattice C3 = catalog::C3();
  EXPECT_EQ(C3.meet(1, 2), 1);
  EXPECT_EQ(C3.join(0, 1), 1);
  EXPECT_EQ(C3.bottom(), 0);
  EXPECT_EQ(C3.top(), 2);
}

TEST(Lattice, PentagonTablesMatchBruteForce) {
  const FinLattice N5 = catalog::N5();
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      EXPECT_EQ(N5.meet(a, b), oracle::glb(5, leq_of(N5), a, b));
      EXPECT_EQ(N5.join(a, b), oracle::lub(5, leq_of(N5), a, b));
    }
}

TEST(Lattice, MissingTopIsNotALattice) {
  try {
    two_maximal_poset_check();
    FAIL() << "expected NotALattice";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotALattice);
  }
}

TEST(Lattice, Distributivity) {
  EXPECT_TRUE(is_distributive(catalog::C3()));
  EXPECT_FALSE(is_distributive(catalog::N5()));
  EXPECT_FALSE(is_distributive(catalog::M3()));
  EXPECT_TRUE(is_distributive(catalog::B4()));
}

TEST(Lattice, HeytingArrow) {
  const FinLattice C3 = catalog::C3();
  EXPECT_EQ(heyting_arrow(C3, 1, 0), 0);
  const FinLattice B4 = catalog::B4();
  EXPECT_EQ(heyting_arrow(B4, 0b01, 0b10), 0b10);
  for (const auto& L : {C3, B4, catalog::B8()})
    for (int a = 0; a < L.size(); ++a) {
      EXPECT_EQ(heyting_arrow(L, a, a), L.top());
      for (int b = 0; b < L.size(); ++b)
        for (int x = 0; x < L.size(); ++x)
          EXPECT_EQ(L.leq(L.meet(x, a), b), L.leq(x, heyting_arrow(L, a, b)));
    }
}

TEST(Lattice, PseudocomplementAndComplemented) {
  const FinLattice C3 = catalog::C3();
  EXPECT_EQ(pseudocomplement(C3, 1), 0);
  EXPECT_EQ(complemented_elements(C3).indices(), (std::vector<int>{0, 2}));
  EXPECT_EQ(complemented_elements(catalog::B4()).count(), 4);
}

TEST(Lattice, JoinIrreduciblesAndCoherence) {
  EXPECT_EQ(join_irreducibles(catalog::C3()), (std::vector<int>{1, 2}));
  EXPECT_EQ(join_irreducibles(catalog::B4()), (std::vector<int>{1, 2}));
  const FinLattice C3 = catalog::C3();
  EXPECT_TRUE(is_coherent_pair(C3, ElemSet::full(3)));
  for (int a = 0; a < 3; ++a) EXPECT_TRUE(is_compact_element(C3, a));
}

TEST(Lattice, PrimeFilters) {
  EXPECT_EQ(prime_filters(catalog::C3()).size(), 2u);
  EXPECT_EQ(prime_filters(catalog::C2()).size(), 1u);
  EXPECT_EQ(prime_filters(catalog::B4()).size(), 2u);
  for (const auto& L : enumerate_distributive_lattices(8)) {
    const auto fast = prime_filters(L);
    EXPECT_EQ(fast, prime_filters_exhaustive(L));
    EXPECT_EQ(static_cast<int>(fast.size()), oracle::count_prime_filters(L.size(), leq_of(L)));
  }
}

TEST(Lattice, DistributiveLatticeCounts) {
  // Finite distributive lattices up to isomorphism, sizes 1..8.
  const std::vector<int> expected = {1, 1, 1, 2, 3, 5, 8, 15};
  std::vector<int> got(8, 0);
  for (const auto& L : enumerate_distributive_lattices(8)) ++got[L.size() - 1];
  EXPECT_EQ(got, expected);
}

TEST(Lattice, IdealLattice) {
  EXPECT_EQ(ideal_lattice(catalog::C3()).lattice.size(), 3);
  EXPECT_EQ(ideal_lattice(catalog::C2()).lattice.size(), 2);
  const auto I = ideal_lattice(catalog::B4());
  EXPECT_EQ(I.lattice.size(), 4);
  EXPECT_TRUE(find_isomorphism(I.lattice, catalog::B4()).has_value());
  EXPECT_TRUE(I.principal.bijective());
}

TEST(Lattice, Birkhoff) {
  EXPECT_TRUE(find_isomorphism(downset_lattice(FinPoset::antichain(2)).lattice, catalog::B4()).has_value());
  EXPECT_TRUE(find_isomorphism(downset_lattice(FinPoset::chain(2)).lattice, catalog::C3()).has_value());
  for (const auto& L : enumerate_distributive_lattices(8)) EXPECT_TRUE(birkhoff_roundtrip(L).bijective());
  try {
    birkhoff_roundtrip(catalog::N5());
    FAIL() << "expected NotDistributive";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDistributive);
  }
}

TEST(Lattice, GeneratedBooleanSubalgebra) {
  EXPECT_EQ(generated_boolean_subalgebra(2, SubsetFamily{2, {0, 0b01, 0b11}}).size(), 4);
  EXPECT_EQ(generated_boolean_subalgebra(2, SubsetFamily{2, {0, 0b11}}).size(), 2);
  EXPECT_EQ(generated_boolean_subalgebra(3, SubsetFamily{3, {0, 0b001, 0b011, 0b111}}).size(), 8);
}

TEST(Lattice, Homomorphisms) {
  const FinLattice C3 = catalog::C3();
  const auto iso = find_isomorphism(C3, C3);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(iso->map, (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(find_isomorphism(C3, catalog::B4()).has_value());
  const auto homs = enumerate_homs(catalog::C2(), C3);
  ASSERT_EQ(homs.size(), 1u);
  EXPECT_EQ(homs[0].map, (std::vector<int>{0, 2}));
}

TEST(Lattice, PhiEmbedding) {
  for (const auto& L : enumerate_distributive_lattices(8)) {
    const auto phi = phi_embedding(L);
    EXPECT_TRUE(phi.hom.is_hom());
    EXPECT_TRUE(phi.hom.bijective());
  }
}
