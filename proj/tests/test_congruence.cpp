#include <gtest/gtest.h>

#include "finduality/congruence.hpp"
#include "finduality/enumerate.hpp"
#include "oracle.hpp"

using namespace finduality;

TEST(Congruence, NablaAndDelta) {
  const FinLattice C3 = catalog::C3();
  const Congruence n = nabla(C3, 1);
  EXPECT_TRUE(n.related(0, 1));
  EXPECT_FALSE(n.related(1, 2));
  const Congruence d = delta(C3, 1);
  EXPECT_TRUE(d.related(1, 2));
  EXPECT_FALSE(d.related(0, 1));
  EXPECT_EQ(nabla(C3, 0), diagonal(C3));
  EXPECT_EQ(nabla(C3, 2), total(C3));
}

TEST(Congruence, JoinMeet) {
  const FinLattice C3 = catalog::C3();
  EXPECT_EQ(congruence_join(nabla(C3, 1), delta(C3, 1)), total(C3));
  EXPECT_EQ(congruence_meet(nabla(C3, 1), delta(C3, 1)), diagonal(C3));
  EXPECT_EQ(congruence_join(diagonal(C3), nabla(C3, 1)), nabla(C3, 1));
}

TEST(Congruence, AllCongruencesOfC3) {
  const auto C = all_congruences(catalog::C3());
  EXPECT_EQ(C.size(), 4);
  EXPECT_TRUE(find_isomorphism(C.lattice, catalog::B4()).has_value());
}

TEST(Congruence, CountsMatchPartitionOracle) {
  for (const auto& L : enumerate_distributive_lattices(7)) {
    const auto a = all_congruences_by_partitions(L);
    const auto b = all_congruences_by_principals(L);
    EXPECT_EQ(a.members, b.members);
    EXPECT_EQ(a.size(), oracle::count_congruences(L.size(), [&](int x, int y) { return L.leq(x, y); }));
    // A finite distributive lattice has 2^|JI| congruences.
    EXPECT_EQ(a.size(), 1 << L.join_irreducibles().size());
  }
}

TEST(Congruence, GeneratedSubframe) {
  const FinLattice C3 = catalog::C3();
  EXPECT_EQ(generated_congruence_subframe(C3, ElemSet::full(3)).size(), 4);
  EXPECT_EQ(generated_congruence_subframe(catalog::B4(), ElemSet::full(4)).size(), 4);
  // Only the nablas: a copy of C3.
  EXPECT_EQ(generated_congruence_subframe(C3, ElemSet::of(3, {0, 2})).size(), 3);
  for (const auto& L : enumerate_distributive_lattices(6))
    EXPECT_EQ(generated_congruence_subframe(L, ElemSet::full(L.size())).members, all_congruences(L).members);
}

TEST(Congruence, SizeGuard) {
  try {
    all_congruences(catalog::chain(11));
    FAIL() << "expected SizeExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeExceeded);
  }
}

TEST(Congruence, Quotients) {
  const FinLattice C3 = catalog::C3();
  EXPECT_EQ(quotient(C3, nabla(C3, 1)).lattice.size(), 2);
  EXPECT_EQ(quotient(C3, diagonal(C3)).lattice.size(), 3);
  EXPECT_EQ(quotient(C3, total(C3)).lattice.size(), 1);
  const auto q = quotient(C3, nabla(C3, 1));
  EXPECT_EQ(q.right_adjoint, (std::vector<int>{1, 2}));
}

TEST(Congruence, UniversalExtension) {
  const FinLattice C3 = catalog::C3();
  const FinLattice B4 = catalog::B4();
  const LatticeHom id = LatticeHom::identity(C3);
  const ElemSet bounds = ElemSet::of(3, {0, 2});
  const auto CB = generated_congruence_subframe(C3, bounds);
  EXPECT_TRUE(universal_extension(id, bounds, CB).is_hom());

  const LatticeHom h{C3, B4, {0, 0b01, 0b11}};
  const ElemSet m = ElemSet::of(3, {1});
  const auto CS = generated_congruence_subframe(C3, m);
  const LatticeHom ext = universal_extension(h, m, CS);
  EXPECT_TRUE(ext.is_hom());
  EXPECT_EQ(ext(CS.index_of(delta(C3, 1))), 0b10);

  try {
    universal_extension(id, m, CS);
    FAIL() << "expected NotComplemented";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotComplemented);
  }
}
