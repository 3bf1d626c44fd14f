#include <gtest/gtest.h>

#include "finduality/characterization.hpp"
#include "finduality/enumerate.hpp"
#include "finduality/frith.hpp"

using namespace finduality;

namespace {

FrithPair full(const FinLattice& L) { return FrithPair::full(L); }

// (B4, {0, {a}, X}): a bounded sublattice that does not join-generate.
FrithPair b4_chain() { return FrithPair::make(catalog::B4(), ElemSet::of(4, {0, 1, 3})); }

}  // namespace

TEST(Frith, ValidityOfPairs) {
  EXPECT_TRUE(full(catalog::C3()).is_frith());
  EXPECT_FALSE(b4_chain().is_frith());
  EXPECT_FALSE(FrithPair::make(catalog::C3(), ElemSet::of(3, {0, 2})).is_frith());
  // At finite scale a valid pair has S = L.
  for (const auto& F : pre_frith_pairs(enumerate_distributive_lattices(6)))
    if (F.is_frith()) EXPECT_EQ(F.sub.count(), F.lattice.size());
  EXPECT_EQ(pre_frith_pairs(enumerate_distributive_lattices(6)).size(), 103u);
}

TEST(Frith, ClassifyHom) {
  const FrithPair C3 = full(catalog::C3());
  const FrithPair C2 = full(catalog::C2());
  const HomClass id = classify_hom(FrithHom::identity(C3));
  EXPECT_TRUE(id.mono && id.extremal_epi && id.dense && id.iso);

  const auto q = quotient(catalog::C3(), nabla(catalog::C3(), 1));
  const HomClass quo = classify_hom(FrithHom{C3, full(q.lattice), q.q});
  EXPECT_TRUE(quo.extremal_epi);
  EXPECT_FALSE(quo.mono);

  const HomClass emb = classify_hom(FrithHom{C2, C3, LatticeHom{catalog::C2(), catalog::C3(), {0, 2}}});
  EXPECT_TRUE(emb.mono);
  EXPECT_FALSE(emb.extremal_epi);
}

TEST(Frith, Points) {
  EXPECT_TRUE(find_pervin_isomorphism(pt_functor(full(catalog::C3())).space, catalog::SIER()).has_value());
  EXPECT_EQ(pt_functor(full(catalog::C2())).space.size(), 1);
  const PervinSpace b = pt_functor(full(catalog::B4())).space;
  EXPECT_EQ(b.size(), 2);
  EXPECT_EQ(b.family.size(), 4);
  for (const auto& L : enumerate_distributive_lattices(8))
    EXPECT_EQ(pt_functor(full(L)).points.size(), L.join_irreducibles().size());
}

TEST(Frith, OmegaAndDualAdjunction) {
  const FrithPair o = omega_functor(catalog::SIER());
  EXPECT_EQ(o.lattice.size(), 3);
  EXPECT_EQ(o.sub.count(), 3);
  EXPECT_EQ(omega_functor(catalog::one_point()).lattice.size(), 2);
  const auto r = dual_adjunction_check(catalog::SIER(), full(catalog::C3()));
  EXPECT_EQ(r.pervin_maps, 3);
  EXPECT_EQ(r.frith_homs, 3);
  EXPECT_TRUE(r.bijection);
  EXPECT_TRUE(r.triangles);
}

TEST(Frith, Fsym) {
  const Fsym c3 = fsym(full(catalog::C3()));
  EXPECT_EQ(c3.pair.lattice.size(), 4);
  EXPECT_EQ(c3.pair.sub.count(), 4);
  EXPECT_TRUE(is_symmetric(c3.pair));
  const Fsym c2 = fsym(full(catalog::C2()));
  EXPECT_EQ(c2.pair.lattice.size(), 2);
  const Fsym b4 = fsym(full(catalog::B4()));
  EXPECT_EQ(b4.pair.lattice.size(), 4);
  EXPECT_EQ(b4.pair.sub.count(), 4);
}

TEST(Frith, Completion) {
  const Completion c = completion(full(catalog::C3()));
  EXPECT_TRUE(classify_hom(c.counit).iso);
  EXPECT_TRUE(is_complete(full(catalog::C3()), 3).value());
  EXPECT_TRUE(is_complete(full(catalog::C2())).value());
  const Completion b = completion(b4_chain());
  EXPECT_EQ(b.pair.lattice.size(), 3);
  EXPECT_FALSE(b.counit.hom.surjective());
  EXPECT_FALSE(is_complete(b4_chain()).value());
}

TEST(Frith, StronglyExactMeets) {
  const FinLattice C3 = catalog::C3();
  EXPECT_EQ(congruence_join(C3, {delta(C3, 1), delta(C3, 2)}), delta(C3, 1));
  EXPECT_EQ(congruence_join(C3, {}), delta(C3, 2));
  const FinLattice B4 = catalog::B4();
  EXPECT_EQ(congruence_join(B4, {delta(B4, 1), delta(B4, 2)}), delta(B4, 0));
  for (const auto& L : enumerate_distributive_lattices(8)) {
    const FrithPair F = full(L);
    EXPECT_EQ(strongly_exact_meets(F), F.sub);
    EXPECT_TRUE(is_strongly_exact(F));
  }
}

TEST(Frith, ScottOpenFilters) {
  const FinLattice C3 = catalog::C3();
  EXPECT_TRUE(is_scott_open(C3, C3.up(1)));
  const ScottReport r = scott_strong_exact_check(catalog::B4());
  EXPECT_EQ(r.scott_open, r.filters);
  EXPECT_TRUE(r.closed_under_strongly_exact_meets);
}

TEST(Frith, Sublocales) {
  const FinLattice C3 = catalog::C3();
  EXPECT_EQ(generated_sublocale(C3, ElemSet::of(3, {0, 2})).indices(), (std::vector<int>{0, 2}));
  EXPECT_FALSE(is_locale_based(FrithPair::make(C3, ElemSet::of(3, {0, 2}))));
  EXPECT_TRUE(is_locale_based(full(C3)));
  EXPECT_TRUE(generated_sublocale(catalog::B4(), ElemSet::of(4, {0, 1, 3})).test(2));
  EXPECT_TRUE(is_locale_based(b4_chain()));
  for (const auto& F : pre_frith_pairs(enumerate_distributive_lattices(6))) {
    const ElemSet K = generated_sublocale(F.lattice, F.sub);
    for (int a = 0; a < F.lattice.size(); ++a)
      EXPECT_EQ(sublocale_meet_formula(F.lattice, F.sub, a) == a, K.test(a));
  }
}

TEST(Frith, RightAdjointAndFrobenius) {
  const FinLattice C3 = catalog::C3();
  const FrobeniusReport id = frobenius_check(LatticeHom::identity(C3));
  EXPECT_TRUE(id.frobenius && id.adjunction && id.arrow_inequality);

  const auto q = quotient(C3, nabla(C3, 1));
  EXPECT_EQ(right_adjoint(q.q), (std::vector<int>{1, 2}));
  EXPECT_TRUE(frobenius_check(q.q).frobenius);

  const LatticeHom emb{catalog::C2(), C3, {0, 2}};
  EXPECT_EQ(right_adjoint(emb)[1], 0);
  const FrobeniusReport e = frobenius_check(emb);
  EXPECT_TRUE(e.adjunction);
  EXPECT_TRUE(e.arrow_inequality);
  EXPECT_TRUE(e.frobenius);
}
