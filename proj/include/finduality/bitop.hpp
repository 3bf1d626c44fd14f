#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "finduality/congruence.hpp"
#include "finduality/frith.hpp"
#include "finduality/lattice.hpp"
#include "finduality/pervin.hpp"

namespace finduality {

// ---------------------------------------------------------------------------
// Bispaces

/// (X, tau+, tau-): two topologies on one finite ground set.
struct BiSpace {
  std::vector<std::string> ground;
  SubsetFamily pos, neg;

  int size() const { return static_cast<int>(ground.size()); }
  Mask full() const { return full_mask(size()); }

  static BiSpace make(std::vector<std::string> ground, std::vector<Mask> pos, std::vector<Mask> neg) {
    const int n = static_cast<int>(ground.size());
    if (n > kMaxGround) throw Error(ErrorCode::SizeExceeded, "bispace limited to 64 points");
    auto check = [&](const std::vector<Mask>& fam, const char* which) {
      SubsetFamily f = SubsetFamily{n, fam}.canonical();
      for (Mask m : f.members)
        if (m & ~full_mask(n)) throw Error(ErrorCode::InvariantViolation, std::string(which) + " set outside ground");
      if (!f.is_bounded_sublattice())
        throw Error(ErrorCode::InvariantViolation, std::string(which) + " family is not a topology");
      return f;
    };
    BiSpace X;
    X.pos = check(pos, "positive");
    X.neg = check(neg, "negative");
    X.ground = std::move(ground);
    return X;
  }

  friend bool operator==(const BiSpace& a, const BiSpace& b) {
    return a.size() == b.size() && a.pos == b.pos && a.neg == b.neg;
  }
};

/// A function continuous for both topologies.
struct BiMap {
  BiSpace dom, cod;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  Mask preimage(Mask T) const {
    Mask r = 0;
    for (int x = 0; x < dom.size(); ++x)
      if (has(T, map[x])) r |= bit(x);
    return r;
  }
  Mask image(Mask S) const {
    Mask r = 0;
    for (int x : mask_indices(S)) r |= bit(map[x]);
    return r;
  }
  bool is_continuous() const {
    for (Mask T : cod.pos.members)
      if (!dom.pos.contains(preimage(T))) return false;
    for (Mask T : cod.neg.members)
      if (!dom.neg.contains(preimage(T))) return false;
    return true;
  }
  bool bijective() const { return dom.size() == cod.size() && image(dom.full()) == cod.full(); }
  /// Bijective, continuous and open for both topologies.
  bool is_iso() const {
    if (!bijective() || !is_continuous()) return false;
    for (Mask U : dom.pos.members)
      if (!cod.pos.contains(image(U))) return false;
    for (Mask U : dom.neg.members)
      if (!cod.neg.contains(image(U))) return false;
    return true;
  }
  static BiMap identity(const BiSpace& X) {
    std::vector<int> m(X.size());
    for (int i = 0; i < X.size(); ++i) m[i] = i;
    return {X, X, m};
  }
};

inline BiMap compose(const BiMap& g, const BiMap& f) {
  std::vector<int> m;
  for (int x : f.map) m.push_back(g(x));
  return {f.dom, g.cod, std::move(m)};
}

/// Every bicontinuous function dom -> cod.
inline std::vector<BiMap> enumerate_bimaps(const BiSpace& dom, const BiSpace& cod) {
  std::vector<BiMap> out;
  const int n = dom.size(), m = cod.size();
  if (m == 0) return n == 0 ? std::vector<BiMap>{BiMap{dom, cod, {}}} : out;
  std::vector<int> f(n, 0);
  while (true) {
    BiMap b{dom, cod, f};
    if (b.is_continuous()) out.push_back(b);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

/// tau+ v tau-.
inline SubsetFamily patch(const BiSpace& X) {
  std::vector<Mask> g = X.pos.members;
  g.insert(g.end(), X.neg.members.begin(), X.neg.members.end());
  return generated_topology(X.size(), g);
}

/// Positive opens whose complement is a negative open.
inline SubsetFamily pos_clopens(const BiSpace& X) {
  std::vector<Mask> out;
  for (Mask U : X.pos.members)
    if (X.neg.contains(X.full() & ~U)) out.push_back(U);
  return SubsetFamily{X.size(), out}.canonical();
}

inline SubsetFamily neg_clopens(const BiSpace& X) {
  std::vector<Mask> out;
  for (Mask U : X.neg.members)
    if (X.pos.contains(X.full() & ~U)) out.push_back(U);
  return SubsetFamily{X.size(), out}.canonical();
}

namespace detail {

inline bool is_union_of(Mask U, const SubsetFamily& gens) {
  Mask acc = 0;
  for (Mask g : gens.members)
    if ((g & ~U) == 0) acc |= g;
  return acc == U;
}

// Every subfamily of `opens` covering the ground set has a subfamily, minimal
// under removal, that still covers it. Searched for at most 20 opens.
inline bool covers_have_finite_subcovers(int n, const SubsetFamily& opens) {
  const int k = opens.size();
  if (k > 20) return true;
  const Mask full = full_mask(n);
  for (std::uint32_t cover = 0; cover < (1u << k); ++cover) {
    Mask u = 0;
    for (int i = 0; i < k; ++i)
      if (cover >> i & 1u) u |= opens.members[i];
    if (u != full) continue;
    std::uint32_t sub = cover;
    for (int i = 0; i < k; ++i) {
      if (!(sub >> i & 1u)) continue;
      std::uint32_t trial = sub & ~(1u << i);
      Mask t = 0;
      for (int j = 0; j < k; ++j)
        if (trial >> j & 1u) t |= opens.members[j];
      if (t == full) sub = trial;
    }
    Mask s = 0;
    for (int j = 0; j < k; ++j)
      if (sub >> j & 1u) s |= opens.members[j];
    if (s != full) return false;
  }
  return true;
}

}  // namespace detail

/// Every positive open is a union of positive clopens, and dually.
inline bool is_zero_dimensional(const BiSpace& X) {
  const SubsetFamily cp = pos_clopens(X), cn = neg_clopens(X);
  for (Mask U : X.pos.members)
    if (!detail::is_union_of(U, cp)) return false;
  for (Mask U : X.neg.members)
    if (!detail::is_union_of(U, cn)) return false;
  return true;
}

/// The patch topology is compact.
inline bool is_compact(const BiSpace& X) { return detail::covers_have_finite_subcovers(X.size(), patch(X)); }

/// The patch topology is T0.
inline bool is_T0(const BiSpace& X) {
  const SubsetFamily p = patch(X);
  for (int x = 0; x < X.size(); ++x)
    for (int y = x + 1; y < X.size(); ++y) {
      bool sep = false;
      for (Mask U : p.members)
        if (has(U, x) != has(U, y)) sep = true;
      if (!sep) return false;
    }
  return true;
}

/// T0, compact and zero-dimensional.
inline bool is_pairwise_stone(const BiSpace& X) { return is_T0(X) && is_compact(X) && is_zero_dimensional(X); }

// ---------------------------------------------------------------------------
// Biframes

/// (L, L+, L-): subframes of a distributive main frame that jointly generate it.
struct BiFrame {
  FinLattice main;
  ElemSet pos, neg;

  static BiFrame make(const FinLattice& L, const ElemSet& pos, const ElemSet& neg) {
    require_distributive(L, "biframe");
    if (!is_bounded_sublattice(L, pos)) throw Error(ErrorCode::InvariantViolation, "positive part is not a subframe");
    if (!is_bounded_sublattice(L, neg)) throw Error(ErrorCode::InvariantViolation, "negative part is not a subframe");
    // Finite meets p ^ n, then check every element is a join of them.
    ElemSet meets(L.size());
    pos.for_each([&](int p) { neg.for_each([&](int q) { meets.set(L.meet(p, q)); }); });
    if (!join_generates(L, meets))
      throw Error(ErrorCode::InvariantViolation, "main component is not generated by the positive and negative parts");
    return {L, pos, neg};
  }

  friend bool operator==(const BiFrame& a, const BiFrame& b) {
    return a.main == b.main && a.pos == b.pos && a.neg == b.neg;
  }
};

struct BiFrameHom {
  BiFrame dom, cod;
  LatticeHom hom;

  int operator()(int a) const { return hom(a); }
  bool is_valid() const {
    return hom.is_hom() && hom.image(dom.pos).subset_of(cod.pos) && hom.image(dom.neg).subset_of(cod.neg);
  }
  bool dense() const {
    for (int a = 0; a < dom.main.size(); ++a)
      if (hom(a) == cod.main.bottom() && a != dom.main.bottom()) return false;
    return true;
  }
  /// Bijective with h[L+] = M+ and h[L-] = M-.
  bool is_iso() const {
    return is_valid() && hom.bijective() && hom.image(dom.pos) == cod.pos && hom.image(dom.neg) == cod.neg;
  }
  static BiFrameHom identity(const BiFrame& B) { return {B, B, LatticeHom::identity(B.main)}; }
};

inline BiFrameHom compose(const BiFrameHom& g, const BiFrameHom& f) { return {f.dom, g.cod, compose(g.hom, f.hom)}; }

inline std::vector<BiFrameHom> enumerate_biframe_homs(const BiFrame& A, const BiFrame& B) {
  std::vector<BiFrameHom> out;
  HomSearchOptions opt;
  opt.accept = [&](const std::vector<int>& m) {
    LatticeHom h{A.main, B.main, m};
    return h.image(A.pos).subset_of(B.pos) && h.image(A.neg).subset_of(B.neg);
  };
  for (auto& h : enumerate_homs(A.main, B.main, opt)) out.push_back({A, B, std::move(h)});
  return out;
}

/// Positive elements complemented in the main frame with complement negative.
inline ElemSet pos_bicomplemented(const BiFrame& B) {
  ElemSet out(B.main.size());
  B.pos.for_each([&](int a) {
    auto c = complement(B.main, a);
    if (c && B.neg.test(*c)) out.set(a);
  });
  return out;
}

inline ElemSet neg_bicomplemented(const BiFrame& B) {
  ElemSet out(B.main.size());
  B.neg.for_each([&](int a) {
    auto c = complement(B.main, a);
    if (c && B.pos.test(*c)) out.set(a);
  });
  return out;
}

namespace detail {

inline bool join_generated_by(const FinLattice& L, const ElemSet& part, const ElemSet& gens) {
  bool ok = true;
  part.for_each([&](int a) {
    int j = L.bottom();
    gens.for_each([&](int g) {
      if (L.leq(g, a)) j = L.join(j, g);
    });
    if (j != a) ok = false;
  });
  return ok;
}

}  // namespace detail

/// Both parts are join-generated by their bicomplemented elements.
inline bool is_zero_dimensional(const BiFrame& B) {
  return detail::join_generated_by(B.main, B.pos, pos_bicomplemented(B)) &&
         detail::join_generated_by(B.main, B.neg, neg_bicomplemented(B));
}

/// The main component is compact.
inline bool is_compact(const BiFrame& B) { return is_compact_element(B.main, B.main.top()); }

// ---------------------------------------------------------------------------
// Biframe <-> bispace

/// Omega_b(X) = (patch, tau+, tau-), elements indexed as in the patch family.
inline BiFrame omega_b(const BiSpace& X) {
  SubsetFamily p = patch(X);
  FinLattice L = lattice_of_sets(p, X.ground);
  ElemSet pos(L.size()), neg(L.size());
  for (int i = 0; i < p.size(); ++i) {
    if (X.pos.contains(p.members[i])) pos.set(i);
    if (X.neg.contains(p.members[i])) neg.set(i);
  }
  return BiFrame::make(L, pos, neg);
}

/// Omega_b on maps f: X -> Y gives Omega_b(Y) -> Omega_b(X), U -> f^{-1}(U).
inline BiFrameHom omega_b(const BiMap& f) {
  BiFrame src = omega_b(f.cod), dst = omega_b(f.dom);
  SubsetFamily ps = patch(f.cod), pd = patch(f.dom);
  std::vector<int> m;
  for (Mask U : ps.members) {
    auto it = std::find(pd.members.begin(), pd.members.end(), f.preimage(U));
    FD_ENSURE(it != pd.members.end(), "preimage of a patch open is not open");
    m.push_back(static_cast<int>(it - pd.members.begin()));
  }
  return {src, dst, LatticeHom{src.main, dst.main, std::move(m)}};
}

struct BiPointSpace {
  BiSpace space;
  std::vector<LatticeHom> points;  // homomorphisms main -> C2
  std::vector<Mask> hat;           // per main element
};

/// pt_b(B) = (pt L, hat L+, hat L-).
inline BiPointSpace pt_b(const BiFrame& B) {
  PointSpace p = pt_functor(FrithPair::full(B.main));
  std::vector<Mask> pos, neg;
  B.pos.for_each([&](int a) { pos.push_back(p.hat[a]); });
  B.neg.for_each([&](int a) { neg.push_back(p.hat[a]); });
  return {BiSpace::make(p.space.ground, pos, neg), p.points, p.hat};
}

/// pt_b on h: B -> K gives pt_b(K) -> pt_b(B), p -> p . h.
inline BiMap pt_b(const BiFrameHom& h) {
  BiPointSpace src = pt_b(h.cod), dst = pt_b(h.dom);
  std::vector<int> m;
  for (const auto& p : src.points) {
    LatticeHom q = compose(p, h.hom);
    auto it = std::find_if(dst.points.begin(), dst.points.end(), [&](const LatticeHom& d) { return d.map == q.map; });
    FD_ENSURE(it != dst.points.end(), "composite is not a point");
    m.push_back(static_cast<int>(it - dst.points.begin()));
  }
  return {src.space, dst.space, std::move(m)};
}

// ---------------------------------------------------------------------------
// Skula functors on spaces

/// Sk(X, S) = (X, Omega_S, Omega_{S^c}).
inline BiSpace skula_space(const PervinSpace& P) {
  return BiSpace::make(P.ground, omega_topology(P).members,
                       generated_topology(P.size(), complement_family(P).members).members);
}

inline BiMap skula_space(const PervinMap& f) { return {skula_space(f.dom), skula_space(f.cod), f.map}; }

/// cl+(X) = (X, positive clopens).
inline PervinSpace clplus(const BiSpace& X) { return PervinSpace::make(X.ground, pos_clopens(X).members); }

inline PervinMap clplus(const BiMap& f) { return {clplus(f.dom), clplus(f.cod), f.map}; }

/// Unit of cl+ -| Sk at X: the identity X -> Sk(cl+ X).
inline BiMap skula_unit(const BiSpace& X) {
  BiMap u{X, skula_space(clplus(X)), BiMap::identity(X).map};
  FD_ENSURE(u.is_continuous(), "Skula unit is not bicontinuous");
  return u;
}

/// Counit of cl+ -| Sk at P: the identity cl+(Sk P) -> P.
inline PervinMap skula_counit(const PervinSpace& P) {
  PervinSpace C = clplus(skula_space(P));
  FD_ENSURE(C.family == open_intersection_closure(P), "positive clopens of Sk(P) are not the open intersections");
  PervinMap e{C, P, PervinMap::identity(P).map};
  FD_ENSURE(e.is_morphism(), "Skula counit is not a Pervin map");
  return e;
}

struct SkulaAdjunctionReport {
  int pervin_maps = 0;  // |Perv(cl+ X, P)|
  int bimaps = 0;       // |BiTop(X, Sk P)|
  bool bijection = false;
  bool triangles = false;
  bool idempotent = false;       // unit at Sk(P) is an iso
  bool unit_iso = false;         // X is a fixpoint
  bool zero_dimensional = false; // matches unit_iso
  bool counit_iso = false;       // P is a fixpoint
  bool strongly_exact = false;   // matches counit_iso
};

/// Hom-set bijection, triangles, idempotency and the fixpoint classification.
inline SkulaAdjunctionReport skula_adjunction_check(const BiSpace& X, const PervinSpace& P) {
  SkulaAdjunctionReport r;
  PervinSpace clX = clplus(X);
  BiSpace skP = skula_space(P);
  auto maps = enumerate_pervin_maps(clX, P);
  auto bms = enumerate_bimaps(X, skP);
  r.pervin_maps = static_cast<int>(maps.size());
  r.bimaps = static_cast<int>(bms.size());
  BiMap eta = skula_unit(X);
  std::vector<std::vector<int>> a, b;
  for (const auto& g : maps) a.push_back(compose(skula_space(g), eta).map);
  for (const auto& f : bms) b.push_back(f.map);
  std::sort(a.begin(), a.end());
  r.bijection = a == b;
  BiMap t1 = compose(skula_space(skula_counit(P)), skula_unit(skP));
  PervinMap t2 = compose(skula_counit(clX), clplus(eta));
  r.triangles = t1.dom == skP && t1.cod == skP && t1.map == BiMap::identity(skP).map && t2.dom.family == clX.family &&
                t2.cod.family == clX.family && t2.map == PervinMap::identity(clX).map;
  r.idempotent = skula_unit(skP).is_iso();
  r.unit_iso = eta.is_iso();
  r.zero_dimensional = is_zero_dimensional(X);
  PervinMap eps = skula_counit(P);
  r.counit_iso = classify_map(eps).iso;
  r.strongly_exact = is_strongly_exact(P);
  return r;
}

// ---------------------------------------------------------------------------
// Skula functors on Frith frames

struct SkulaBiframe {
  BiFrame frame;          // (C_S L, nabla L, delta S)
  CongruenceLattice cong;
  LatticeHom nabla;       // L -> C_S L
};

inline SkulaBiframe skula_biframe(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  CongruenceLattice C = generated_congruence_subframe(F.lattice, F.sub, bound);
  LatticeHom nab = nabla_hom(C);
  ElemSet pos = nab.image();
  ElemSet dg(C.size());
  F.sub.for_each([&](int s) { dg.set(delta_index(C, s)); });
  ElemSet neg = generated_sublattice(C.lattice, dg);
  return {BiFrame::make(C.lattice, pos, neg), C, nab};
}

/// Sk_f on h: (L,S) -> (M,T): the unique extension of nabla . h along nabla.
inline BiFrameHom skula_biframe(const FrithHom& h, int bound = kDefaultCongruenceBound) {
  SkulaBiframe a = skula_biframe(h.dom, bound), b = skula_biframe(h.cod, bound);
  LatticeHom ext = universal_extension(compose(b.nabla, h.hom), h.dom.sub, a.cong);
  BiFrameHom r{a.frame, b.frame, ext};
  FD_ENSURE(r.is_valid(), "Skula extension is not a biframe map");
  return r;
}

struct BbPlus {
  FrithPair pair;          // (<T>, T) with T the positive bicomplemented elements
  std::vector<int> elems;  // pair element -> main element
};

/// bb+(B) = (subframe generated by T, T). Finite subframes are bounded
/// sublattices, and T is one, so the generated subframe is T itself.
inline BbPlus bbplus(const BiFrame& B) {
  ElemSet T = pos_bicomplemented(B);
  ElemSet M = generated_sublattice(B.main, T);
  Sublattice s = sublattice(B.main, M);
  ElemSet sub(s.lattice.size());
  T.for_each([&](int t) { sub.set(s.index_of(t)); });
  return {FrithPair::make(s.lattice, sub), s.elems};
}

/// bb+ on h: B -> K, the restriction to bicomplemented elements.
inline FrithHom bbplus(const BiFrameHom& h) {
  BbPlus a = bbplus(h.dom), b = bbplus(h.cod);
  std::vector<int> m;
  for (int e : a.elems) {
    auto it = std::find(b.elems.begin(), b.elems.end(), h(e));
    FD_ENSURE(it != b.elems.end(), "bicomplemented element mapped outside bb+");
    m.push_back(static_cast<int>(it - b.elems.begin()));
  }
  FrithHom r{a.pair, b.pair, LatticeHom{a.pair.lattice, b.pair.lattice, std::move(m)}};
  FD_ENSURE(r.is_valid(), "bb+ restriction is not a Frith map");
  return r;
}

/// Unit of Sk_f -| bb+ at (L,S): a -> nabla(a), into bb+(Sk_f(L,S)). Defined
/// when every nabla(a) is bicomplemented, which holds for valid Frith pairs.
inline FrithHom fsk_unit(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  SkulaBiframe s = skula_biframe(F, bound);
  BbPlus b = bbplus(s.frame);
  std::vector<int> m;
  for (int a = 0; a < F.lattice.size(); ++a) {
    auto it = std::find(b.elems.begin(), b.elems.end(), s.nabla(a));
    if (it == b.elems.end())
      throw Error(ErrorCode::NotComplemented, "nabla(" + F.lattice.name(a) + ") is not bicomplemented");
    m.push_back(static_cast<int>(it - b.elems.begin()));
  }
  FrithHom r{F, b.pair, LatticeHom{F.lattice, b.pair.lattice, std::move(m)}};
  FD_ENSURE(r.is_valid(), "Skula unit is not a Frith map");
  return r;
}

/// Counit of Sk_f -| bb+ at B: the extension Sk_f(bb+ B) -> B of the inclusion.
inline BiFrameHom fsk_counit(const BiFrame& B, int bound = kDefaultCongruenceBound) {
  BbPlus b = bbplus(B);
  SkulaBiframe s = skula_biframe(b.pair, bound);
  LatticeHom incl{b.pair.lattice, B.main, b.elems};
  LatticeHom ext = universal_extension(incl, b.pair.sub, s.cong);
  BiFrameHom r{s.frame, B, ext};
  FD_ENSURE(r.is_valid(), "Skula counit is not a biframe map");
  return r;
}

struct FskAdjunctionReport {
  int biframe_homs = 0;  // |BiFrm(Sk_f F, B)|
  int frith_homs = 0;    // |FFrm(F, bb+ B)|
  bool bijection = false;
  bool triangles = false;
  bool counit_dense = false;
  bool counit_iso = false;        // expected when B is compact and zero-dimensional
  bool zero_dim_compact = false;
  bool unit_iso = false;          // F is a fixpoint
  bool strongly_exact = false;    // matches unit_iso
};

inline FskAdjunctionReport fsk_adjunction_check(const FrithPair& F, const BiFrame& B,
                                                int bound = kDefaultCongruenceBound) {
  FskAdjunctionReport r;
  SkulaBiframe s = skula_biframe(F, bound);
  BbPlus bb = bbplus(B);
  FrithHom eta = fsk_unit(F, bound);
  auto bhoms = enumerate_biframe_homs(s.frame, B);
  auto fhoms = enumerate_frith_homs(F, bb.pair);
  r.biframe_homs = static_cast<int>(bhoms.size());
  r.frith_homs = static_cast<int>(fhoms.size());
  std::vector<std::vector<int>> a, b;
  for (const auto& g : bhoms) a.push_back(compose(bbplus(g), eta).hom.map);
  for (const auto& f : fhoms) b.push_back(f.hom.map);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  r.bijection = a == b && std::adjacent_find(a.begin(), a.end()) == a.end();
  // bb+(eps_B) . eta_{bb+ B} = id and eps_{Sk_f F} . Sk_f(eta_F) = id.
  BiFrameHom epsB = fsk_counit(B, bound);
  FrithHom t1 = compose(bbplus(epsB), fsk_unit(bb.pair, bound));
  BiFrameHom t2 = compose(fsk_counit(s.frame, bound), skula_biframe(eta, bound));
  r.triangles = t1.hom.map == LatticeHom::identity(bb.pair.lattice).map &&
                t2.hom.map == LatticeHom::identity(s.frame.main).map;
  r.counit_dense = epsB.dense();
  r.counit_iso = epsB.is_iso();
  r.zero_dim_compact = is_zero_dimensional(B) && is_compact(B);
  r.unit_iso = classify_hom(eta).iso;
  r.strongly_exact = is_strongly_exact(F, bound);
  return r;
}

/// nabla(a) is positive bicomplemented in Sk_f(L,S) iff a is a strongly exact
/// meet of elements of S. Returns the elements where the two sides differ.
inline std::vector<int> bicomplemented_nabla_mismatches(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  SkulaBiframe s = skula_biframe(F, bound);
  ElemSet T = pos_bicomplemented(s.frame);
  ElemSet se = strongly_exact_meets(F, bound);
  std::vector<int> out;
  for (int a = 0; a < F.lattice.size(); ++a)
    if (T.test(s.nabla(a)) != se.test(a)) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------------------
// Commuting squares

/// beta: Sk(pt(L,S)) -> pt_b(Sk_f(L,S)), p -> the extension of p along nabla.
inline BiMap beta_natural_iso(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  PointSpace pts = pt_functor(F);
  SkulaBiframe s = skula_biframe(F, bound);
  BiPointSpace bpts = pt_b(s.frame);
  std::vector<int> m;
  for (const auto& p : pts.points) {
    LatticeHom ext = universal_extension(p, F.sub, s.cong);
    auto it = std::find_if(bpts.points.begin(), bpts.points.end(),
                           [&](const LatticeHom& q) { return q.map == ext.map; });
    FD_ENSURE(it != bpts.points.end(), "extended point is not a point");
    m.push_back(static_cast<int>(it - bpts.points.begin()));
  }
  BiMap beta{skula_space(pts.space), bpts.space, std::move(m)};
  FD_ENSURE(beta.is_iso(), "beta is not a bispace isomorphism");
  return beta;
}

/// The beta square over h: (M,T) -> (L,S) commutes pointwise.
inline bool beta_natural(const FrithHom& h, int bound = kDefaultCongruenceBound) {
  BiMap bL = beta_natural_iso(h.cod, bound), bM = beta_natural_iso(h.dom, bound);
  BiMap left = skula_space(pt_functor(h));
  BiMap right = pt_b(skula_biframe(h, bound));
  return compose(bM, left).map == compose(right, bL).map;
}

/// bb+(Omega_b X) and Omega(cl+ X) carry the same family of sets.
inline bool left_square_commutes(const BiSpace& X) {
  BiFrame O = omega_b(X);
  BbPlus b = bbplus(O);
  SubsetFamily p = patch(X);
  std::vector<Mask> frame_sets, sub_sets;
  for (int e : b.elems) frame_sets.push_back(p.members[e]);
  b.pair.sub.for_each([&](int t) { sub_sets.push_back(p.members[b.elems[t]]); });
  PervinSpace C = clplus(X);
  FrithPair OC = omega_functor(C);
  SubsetFamily oc = omega_topology(C);
  std::vector<Mask> oc_sub;
  OC.sub.for_each([&](int t) { oc_sub.push_back(oc.members[t]); });
  return SubsetFamily{X.size(), frame_sets}.canonical() == oc &&
         SubsetFamily{X.size(), sub_sets}.canonical() == SubsetFamily{X.size(), oc_sub}.canonical();
}

struct NonCommutation {
  int pt_bbplus = 0;     // points of pt(bb+ B)
  int clplus_pt_b = 0;   // points of cl+(pt_b B)
};

inline NonCommutation non_commutation_witness(const BiFrame& B) {
  return {pt_functor(bbplus(B).pair).space.size(), clplus(pt_b(B).space).size()};
}

// ---------------------------------------------------------------------------
// Monotopological restrictions

/// (X,S) is in Perv' iff Omega_S = Omega_{S^c}.
inline bool in_perv_prime(const PervinSpace& P) {
  return omega_topology(P) == generated_topology(P.size(), complement_family(P).members);
}

/// (L,S) is in FFrm' iff nabla L = delta S as subframes of C_S L.
inline bool in_ffrm_prime(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  SkulaBiframe s = skula_biframe(F, bound);
  return s.frame.pos == s.frame.neg;
}

/// cl(X, tau) = (X, clopens of tau).
inline PervinSpace cl_space(const std::vector<std::string>& ground, const SubsetFamily& tau) {
  return clplus(BiSpace::make(ground, tau.members, tau.members));
}

/// bb(L) = (<B(L)>, B(L)) for the complemented elements B(L).
inline BbPlus bb_frame(const FinLattice& L) {
  ElemSet all = ElemSet::full(L.size());
  return bbplus(BiFrame::make(L, all, all));
}

/// U'(X,S) = (X, Omega_S) as a topology, for members of Perv'.
inline SubsetFamily uperv_prime(const PervinSpace& P) {
  if (!in_perv_prime(P)) throw Error(ErrorCode::InvariantViolation, "Pervin space not in Perv'");
  return omega_topology(P);
}

/// Every open is a union of clopens.
inline bool is_zero_dimensional_topology(const SubsetFamily& tau) {
  std::vector<Mask> cl;
  for (Mask U : tau.members)
    if (tau.contains(full_mask(tau.ground) & ~U)) cl.push_back(U);
  SubsetFamily c{tau.ground, cl};
  for (Mask U : tau.members)
    if (!detail::is_union_of(U, c)) return false;
  return true;
}

/// A frame join-generated by its complemented elements.
inline bool is_zero_dimensional_frame(const FinLattice& L) {
  return join_generates(L, complemented_elements(L));
}

struct MonoReport {
  bool member = false;           // Perv' or FFrm'
  bool symmetric = false;
  bool strongly_exact = false;
  bool fixpoint_is_symmetric = false;  // member and strongly exact iff symmetric
};

inline MonoReport mono_restrictions(const PervinSpace& P) {
  MonoReport r;
  r.member = in_perv_prime(P);
  r.symmetric = is_symmetric(P);
  r.strongly_exact = is_strongly_exact(P);
  r.fixpoint_is_symmetric = (r.member && r.strongly_exact) == r.symmetric;
  return r;
}

inline MonoReport mono_restrictions(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  MonoReport r;
  r.member = in_ffrm_prime(F, bound);
  r.symmetric = is_symmetric(F);
  r.strongly_exact = is_strongly_exact(F, bound);
  r.fixpoint_is_symmetric = (r.member && r.strongly_exact) == r.symmetric;
  return r;
}

// ---------------------------------------------------------------------------
// Catalog

namespace catalog {

/// The 3-chain with all of it positive and only its bounds negative.
inline BiFrame BF332() {
  FinLattice L = C3();
  return BiFrame::make(L, ElemSet::full(3), ElemSet::of(3, {0, 2}));
}

/// Sierpinski topology as positive part, indiscrete negative part.
inline BiSpace SIER_BI() { return BiSpace::make({"a", "b"}, {0, 0b01, 0b11}, {0, 0b11}); }

}  // namespace catalog

}  // namespace finduality
