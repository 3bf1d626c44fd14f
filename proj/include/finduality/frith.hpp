#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "finduality/congruence.hpp"
#include "finduality/lattice.hpp"
#include "finduality/pervin.hpp"

namespace finduality {

/// A distributive lattice L with a bounded sublattice S. It is a Frith frame
/// when S is join-dense, which for finite L means S = L.
struct FrithPair {
  FinLattice lattice;
  ElemSet sub;

  static FrithPair make(const FinLattice& L, const ElemSet& S) {
    require_distributive(L, "Frith pair");
    if (S.universe() != L.size()) throw Error(ErrorCode::InvariantViolation, "sub set has wrong universe");
    if (!is_bounded_sublattice(L, S))
      throw Error(ErrorCode::InvariantViolation, "distinguished subset must be a bounded sublattice");
    return {L, S};
  }
  static FrithPair full(const FinLattice& L) { return make(L, ElemSet::full(L.size())); }

  bool is_frith() const {
    const bool dense = join_generates(lattice, sub);
    FD_ENSURE(dense == (sub.count() == lattice.size()), "finite join-dense sublattice differs from the lattice");
    return dense;
  }

  Sublattice sub_lattice() const { return sublattice(lattice, sub); }

  friend bool operator==(const FrithPair& a, const FrithPair& b) {
    return a.lattice == b.lattice && a.sub == b.sub;
  }
};

/// A lattice homomorphism carrying the first sublattice into the second.
struct FrithHom {
  FrithPair dom, cod;
  LatticeHom hom;

  int operator()(int a) const { return hom(a); }
  bool is_valid() const { return hom.is_hom() && hom.image(dom.sub).subset_of(cod.sub); }

  static FrithHom identity(const FrithPair& F) { return {F, F, LatticeHom::identity(F.lattice)}; }

  friend bool operator==(const FrithHom& a, const FrithHom& b) {
    return a.hom.map == b.hom.map && a.dom == b.dom && a.cod == b.cod;
  }
};

inline FrithHom compose(const FrithHom& g, const FrithHom& f) {
  FD_ENSURE(f.cod == g.dom, "composition of non-composable Frith maps");
  return {f.dom, g.cod, compose(g.hom, f.hom)};
}

inline std::vector<FrithHom> enumerate_frith_homs(const FrithPair& A, const FrithPair& B) {
  HomSearchOptions opt;
  opt.accept = [&](const std::vector<int>& m) {
    bool ok = true;
    A.sub.for_each([&](int s) {
      if (!B.sub.test(m[s])) ok = false;
    });
    return ok;
  };
  std::vector<FrithHom> out;
  for (auto& h : enumerate_homs(A.lattice, B.lattice, opt)) out.push_back({A, B, std::move(h)});
  return out;
}

struct HomClass {
  bool mono = false;
  bool extremal_epi = false;
  bool dense = false;
  bool iso = false;
};

/// Isomorphism means a bijection with h[S] = T; on Frith frames this coincides
/// with injective plus h[S] = T.
inline HomClass classify_hom(const FrithHom& h) {
  HomClass c;
  c.mono = h.hom.injective();
  c.extremal_epi = h.hom.image(h.dom.sub) == h.cod.sub;
  c.dense = true;
  for (int a = 0; a < h.dom.lattice.size(); ++a)
    if (h(a) == h.cod.lattice.bottom() && a != h.dom.lattice.bottom()) c.dense = false;
  c.iso = c.mono && h.hom.surjective() && c.extremal_epi;
  if (h.dom.is_frith() && h.cod.is_frith()) FD_ENSURE(c.iso == (c.mono && c.extremal_epi), "Frith iso criteria differ");
  return c;
}

// ---------------------------------------------------------------------------
// Points and opens

struct PointSpace {
  PervinSpace space;
  std::vector<LatticeHom> points;  // homomorphisms L -> C2
  std::vector<Mask> hat;           // per element of L: points sending it to 1
};

/// Prime elements: p != top with a ^ b <= p implying a <= p or b <= p.
inline std::vector<int> prime_elements(const FinLattice& L) {
  std::vector<int> out;
  for (int p = 0; p < L.size(); ++p) {
    if (p == L.top()) continue;
    bool prime = true;
    for (int a = 0; a < L.size() && prime; ++a)
      for (int b = 0; b < L.size() && prime; ++b)
        if (L.leq(L.meet(a, b), p) && !L.leq(a, p) && !L.leq(b, p)) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

/// (pt L, {s-hat : s in S}); points are the homomorphisms L -> C2, cross-checked
/// against the prime elements of L.
inline PointSpace pt_functor(const FrithPair& F) {
  const FinLattice& L = F.lattice;
  const FinLattice two = catalog::C2();
  PointSpace r;
  r.points = enumerate_homs(L, two);
  const int n = static_cast<int>(r.points.size());
  if (n > kMaxGround) throw Error(ErrorCode::SizeExceeded, "more than 64 points");
  auto primes = prime_elements(L);
  FD_ENSURE(static_cast<int>(primes.size()) == n, "points and prime elements differ in number");
  std::vector<std::string> names;
  for (const auto& p : r.points) {
    int kernel_top = L.bottom(), filter_bottom = L.top();
    for (int a = 0; a < L.size(); ++a) {
      if (p(a) == 0) kernel_top = L.join(kernel_top, a);
      else filter_bottom = L.meet(filter_bottom, a);
    }
    FD_ENSURE(std::find(primes.begin(), primes.end(), kernel_top) != primes.end(), "point kernel is not prime");
    names.push_back("pt(" + L.name(filter_bottom) + ")");
  }
  r.hat.assign(L.size(), 0);
  for (int a = 0; a < L.size(); ++a)
    for (int k = 0; k < n; ++k)
      if (r.points[k](a) == 1) r.hat[a] |= bit(k);
  std::vector<Mask> fam;
  F.sub.for_each([&](int s) { fam.push_back(r.hat[s]); });
  r.space = PervinSpace::make(std::move(names), fam);
  return r;
}

/// pt on a Frith map h: (L,S) -> (M,T) gives pt(M,T) -> pt(L,S), p -> p . h.
inline PervinMap pt_functor(const FrithHom& h) {
  auto src = pt_functor(h.cod);
  auto dst = pt_functor(h.dom);
  std::vector<int> m;
  for (const auto& p : src.points) {
    LatticeHom q = compose(p, h.hom);
    auto it = std::find_if(dst.points.begin(), dst.points.end(), [&](const LatticeHom& d) { return d.map == q.map; });
    FD_ENSURE(it != dst.points.end(), "composite is not a point");
    m.push_back(static_cast<int>(it - dst.points.begin()));
  }
  return {src.space, dst.space, std::move(m)};
}

/// (Omega_S(X), S): the generated topology ordered by inclusion with S marked.
inline FrithPair omega_functor(const PervinSpace& P) {
  SubsetFamily omega = omega_topology(P);
  FinLattice L = lattice_of_sets(omega, P.ground);
  ElemSet S(L.size());
  for (Mask m : P.family.members) {
    auto it = std::find(omega.members.begin(), omega.members.end(), m);
    S.set(static_cast<int>(it - omega.members.begin()));
  }
  return FrithPair::make(L, S);
}

/// Omega on a Pervin map f: P -> Q gives Omega(Q) -> Omega(P), U -> f^{-1}(U).
inline FrithHom omega_functor(const PervinMap& f) {
  FrithPair src = omega_functor(f.cod), dst = omega_functor(f.dom);
  SubsetFamily os = omega_topology(f.cod), od = omega_topology(f.dom);
  std::vector<int> m;
  for (Mask U : os.members) {
    auto it = std::find(od.members.begin(), od.members.end(), f.preimage(U));
    FD_ENSURE(it != od.members.end(), "preimage of an open is not open");
    m.push_back(static_cast<int>(it - od.members.begin()));
  }
  return {src, dst, LatticeHom{src.lattice, dst.lattice, std::move(m)}};
}

/// Unit of Omega -| pt: x -> (U -> [x in U]).
inline PervinMap omega_pt_unit(const PervinSpace& P) {
  FrithPair O = omega_functor(P);
  PointSpace pts = pt_functor(O);
  SubsetFamily omega = omega_topology(P);
  std::vector<int> m;
  for (int x = 0; x < P.size(); ++x) {
    std::vector<int> ev;
    for (Mask U : omega.members) ev.push_back(has(U, x) ? 1 : 0);
    auto it = std::find_if(pts.points.begin(), pts.points.end(), [&](const LatticeHom& p) { return p.map == ev; });
    FD_ENSURE(it != pts.points.end(), "evaluation at a point is not a frame point");
    m.push_back(static_cast<int>(it - pts.points.begin()));
  }
  return {P, pts.space, std::move(m)};
}

/// Counit of Omega -| pt, as a Frith map F -> Omega(pt F): a -> a-hat.
inline FrithHom omega_pt_counit(const FrithPair& F) {
  PointSpace pts = pt_functor(F);
  FrithPair O = omega_functor(pts.space);
  SubsetFamily omega = omega_topology(pts.space);
  std::vector<int> m;
  for (int a = 0; a < F.lattice.size(); ++a) {
    auto it = std::find(omega.members.begin(), omega.members.end(), pts.hat[a]);
    FD_ENSURE(it != omega.members.end(), "a-hat is not open");
    m.push_back(static_cast<int>(it - omega.members.begin()));
  }
  return {F, O, LatticeHom{F.lattice, O.lattice, std::move(m)}};
}

struct DualAdjunctionReport {
  int pervin_maps = 0;  // |Perv(P, pt F)|
  int frith_homs = 0;   // |FFrm(F, Omega P)|
  bool bijection = false;
  bool triangles = false;
};

/// Hom-set bijection Perv(P, pt F) = FFrm(F, Omega P) via h -> pt(h) . unit, and
/// both triangle identities at P and F.
inline DualAdjunctionReport dual_adjunction_check(const PervinSpace& P, const FrithPair& F) {
  DualAdjunctionReport r;
  FrithPair O = omega_functor(P);
  PervinMap eta = omega_pt_unit(P);
  auto ptF = pt_functor(F).space;
  auto maps = enumerate_pervin_maps(P, ptF);
  auto homs = enumerate_frith_homs(F, O);
  r.pervin_maps = static_cast<int>(maps.size());
  r.frith_homs = static_cast<int>(homs.size());
  std::vector<std::vector<int>> images;
  for (const auto& h : homs) images.push_back(compose(pt_functor(h), eta).map);
  std::sort(images.begin(), images.end());
  std::vector<std::vector<int>> expected;
  for (const auto& f : maps) expected.push_back(f.map);
  r.bijection = images == expected && std::adjacent_find(images.begin(), images.end()) == images.end();
  // pt(eps_F) . eta_{pt F} = id and Omega(eta_P) . eps_{Omega P} = id.
  FrithHom eps = omega_pt_counit(F);
  PervinMap t1 = compose(pt_functor(eps), omega_pt_unit(ptF));
  FrithHom t2 = compose(omega_functor(eta), omega_pt_counit(O));
  r.triangles = t1.map == PervinMap::identity(ptF).map && t2.hom.map == LatticeHom::identity(O.lattice).map;
  return r;
}

// ---------------------------------------------------------------------------
// Symmetrization

struct Fsym {
  FrithPair pair;          // (C_S L, Boolean sublattice generated by nabla S and delta S)
  CongruenceLattice cong;
  FrithHom unit;           // (L,S) -> fsym(L,S), a -> nabla(a)
};

inline Fsym fsym(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  CongruenceLattice C = generated_congruence_subframe(F.lattice, F.sub, bound);
  LatticeHom nab = nabla_hom(C);
  ElemSet gens(C.size());
  F.sub.for_each([&](int s) {
    gens.set(nab(s));
    gens.set(delta_index(C, s));
  });
  ElemSet B = generated_sublattice(C.lattice, gens);
  FrithPair sym = FrithPair::make(C.lattice, B);
  FD_ENSURE(is_boolean(sym.sub_lattice().lattice), "symmetrization is not Boolean");
  FrithHom unit{F, sym, nab};
  FD_ENSURE(unit.is_valid(), "nabla is not a Frith map");
  return {sym, C, unit};
}

/// A pair whose distinguished sublattice is Boolean.
inline bool is_symmetric(const FrithPair& F) { return is_boolean(F.sub_lattice().lattice); }

/// fsym on a Frith map h: (L,S) -> (M,T): the extension of nabla_M . h along nabla_L.
inline FrithHom fsym(const FrithHom& h, int bound = kDefaultCongruenceBound) {
  Fsym a = fsym(h.dom, bound), b = fsym(h.cod, bound);
  LatticeHom through = compose(b.unit.hom, h.hom);
  LatticeHom ext = universal_extension(through, h.dom.sub, a.cong);
  return {a.pair, b.pair, ext};
}

struct FsymFactorization {
  bool exists = false;
  bool unique = false;
};

/// A map (L,S) -> (M,B) with B Boolean factors uniquely through the unit.
inline FsymFactorization fsym_adjunction_check(const FrithHom& h, int bound = kDefaultCongruenceBound) {
  Fsym s = fsym(h.dom, bound);
  FsymFactorization r;
  int count = 0;
  for (const auto& g : enumerate_frith_homs(s.pair, h.cod))
    if (compose(g, s.unit).hom.map == h.hom.map) ++count;
  LatticeHom ext = universal_extension(h.hom, h.dom.sub, s.cong);
  FrithHom via{s.pair, h.cod, ext};
  r.exists = via.is_valid() && compose(via, s.unit).hom.map == h.hom.map;
  r.unique = count == 1;
  return r;
}

// ---------------------------------------------------------------------------
// Ideal completion

/// lfrith: the distinguished sublattice as a lattice.
inline FinLattice lfrith(const FrithPair& F) { return F.sub_lattice().lattice; }

/// lfrith on maps: the restriction S -> T.
inline LatticeHom lfrith(const FrithHom& h) {
  Sublattice a = h.dom.sub_lattice(), b = h.cod.sub_lattice();
  std::vector<int> m;
  for (int e : a.elems) m.push_back(b.index_of(h(e)));
  return {a.lattice, b.lattice, std::move(m)};
}

/// (Idl D, D), with D embedded as principal ideals.
inline FrithPair idlf(const FinLattice& D) { return FrithPair::full(ideal_lattice(D).lattice); }

/// idlf on homomorphisms: down(a) -> down(g(a)).
inline FrithHom idlf(const LatticeHom& g) {
  FrithPair a = idlf(g.dom), b = idlf(g.cod);
  return {a, b, LatticeHom{a.lattice, b.lattice, g.map}};
}

struct Completion {
  FrithPair pair;  // (Idl S, S)
  FrithHom counit; // J -> join of J
  IdealLattice ideals;
};

inline Completion completion(const FrithPair& F) {
  Sublattice s = F.sub_lattice();
  IdealLattice I = ideal_lattice(s.lattice);
  FrithPair P = FrithPair::full(I.lattice);
  std::vector<int> m;
  for (const auto& J : I.ideals) {
    int j = F.lattice.bottom();
    J.for_each([&](int e) { j = F.lattice.join(j, s.elems[e]); });
    m.push_back(j);
  }
  FrithHom c{P, F, LatticeHom{P.lattice, F.lattice, m}};
  FD_ENSURE(c.is_valid(), "completion counit is not a Frith map");
  HomClass k = classify_hom(c);
  FD_ENSURE(k.dense && k.extremal_epi, "completion counit is not a dense extremal epimorphism");
  return {P, c, I};
}

struct CompletenessReport {
  bool coherent = false;
  bool ideal_iso = false;
  std::optional<bool> definitional;  // up to the supplied bound
  int bound = 0;
  bool value() const { return coherent; }
};

/// Structural routes (coherence; L iso to Idl S over S) and, with bound > 0, the
/// definitional route: every dense extremal epimorphism onto fsym(L,S) from a
/// symmetric Frith frame (B,B), |B| = 2^k with k <= bound, is an isomorphism.
inline CompletenessReport is_complete(const FrithPair& F, int bound = 0) {
  CompletenessReport r;
  r.coherent = is_coherent_pair(F.lattice, F.sub);
  Completion c = completion(F);
  r.ideal_iso = c.pair.lattice.size() == F.lattice.size() &&
                find_isomorphism(c.pair.lattice, F.lattice, c.counit.hom.map).has_value();
  FD_ENSURE(r.coherent == r.ideal_iso, "coherence and ideal completion routes disagree");
  r.bound = bound;
  if (bound > 0) {
    Fsym s = fsym(F);
    bool ok = true;
    for (int k = 0; k <= bound && ok; ++k) {
      FrithPair B = FrithPair::full(catalog::powerset(k));
      for (const auto& h : enumerate_frith_homs(B, s.pair)) {
        HomClass hc = classify_hom(h);
        if (hc.dense && hc.extremal_epi && !hc.iso) {
          ok = false;
          break;
        }
      }
    }
    r.definitional = ok;
    if (F.is_frith()) FD_ENSURE(ok == r.coherent, "definitional completeness disagrees on a Frith frame");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Strong exactness

/// All a such that the join of delta(s) over some P in S is delta(a) (open).
inline ElemSet strongly_exact_meets(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  const FinLattice& L = F.lattice;
  detail::guard_size(L, bound);
  std::vector<Congruence> deltas;
  for (int a = 0; a < L.size(); ++a) deltas.push_back(delta(L, a));
  auto S = F.sub.indices();
  if (S.size() > 16) throw Error(ErrorCode::SizeExceeded, "strongly exact meets limited to 16 generators");
  ElemSet out(L.size());
  for (std::uint32_t sub = 0; sub < (1u << S.size()); ++sub) {
    std::vector<Congruence> ds;
    int meet = L.top();
    for (std::size_t i = 0; i < S.size(); ++i)
      if (sub >> i & 1u) {
        ds.push_back(deltas[S[i]]);
        meet = L.meet(meet, S[i]);
      }
    Congruence j = congruence_join(L, ds);
    for (int a = 0; a < L.size(); ++a)
      if (deltas[a] == j) {
        FD_ENSURE(a == meet, "open join of deltas is not the delta of the meet");
        out.set(a);
      }
  }
  return out;
}

inline bool is_strongly_exact(const FrithPair& F, int bound = kDefaultCongruenceBound) {
  return strongly_exact_meets(F, bound).subset_of(F.sub);
}

// ---------------------------------------------------------------------------
// Scott-open filters

/// Proper filter such that every directed set with join in F meets F.
inline bool is_scott_open(const FinLattice& L, const ElemSet& F) {
  if (!is_filter(L, F) || F.test(L.bottom())) return false;
  const int n = L.size();
  if (n > 16) throw Error(ErrorCode::SizeExceeded, "directed subset enumeration limited to 16 elements");
  for (std::uint32_t d = 1; d < (1u << n); ++d) {
    bool directed = true;
    for (int a = 0; a < n && directed; ++a)
      for (int b = 0; b < n && directed; ++b) {
        if (!(d >> a & 1u) || !(d >> b & 1u)) continue;
        bool ub = false;
        for (int c = 0; c < n && !ub; ++c)
          if ((d >> c & 1u) && L.leq(a, c) && L.leq(b, c)) ub = true;
        directed = ub;
      }
    if (!directed) continue;
    int j = L.bottom();
    bool meets = false;
    for (int a = 0; a < n; ++a)
      if (d >> a & 1u) {
        j = L.join(j, a);
        if (F.test(a)) meets = true;
      }
    if (F.test(j) && !meets) return false;
  }
  return true;
}

/// Proper filters of L by subset enumeration (at most 16 elements).
inline std::vector<ElemSet> proper_filters(const FinLattice& L) {
  const int n = L.size();
  if (n > 16) throw Error(ErrorCode::SizeExceeded, "filter enumeration limited to 16 elements");
  std::vector<ElemSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (m >> L.bottom() & 1u) continue;
    ElemSet F(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) F.set(i);
    if (is_filter(L, F)) out.push_back(F);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ScottReport {
  int filters = 0;
  int scott_open = 0;
  bool closed_under_strongly_exact_meets = true;
};

/// Every proper filter is Scott-open finitely, and each contains the meet of
/// any of its subsets whose meet is strongly exact.
inline ScottReport scott_strong_exact_check(const FinLattice& L) {
  ScottReport r;
  std::vector<Congruence> deltas;
  for (int a = 0; a < L.size(); ++a) deltas.push_back(delta(L, a));
  for (const auto& F : proper_filters(L)) {
    ++r.filters;
    if (is_scott_open(L, F)) ++r.scott_open;
    auto mem = F.indices();
    if (mem.size() > 12) throw Error(ErrorCode::SizeExceeded, "filter too large for subset check");
    for (std::uint32_t sub = 0; sub < (1u << mem.size()); ++sub) {
      std::vector<Congruence> ds;
      int meet = L.top();
      for (std::size_t i = 0; i < mem.size(); ++i)
        if (sub >> i & 1u) {
          ds.push_back(deltas[mem[i]]);
          meet = L.meet(meet, mem[i]);
        }
      if (congruence_join(L, ds) == deltas[meet] && !F.test(meet)) r.closed_under_strongly_exact_meets = false;
    }
  }
  FD_ENSURE(r.scott_open == r.filters, "finite filter that is not Scott-open");
  return r;
}

// ---------------------------------------------------------------------------
// Sublocales and right adjoints

/// Least subset containing G closed under all meets and under a -> x for every a in L.
inline ElemSet generated_sublocale(const FinLattice& L, const ElemSet& G) {
  require_distributive(L, "generated_sublocale");
  ElemSet K = G;
  K.set(L.top());
  for (bool grew = true; grew;) {
    grew = false;
    auto cur = K.indices();
    for (int x : cur) {
      for (int a = 0; a < L.size(); ++a) {
        int v = heyting_arrow(L, a, x);
        if (!K.test(v)) {
          K.set(v);
          grew = true;
        }
      }
      for (int y : cur) {
        int v = L.meet(x, y);
        if (!K.test(v)) {
          K.set(v);
          grew = true;
        }
      }
    }
  }
  return K;
}

/// The meet of {b -> s : b in L, s in S, a <= b -> s}.
inline int sublocale_meet_formula(const FinLattice& L, const ElemSet& S, int a) {
  int r = L.top();
  for (int b = 0; b < L.size(); ++b)
    S.for_each([&](int s) {
      int v = heyting_arrow(L, b, s);
      if (L.leq(a, v)) r = L.meet(r, v);
    });
  return r;
}

inline bool is_locale_based(const FrithPair& F) {
  ElemSet K = generated_sublocale(F.lattice, F.sub);
  bool by_formula = true;
  for (int a = 0; a < F.lattice.size(); ++a) {
    const bool fixed = sublocale_meet_formula(F.lattice, F.sub, a) == a;
    FD_ENSURE(fixed == K.test(a), "sublocale closure and meet formula disagree");
    if (!fixed) by_formula = false;
  }
  const bool by_closure = K.count() == F.lattice.size();
  FD_ENSURE(by_formula == by_closure, "locale-based routes disagree");
  return by_closure;
}

/// The frame quotient L -> K onto a sublocale K, x -> least member of K above x,
/// as a Frith map (L,S) -> (K,S).
inline FrithHom sublocale_quotient(const FrithPair& F, const ElemSet& K) {
  const FinLattice& L = F.lattice;
  auto elems = K.indices();
  FinLattice KL = subposet_lattice(L, elems);
  std::vector<int> m;
  for (int x = 0; x < L.size(); ++x) {
    int v = L.top();
    for (int k : elems)
      if (L.leq(x, k)) v = L.meet(v, k);
    m.push_back(static_cast<int>(std::find(elems.begin(), elems.end(), v) - elems.begin()));
  }
  ElemSet S(KL.size());
  F.sub.for_each([&](int s) { S.set(m[s]); });
  FrithHom q{F, FrithPair::make(KL, S), LatticeHom{L, KL, m}};
  FD_ENSURE(q.is_valid(), "sublocale quotient is not a Frith map");
  return q;
}

/// h_*(y) = join of {x : h(x) <= y}.
inline std::vector<int> right_adjoint(const LatticeHom& h) {
  std::vector<int> r;
  for (int y = 0; y < h.cod.size(); ++y) {
    int v = h.dom.bottom();
    for (int x = 0; x < h.dom.size(); ++x)
      if (h.cod.leq(h(x), y)) v = h.dom.join(v, x);
    r.push_back(v);
  }
  return r;
}

struct FrobeniusReport {
  bool frobenius = false;          // a -> h_*(x) = h_*(h(a) -> x)
  bool arrow_inequality = false;   // h(a -> b) <= h(a) -> h(b)
  bool adjunction = false;         // h(x) <= y iff x <= h_*(y)
};

inline FrobeniusReport frobenius_check(const LatticeHom& h) {
  const FinLattice& L = h.dom;
  const FinLattice& M = h.cod;
  auto hs = right_adjoint(h);
  FrobeniusReport r{true, true, true};
  for (int a = 0; a < L.size(); ++a)
    for (int x = 0; x < M.size(); ++x) {
      if (heyting_arrow(L, a, hs[x]) != hs[heyting_arrow(M, h(a), x)]) r.frobenius = false;
      if (M.leq(h(a), x) != L.leq(a, hs[x])) r.adjunction = false;
    }
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (!M.leq(h(heyting_arrow(L, a, b)), heyting_arrow(M, h(a), h(b)))) r.arrow_inequality = false;
  return r;
}

}  // namespace finduality
