#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finduality/lattice.hpp"

namespace finduality {

/// A finite set with a bounded sublattice of its powerset. The family is kept
/// canonical (lexicographically sorted, duplicate-free).
struct PervinSpace {
  std::vector<std::string> ground;
  SubsetFamily family;

  int size() const { return static_cast<int>(ground.size()); }
  Mask full() const { return full_mask(size()); }

  static std::vector<std::string> letters(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
    return v;
  }

  /// Validates and canonicalizes.
  static PervinSpace make(std::vector<std::string> ground, std::vector<Mask> members) {
    const int n = static_cast<int>(ground.size());
    if (n > kMaxGround) throw Error(ErrorCode::SizeExceeded, "Pervin spaces are limited to 64 points");
    SubsetFamily f = SubsetFamily{n, std::move(members)}.canonical();
    const Mask X = full_mask(n);
    for (Mask m : f.members)
      if (m & ~X) throw Error(ErrorCode::InvariantViolation, "family member outside the ground set");
    if (!f.contains(0)) throw Error(ErrorCode::InvariantViolation, "family must contain the empty set");
    if (!f.contains(X)) throw Error(ErrorCode::InvariantViolation, "family must contain the full set");
    for (Mask a : f.members)
      for (Mask b : f.members) {
        if (!f.contains(a | b))
          throw Error(ErrorCode::InvariantViolation,
                      "family must be closed under union: " + mask_to_string(a, ground) + " and " +
                          mask_to_string(b, ground));
        if (!f.contains(a & b))
          throw Error(ErrorCode::InvariantViolation,
                      "family must be closed under intersection: " + mask_to_string(a, ground) + " and " +
                          mask_to_string(b, ground));
      }
    return {std::move(ground), std::move(f)};
  }

  bool contains(Mask m) const { return family.contains(m); }

  /// Index of a member within the canonical family, or -1.
  int member_index(Mask m) const {
    auto it = std::find(family.members.begin(), family.members.end(), m);
    return it == family.members.end() ? -1 : static_cast<int>(it - family.members.begin());
  }

  /// The family ordered by inclusion; element i is family.members[i].
  FinLattice family_lattice() const { return lattice_of_sets(family, ground); }

  /// Index-based equality; point names are ignored.
  friend bool operator==(const PervinSpace& a, const PervinSpace& b) { return a.family == b.family; }
};

namespace catalog {

inline PervinSpace one_point() { return PervinSpace::make({"x"}, {0, 1}); }
/// X = {a,b}, family {0, {a}, X}.
inline PervinSpace SIER() { return PervinSpace::make({"a", "b"}, {0, 0b01, 0b11}); }
/// X = {a,b}, family {0, X}.
inline PervinSpace INDISC() { return PervinSpace::make({"a", "b"}, {0, 0b11}); }
/// X = {x,y,z}, family {0, {x}, {x,y}, X}.
inline PervinSpace P3() { return PervinSpace::make({"x", "y", "z"}, {0, 0b001, 0b011, 0b111}); }
inline PervinSpace discrete(int n) {
  std::vector<Mask> all;
  for (Mask m = 0; m <= full_mask(n); ++m) all.push_back(m);
  return PervinSpace::make(PervinSpace::letters(n), all);
}

}  // namespace catalog

/// A point map whose preimages carry codomain members into the domain family.
struct PervinMap {
  PervinSpace dom, cod;
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

  bool is_morphism() const {
    if (static_cast<int>(map.size()) != dom.size()) return false;
    for (int v : map)
      if (v < 0 || v >= cod.size()) return false;
    for (Mask T : cod.family.members)
      if (!dom.contains(preimage(T))) return false;
    return true;
  }
  bool injective() const {
    Mask seen = 0;
    for (int v : map) {
      if (has(seen, v)) return false;
      seen |= bit(v);
    }
    return true;
  }
  bool surjective() const { return image(dom.full()) == cod.full(); }

  static PervinMap identity(const PervinSpace& P) {
    std::vector<int> m(P.size());
    for (int i = 0; i < P.size(); ++i) m[i] = i;
    return {P, P, std::move(m)};
  }

  friend bool operator==(const PervinMap& a, const PervinMap& b) {
    return a.map == b.map && a.dom == b.dom && a.cod == b.cod;
  }
};

inline PervinMap compose(const PervinMap& g, const PervinMap& f) {
  FD_ENSURE(f.cod == g.dom, "composition of non-composable Pervin maps");
  std::vector<int> m(f.map.size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g.map[f.map[x]];
  return {f.dom, g.cod, std::move(m)};
}

/// All Pervin maps dom -> cod, in lexicographic order of point assignments.
inline std::vector<PervinMap> enumerate_pervin_maps(const PervinSpace& dom, const PervinSpace& cod,
                                                    bool injective_only = false) {
  std::vector<PervinMap> out;
  const int n = dom.size(), m = cod.size();
  if (m == 0 && n > 0) return out;
  std::vector<int> map(n, 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      PervinMap f{dom, cod, map};
      if (f.is_morphism()) out.push_back(std::move(f));
      return;
    }
    for (int y = 0; y < m; ++y) {
      if (injective_only && std::find(map.begin(), map.begin() + x, y) != map.begin() + x) continue;
      map[x] = y;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

/// Closure of a generating family under union and intersection, with 0 and X.
inline SubsetFamily generated_topology(int n, const std::vector<Mask>& gens) {
  return generated_set_lattice(n, gens);
}

/// The topology generated by the family; for finite X all unions are finite.
inline SubsetFamily omega_topology(const PervinSpace& P) {
  return generated_topology(P.size(), P.family.members);
}

inline SubsetFamily complement_family(const PervinSpace& P) {
  std::vector<Mask> c;
  for (Mask m : P.family.members) c.push_back(P.full() & ~m);
  return SubsetFamily{P.size(), c}.canonical();
}

struct MapClass {
  bool epi = false;
  bool extremal_mono = false;
  bool dense = false;
  bool iso = false;
};

inline MapClass classify_map(const PervinMap& f) {
  MapClass c;
  c.epi = f.surjective();
  bool every_member_is_preimage = true;
  for (Mask S : f.dom.family.members) {
    bool found = false;
    for (Mask T : f.cod.family.members)
      if (f.preimage(T) == S) found = true;
    if (!found) every_member_is_preimage = false;
  }
  c.extremal_mono = f.injective() && every_member_is_preimage;
  c.dense = true;
  for (Mask T : f.cod.family.members)
    if (f.preimage(T) == 0 && T != 0) c.dense = false;
  bool image_family = f.injective() && c.epi;
  if (image_family) {
    std::vector<Mask> img;
    for (Mask S : f.dom.family.members) img.push_back(f.image(S));
    image_family = SubsetFamily{f.cod.size(), img}.canonical() == f.cod.family;
  }
  c.iso = image_family;
  return c;
}

/// Same ground set with the Boolean subalgebra generated by the family.
inline PervinSpace symmetrize(const PervinSpace& P) {
  return {P.ground, generated_boolean_subalgebra(P.size(), P.family)};
}

/// The same point map between symmetrizations.
inline PervinMap symmetrize(const PervinMap& f) { return {symmetrize(f.dom), symmetrize(f.cod), f.map}; }

inline bool is_symmetric(const PervinSpace& P) { return symmetrize(P).family == P.family; }

/// x <= y iff every member containing x contains y.
inline Preorder specialization(const PervinSpace& P) {
  const int n = P.size();
  std::vector<char> t(static_cast<std::size_t>(n) * n, 1);
  for (Mask S : P.family.members)
    for (int x = 0; x < n; ++x)
      if (has(S, x))
        for (int y = 0; y < n; ++y)
          if (!has(S, y)) t[x * n + y] = 0;
  return Preorder(n, std::move(t));
}

/// Family of upsets of a preorder: the Pervin space it specializes to.
inline PervinSpace upset_space(const Preorder& p, std::vector<std::string> names = {}) {
  const int n = p.size();
  if (names.empty()) names = PervinSpace::letters(n);
  std::vector<Mask> ups;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    bool up = true;
    for (int x = 0; x < n && up; ++x)
      if (has(m, x))
        for (int y = 0; y < n; ++y)
          if (p.leq(x, y) && !has(m, y)) up = false;
    if (up) ups.push_back(m);
  }
  return PervinSpace::make(std::move(names), ups);
}

/// Neighborhood filter of x as a set of family-member indices.
inline ElemSet neighborhood(const PervinSpace& P, int x) {
  ElemSet s(P.family.size());
  for (int i = 0; i < P.family.size(); ++i)
    if (has(P.family.members[i], x)) s.set(i);
  return s;
}

inline bool is_T0(const PervinSpace& P) {
  const bool by_order = specialization(P).is_antisymmetric();
  bool by_nbhd = true;
  for (int x = 0; x < P.size(); ++x)
    for (int y = x + 1; y < P.size(); ++y)
      if (neighborhood(P, x) == neighborhood(P, y)) by_nbhd = false;
  FD_ENSURE(by_order == by_nbhd, "T0 via specialization and via neighborhoods disagree");
  return by_order;
}

/// Each point x lies in some S with S minus x also in the family.
inline bool td_condition1(const PervinSpace& P) {
  for (int x = 0; x < P.size(); ++x) {
    bool ok = false;
    for (Mask S : P.family.members)
      if (has(S, x) && P.contains(S & ~bit(x))) ok = true;
    if (!ok) return false;
  }
  return true;
}

/// Each point x admits distinct S1, S2 agreeing outside x.
inline bool td_condition2(const PervinSpace& P) {
  for (int x = 0; x < P.size(); ++x) {
    bool ok = false;
    for (Mask S1 : P.family.members)
      for (Mask S2 : P.family.members)
        if (S1 != S2 && (S1 & ~bit(x)) == (S2 & ~bit(x))) ok = true;
    if (!ok) return false;
  }
  return true;
}

/// Each point x is a difference S1 minus S2.
inline bool td_condition3(const PervinSpace& P) {
  for (int x = 0; x < P.size(); ++x) {
    bool ok = false;
    for (Mask S1 : P.family.members)
      for (Mask S2 : P.family.members)
        if ((S1 & ~S2) == bit(x)) ok = true;
    if (!ok) return false;
  }
  return true;
}

inline bool is_TD(const PervinSpace& P) {
  const bool a = td_condition1(P), b = td_condition2(P), c = td_condition3(P);
  FD_ENSURE(a == b && b == c, "the three T_D conditions disagree");
  return a;
}

// ---------------------------------------------------------------------------
// Cauchy filters

/// A proper filter of P(X) deciding every family member. Finite filters are
/// principal, so the filter is stored by its least member.
struct CauchyFilter {
  Mask least = 0;
  bool contains(Mask B) const { return (least & ~B) == 0; }
  /// All members, as subsets of an n-point ground set.
  std::vector<Mask> members(int n) const {
    std::vector<Mask> out;
    for (Mask m = 0; m <= full_mask(n); ++m)
      if (contains(m)) out.push_back(m);
    return out;
  }
  friend bool operator==(const CauchyFilter&, const CauchyFilter&) = default;
};

/// Nonempty A with A inside B or inside its complement for every family member B.
inline std::vector<CauchyFilter> cauchy_filters(const PervinSpace& P) {
  if (P.size() > 20) throw Error(ErrorCode::SizeExceeded, "Cauchy filter enumeration limited to 20 points");
  std::vector<CauchyFilter> out;
  const Mask X = P.full();
  for (Mask A = 1; A <= X; ++A) {
    bool ok = true;
    for (Mask B : P.family.members)
      if ((A & ~B) != 0 && (A & B) != 0) ok = false;
    if (ok) out.push_back({A});
  }
  std::sort(out.begin(), out.end(), [](const CauchyFilter& a, const CauchyFilter& b) {
    return lex_less(a.least, b.least);
  });
  return out;
}

/// Literal definition: every family of subsets of X that is a proper filter and
/// contains each member or its complement (at most 4 points).
inline std::vector<CauchyFilter> cauchy_filters_definitional(const PervinSpace& P) {
  const int n = P.size();
  if (n > 4) throw Error(ErrorCode::SizeExceeded, "definitional Cauchy filter search limited to 4 points");
  const int subsets = 1 << n;
  const Mask X = P.full();
  std::vector<CauchyFilter> out;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << subsets); ++fam) {
    auto in = [&](Mask m) { return (fam >> m & 1u) != 0; };
    if (in(0) || !in(X)) continue;
    bool ok = true;
    for (Mask a = 0; a <= X && ok; ++a) {
      if (!in(a)) continue;
      for (Mask b = 0; b <= X && ok; ++b) {
        if ((a & ~b) == 0 && !in(b)) ok = false;
        if (in(b) && !in(a & b)) ok = false;
      }
    }
    for (Mask S : P.family.members)
      if (!in(S) && !in(X & ~S)) ok = false;
    if (!ok) continue;
    Mask least = X;
    for (Mask a = 0; a <= X; ++a)
      if (in(a)) least &= a;
    FD_ENSURE(in(least), "finite filter without least member");
    out.push_back({least});
  }
  std::sort(out.begin(), out.end(), [](const CauchyFilter& a, const CauchyFilter& b) {
    return lex_less(a.least, b.least);
  });
  return out;
}

/// x lies in the intersection of the filter's members from the symmetrized family.
inline bool converges(const PervinSpace& P, const CauchyFilter& F, int x) {
  const SubsetFamily sym = generated_boolean_subalgebra(P.size(), P.family);
  Mask meet = P.full();
  for (Mask B : sym.members)
    if (F.contains(B)) meet &= B;
  return has(meet, x);
}

/// Points the filter converges to.
inline Mask limits(const PervinSpace& P, const CauchyFilter& F) {
  Mask r = 0;
  for (int x = 0; x < P.size(); ++x)
    if (converges(P, F, x)) r |= bit(x);
  return r;
}

inline bool is_cauchy_complete(const PervinSpace& P) {
  for (const auto& F : cauchy_filters(P))
    if (limits(P, F) == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Prime filter spaces and the neighborhood map

/// The lattice underlying a Pervin space.
inline FinLattice lperv(const PervinSpace& P) { return P.family_lattice(); }

/// lperv on maps: T -> f^{-1}(T), from the codomain family to the domain family.
inline LatticeHom lperv(const PervinMap& f) {
  std::vector<int> m;
  for (Mask T : f.cod.family.members) {
    int i = f.dom.member_index(f.preimage(T));
    FD_ENSURE(i >= 0, "preimage outside the domain family");
    m.push_back(i);
  }
  return {lperv(f.cod), lperv(f.dom), std::move(m)};
}

struct PrimeFilterSpace {
  PervinSpace space;
  PhiEmbedding phi;
  /// Family member of each lattice element (its tilde).
  int member_of(int a) const { return space.member_index(phi.tilde[a]); }
};

/// (pf(D), {tilde a}).
inline PrimeFilterSpace pf_space_full(const FinLattice& D) {
  PhiEmbedding phi = phi_embedding(D);
  std::vector<std::string> names;
  for (const auto& F : phi.prime_filters) names.push_back("up(" + D.name(D.meet_of(F)) + ")");
  PervinSpace S = PervinSpace::make(std::move(names), phi.tilde);
  return {std::move(S), std::move(phi)};
}

inline PervinSpace pf_space(const FinLattice& D) { return pf_space_full(D).space; }

/// pf on homomorphisms h: D -> E gives pf(E) -> pf(D), G -> h^{-1}(G).
inline PervinMap pf_space(const LatticeHom& h) {
  const auto src = prime_filters(h.cod);
  const auto dst = prime_filters(h.dom);
  std::vector<int> m;
  for (const auto& G : src) {
    ElemSet pre(h.dom.size());
    for (int a = 0; a < h.dom.size(); ++a)
      if (G.test(h(a))) pre.set(a);
    auto it = std::find(dst.begin(), dst.end(), pre);
    FD_ENSURE(it != dst.end(), "preimage of a prime filter is not prime");
    m.push_back(static_cast<int>(it - dst.begin()));
  }
  return {pf_space(h.cod), pf_space(h.dom), std::move(m)};
}

/// x -> {S in family : x in S}, into the prime filter space of the family lattice.
inline PervinMap neighborhood_map(const PervinSpace& P) {
  FinLattice L = lperv(P);
  auto pfs = prime_filters(L);
  std::vector<int> m;
  for (int x = 0; x < P.size(); ++x) {
    ElemSet nb = neighborhood(P, x);
    auto it = std::find(pfs.begin(), pfs.end(), nb);
    FD_ENSURE(it != pfs.end(), "neighborhood filter is not prime");
    m.push_back(static_cast<int>(it - pfs.begin()));
  }
  PervinMap f{P, pf_space(L), std::move(m)};
  FD_ENSURE(f.is_morphism(), "neighborhood map is not a Pervin map");
  return f;
}

/// Phi_D: D -> lperv(pf(D)), a -> tilde a. An isomorphism for finite D.
inline LatticeHom phi_hom(const FinLattice& D) {
  auto pfs = pf_space_full(D);
  std::vector<int> m;
  for (int a = 0; a < D.size(); ++a) m.push_back(pfs.member_of(a));
  return {D, lperv(pfs.space), std::move(m)};
}

// ---------------------------------------------------------------------------
// Strong exactness

/// Adds every intersection of a subfamily that is open in the generated
/// topology, to a fixpoint.
inline SubsetFamily open_intersection_closure(const PervinSpace& P) {
  const SubsetFamily omega = omega_topology(P);
  std::vector<Mask> cur = P.family.members;
  for (bool grew = true; grew;) {
    grew = false;
    const int k = static_cast<int>(cur.size());
    if (k > 20) throw Error(ErrorCode::SizeExceeded, "open intersection closure limited to 20 members");
    std::vector<Mask> next = cur;
    for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
      Mask meet = P.full();
      for (int i = 0; i < k; ++i)
        if (sub >> i & 1u) meet &= cur[i];
      if (omega.contains(meet) && std::find(next.begin(), next.end(), meet) == next.end()) {
        next.push_back(meet);
        grew = true;
      }
    }
    cur = std::move(next);
  }
  return SubsetFamily{P.size(), cur}.canonical();
}

inline bool is_strongly_exact(const PervinSpace& P) { return open_intersection_closure(P) == P.family; }

// ---------------------------------------------------------------------------
// Isomorphism of Pervin spaces

/// A bijection carrying the family of P onto that of Q, if one exists.
inline std::optional<PervinMap> find_pervin_isomorphism(const PervinSpace& P, const PervinSpace& Q) {
  const int n = P.size();
  if (n != Q.size() || P.family.size() != Q.family.size()) return std::nullopt;
  auto degree = [](const PervinSpace& S, int x) {
    int d = 0;
    for (Mask m : S.family.members)
      if (has(m, x)) ++d;
    return d;
  };
  std::vector<int> map(n, -1);
  Mask used = 0;
  std::optional<PervinMap> result;
  std::function<void(int)> rec = [&](int x) {
    if (result) return;
    if (x == n) {
      PervinMap f{P, Q, map};
      if (classify_map(f).iso) result = f;
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (has(used, y) || degree(P, x) != degree(Q, y)) continue;
      map[x] = y;
      used |= bit(y);
      rec(x + 1);
      used &= ~bit(y);
    }
  };
  rec(0);
  return result;
}

/// Lexicographically least numerically-sorted family over all relabellings (n <= 8).
inline std::vector<Mask> canonical_key(const SubsetFamily& f) {
  const int n = f.ground;
  if (n > 8) throw Error(ErrorCode::SizeExceeded, "canonical forms limited to 8 points");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Mask> best;
  do {
    std::vector<Mask> img;
    for (Mask m : f.members) {
      Mask r = 0;
      for (int x : mask_indices(m)) r |= bit(perm[x]);
      img.push_back(r);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace finduality
