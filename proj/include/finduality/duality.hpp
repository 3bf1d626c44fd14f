#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finduality/bitop.hpp"
#include "finduality/frith.hpp"
#include "finduality/laws.hpp"
#include "finduality/pervin.hpp"
#include "finduality/poset.hpp"

namespace finduality {

// ---------------------------------------------------------------------------
// Spectral spaces

namespace detail {

// Every cover of U by opens has a subcover, minimal under removal, covering U.
// Searched over the opens inside U when there are at most 12 of them.
inline bool is_compact_open(const SubsetFamily& T, Mask U) {
  std::vector<Mask> inside;
  for (Mask V : T.members)
    if (V && (V & ~U) == 0) inside.push_back(V);
  const int k = static_cast<int>(inside.size());
  if (k > 12) return true;
  for (std::uint32_t cover = 0; cover < (1u << k); ++cover) {
    Mask u = 0;
    for (int i = 0; i < k; ++i)
      if (cover >> i & 1u) u |= inside[i];
    if (u != U) continue;
    std::uint32_t sub = cover;
    for (int i = 0; i < k; ++i) {
      if (!(sub >> i & 1u)) continue;
      Mask t = 0;
      for (int j = 0; j < k; ++j)
        if (j != i && (sub >> j & 1u)) t |= inside[j];
      if (t == U) sub &= ~(1u << i);
    }
    Mask s = 0;
    for (int j = 0; j < k; ++j)
      if (sub >> j & 1u) s |= inside[j];
    if (s != U) return false;
  }
  return true;
}

inline Mask closure_of(const SubsetFamily& T, Mask A) {
  const Mask full = full_mask(T.ground);
  Mask c = full;
  for (Mask U : T.members)
    if ((U & A) == 0) c &= full & ~U;
  return c;
}

}  // namespace detail

inline bool is_topology(const SubsetFamily& T) { return T.is_bounded_sublattice(); }

/// The compact opens, by cover search.
inline SubsetFamily compact_opens(const SubsetFamily& T) {
  std::vector<Mask> out;
  for (Mask U : T.members)
    if (detail::is_compact_open(T, U)) out.push_back(U);
  return SubsetFamily{T.ground, out}.canonical();
}

/// Every irreducible closed set is the closure of exactly one point.
inline bool is_sober(const SubsetFamily& T) {
  const Mask full = full_mask(T.ground);
  std::vector<Mask> closed;
  for (Mask U : T.members) closed.push_back(full & ~U);
  for (Mask C : closed) {
    if (C == 0) continue;
    bool irreducible = true;
    for (Mask A : closed)
      for (Mask B : closed)
        if ((A | B) == C && A != C && B != C) irreducible = false;
    if (!irreducible) continue;
    int generic = 0;
    for (int x : mask_indices(C))
      if (detail::closure_of(T, bit(x)) == C) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

/// Sober, compact opens closed under finite intersections (including the empty
/// one, X) and forming a basis.
inline bool is_spectral(const SubsetFamily& T) {
  if (!is_topology(T) || !is_sober(T)) return false;
  const SubsetFamily K = compact_opens(T);
  if (!K.contains(full_mask(T.ground))) return false;
  for (Mask a : K.members)
    for (Mask b : K.members)
      if (!K.contains(a & b)) return false;
  for (Mask U : T.members)
    if (!detail::is_union_of(U, K)) return false;
  return true;
}

/// KO(X, tau) = (X, compact opens).
inline PervinSpace ko(const std::vector<std::string>& ground, const SubsetFamily& T) {
  if (!is_spectral(T)) throw Error(ErrorCode::NotSpectral, "topology is not spectral");
  return PervinSpace::make(ground, compact_opens(T).members);
}

/// U(X, S) = Omega_S(X).
inline SubsetFamily u(const PervinSpace& P) { return omega_topology(P); }

// ---------------------------------------------------------------------------
// Priestley spaces

struct PriestleySpace {
  std::vector<std::string> ground;
  SubsetFamily topology;
  FinPoset order;

  int size() const { return static_cast<int>(ground.size()); }

  static PriestleySpace make(std::vector<std::string> ground, std::vector<Mask> opens, FinPoset order) {
    const int n = static_cast<int>(ground.size());
    SubsetFamily T = SubsetFamily{n, std::move(opens)}.canonical();
    if (!is_topology(T)) throw Error(ErrorCode::InvariantViolation, "not a topology");
    if (order.size() != n) throw Error(ErrorCode::InvariantViolation, "order and ground differ in size");
    PriestleySpace Y{std::move(ground), std::move(T), std::move(order)};
    if (!detail::is_compact_open(Y.topology, full_mask(n)) && n > 0)
      throw Error(ErrorCode::InvariantViolation, "space is not compact");
    if (!Y.separated()) throw Error(ErrorCode::InvariantViolation, "Priestley separation fails");
    return Y;
  }

  bool is_upset(Mask U) const {
    for (int x : mask_indices(U))
      for (int y = 0; y < size(); ++y)
        if (order.leq(x, y) && !has(U, y)) return false;
    return true;
  }

  std::vector<Mask> clopen_upsets() const {
    const Mask full = full_mask(size());
    std::vector<Mask> out;
    for (Mask U : topology.members)
      if (topology.contains(full & ~U) && is_upset(U)) out.push_back(U);
    return out;
  }

  /// x not <= y gives a clopen upset containing x and omitting y.
  bool separated() const {
    auto cu = clopen_upsets();
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y) {
        if (order.leq(x, y)) continue;
        bool found = false;
        for (Mask U : cu)
          if (has(U, x) && !has(U, y)) found = true;
        if (!found) return false;
      }
    return true;
  }

  friend bool operator==(const PriestleySpace& a, const PriestleySpace& b) {
    if (a.size() != b.size() || a.topology != b.topology) return false;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        if (a.order.leq(x, y) != b.order.leq(x, y)) return false;
    return true;
  }
};

/// The specialization order x <= y iff every member containing x contains y.
inline FinPoset specialization_order(const PervinSpace& P) {
  if (!is_T0(P)) throw Error(ErrorCode::NotT0, "specialization preorder is not antisymmetric");
  Preorder p = specialization(P);
  return FinPoset::from_relation(p.size(), [&](int a, int b) { return p.leq(a, b); });
}

/// PP(X, S) = (X, Omega of the symmetrization, specialization order).
inline PriestleySpace pp(const PervinSpace& P) {
  return PriestleySpace::make(P.ground, omega_topology(symmetrize(P)).members, specialization_order(P));
}

/// CUP(Y) = (Y, clopen upsets).
inline PervinSpace cup(const PriestleySpace& Y) { return PervinSpace::make(Y.ground, Y.clopen_upsets()); }

/// The classical Priestley space of a spectral space: patch of tau and the
/// complements of compact opens, ordered by x <= y iff x lies in the closure of y.
inline PriestleySpace spectral_to_priestley(const std::vector<std::string>& ground, const SubsetFamily& T) {
  if (!is_spectral(T)) throw Error(ErrorCode::NotSpectral, "topology is not spectral");
  const int n = T.ground;
  const Mask full = full_mask(n);
  std::vector<Mask> gens = T.members;
  for (Mask K : compact_opens(T).members) gens.push_back(full & ~K);
  FinPoset ord = FinPoset::from_relation(n, [&](int x, int y) { return has(detail::closure_of(T, bit(y)), x); });
  return PriestleySpace::make(ground, generated_topology(n, gens).members, std::move(ord));
}

/// The classical spectral space of a Priestley space: its open upsets.
inline SubsetFamily priestley_to_spectral(const PriestleySpace& Y) {
  std::vector<Mask> out;
  for (Mask U : Y.topology.members)
    if (Y.is_upset(U)) out.push_back(U);
  return SubsetFamily{Y.size(), out}.canonical();
}

// ---------------------------------------------------------------------------
// Law reports over instance families

namespace detail {

inline std::string family_label(const std::vector<std::string>& ground, const SubsetFamily& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    if (i) s += " ";
    s += mask_to_string(f.members[i], ground);
  }
  return s + "]";
}

inline std::string map_label(const std::vector<int>& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

}  // namespace detail

inline std::string label(const PervinSpace& P) { return detail::family_label(P.ground, P.family); }

/// ko . u = Id on T0 complete spaces and u . ko = Id on spectral topologies.
inline std::vector<LawReport> stone_iso_check(const std::vector<PervinSpace>& t0_spaces,
                                              const std::vector<PervinSpace>& topologies) {
  LawReport a{"ko . u = Id on T0 complete Pervin spaces", {}, true, "", 0};
  for (const auto& P : t0_spaces) {
    a.instances.push_back(label(P));
    ++a.checks;
    if (!(ko(P.ground, u(P)).family == P.family)) a.fail(label(P));
  }
  LawReport b{"u . ko = Id on spectral topologies", {}, true, "", 0};
  LawReport c{"spectral iff T0 on finite topologies", {}, true, "", 0};
  for (const auto& T : topologies) {
    const bool spec = is_spectral(T.family);
    ++c.checks;
    if (spec != is_T0(T)) c.fail(label(T));
    if (!spec) continue;
    b.instances.push_back(label(T));
    ++b.checks;
    if (!(u(ko(T.ground, T.family)) == T.family)) b.fail(label(T));
  }
  for (auto* r : {&a, &b, &c})
    if (r->pass) r->witness = "identity on " + std::to_string(r->checks) + " instances";
  return {a, b, c};
}

/// pp . cup = Id, cup . pp = Id, and the two Spec -> Pri paths against the
/// classical constructions.
inline std::vector<LawReport> priestley_iso_check(const std::vector<PervinSpace>& t0_spaces) {
  LawReport a{"cup . pp = Id on T0 complete Pervin spaces", {}, true, "", 0};
  LawReport b{"pp . cup = Id on Priestley spaces", {}, true, "", 0};
  LawReport c{"Spec -> Pri: pp . ko agrees with the classical patch construction", {}, true, "", 0};
  LawReport d{"Pri -> Spec: u . cup agrees with open upsets", {}, true, "", 0};
  for (const auto& P : t0_spaces) {
    const std::string l = label(P);
    PriestleySpace Y = pp(P);
    a.instances.push_back(l);
    ++a.checks;
    if (!(cup(Y).family == P.family)) a.fail(l);
    b.instances.push_back(l);
    ++b.checks;
    if (!(pp(cup(Y)) == Y)) b.fail(l);
    const SubsetFamily T = u(P);
    c.instances.push_back(l);
    ++c.checks;
    if (!(pp(ko(P.ground, T)) == spectral_to_priestley(P.ground, T))) c.fail(l);
    d.instances.push_back(l);
    ++d.checks;
    if (!(u(cup(Y)) == priestley_to_spectral(Y))) d.fail(l);
  }
  for (auto* r : {&a, &b, &c, &d})
    if (r->pass) r->witness = "identity maps on " + std::to_string(r->checks) + " instances";
  return {a, b, c, d};
}

/// Sk sends T0 complete spaces to pairwise Stone spaces and cl+ inverts it;
/// Sk_f sends complete pairs to compact zero-dimensional biframes and bb+
/// inverts it; complete objects are strongly exact.
inline std::vector<LawReport> bitop_duality_check(const std::vector<PervinSpace>& t0_spaces,
                                                  const std::vector<FrithPair>& complete_pairs,
                                                  int bound = kDefaultCongruenceBound) {
  LawReport a{"Sk(T0 complete) is pairwise Stone and cl+ . Sk = Id", {}, true, "", 0};
  LawReport s{"T0 complete Pervin spaces are strongly exact", {}, true, "", 0};
  for (const auto& P : t0_spaces) {
    const std::string l = label(P);
    a.instances.push_back(l);
    s.instances.push_back(l);
    ++a.checks;
    ++s.checks;
    BiSpace X = skula_space(P);
    if (!is_pairwise_stone(X) || !(clplus(X).family == P.family)) a.fail(l);
    if (!is_strongly_exact(P)) s.fail(l);
  }
  LawReport b{"Sk_f(complete) is compact zero-dimensional and bb+ . Sk_f = Id up to the unit", {}, true, "", 0};
  LawReport t{"complete Frith pairs are strongly exact", {}, true, "", 0};
  for (const auto& F : complete_pairs) {
    const std::string l = "L" + std::to_string(F.lattice.size());
    b.instances.push_back(l);
    t.instances.push_back(l);
    ++b.checks;
    ++t.checks;
    SkulaBiframe S = skula_biframe(F, bound);
    if (!is_compact(S.frame) || !is_zero_dimensional(S.frame) || !classify_hom(fsk_unit(F, bound)).iso) b.fail(l);
    if (!is_strongly_exact(F, bound)) t.fail(l);
  }
  for (auto* r : {&a, &s, &b, &t})
    if (r->pass) r->witness = std::to_string(r->checks) + " instances";
  return {a, s, b, t};
}

/// Omega lands in complete pairs, pt in T0 complete spaces, unit and counit are
/// isos on these families, and compact opens of Omega_S(X) are exactly S.
inline std::vector<LawReport> completeness_duality_check(const std::vector<PervinSpace>& t0_spaces,
                                                         const std::vector<FrithPair>& complete_pairs) {
  LawReport a{"Omega(T0 complete) is complete and the unit is an iso", {}, true, "", 0};
  LawReport b{"pt(complete) is T0 complete and the counit is an iso", {}, true, "", 0};
  LawReport c{"compact opens of Omega_S(X) equal S", {}, true, "", 0};
  for (const auto& P : t0_spaces) {
    const std::string l = label(P);
    a.instances.push_back(l);
    c.instances.push_back(l);
    ++a.checks;
    ++c.checks;
    PervinMap eta = omega_pt_unit(P);
    if (!is_complete(omega_functor(P)).value() || !classify_map(eta).iso) a.fail(l);
    else if (a.pass) a.witness += l + " " + detail::map_label(eta.map) + "; ";
    if (!(compact_opens(omega_topology(P)) == P.family)) c.fail(l);
  }
  for (const auto& F : complete_pairs) {
    const std::string l = "L" + std::to_string(F.lattice.size());
    b.instances.push_back(l);
    ++b.checks;
    PervinSpace X = pt_functor(F).space;
    FrithHom eps = omega_pt_counit(F);
    if (!is_T0(X) || !is_cauchy_complete(X) || !classify_hom(eps).iso) b.fail(l);
    else if (b.pass) b.witness += l + " " + detail::map_label(eps.hom.map) + "; ";
  }
  if (c.pass) c.witness = std::to_string(c.checks) + " instances";
  return {a, b, c};
}

}  // namespace finduality
