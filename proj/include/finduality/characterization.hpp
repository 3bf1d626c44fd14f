#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "finduality/enumerate.hpp"
#include "finduality/frith.hpp"
#include "finduality/lattice.hpp"
#include "finduality/pervin.hpp"

namespace finduality {

/// T0 Pervin spaces with 1..max_points points, up to isomorphism.
inline std::vector<PervinSpace> t0_spaces_upto(int max_points) { return enumerate_pervin_upto(max_points, true); }

/// Points searched by the bounded categorical conditions for P.
inline int search_points(const PervinSpace& P, int bound) { return std::max(bound, P.size() + 1); }

// ---------------------------------------------------------------------------
// Completeness characterization of T0 Pervin spaces

struct CharReport {
  bool cauchy_complete = false;        // (1)
  bool complete = false;               // (2), up to `searched` points
  bool extremal_dense = false;         // (3), up to `searched` points
  bool iso_pff = false;                // (4)
  bool iso_pt_idl = false;             // (5)
  bool iso_pt_idl_some = false;        // (6)
  bool iso_pff_some = false;           // (7)
  std::optional<PervinMap> w_pff, w_pt_idl, w_pt_idl_some, w_pff_some;
  std::optional<PervinMap> counterexample;  // a non-iso found by (2) or (3)
  int searched = 0;

  bool all_agree() const {
    const bool v = cauchy_complete;
    return complete == v && extremal_dense == v && iso_pff == v && iso_pt_idl == v && iso_pt_idl_some == v &&
           iso_pff_some == v;
  }
};

namespace detail {

inline void require_T0(const PervinSpace& P) {
  if (!is_T0(P)) throw Error(ErrorCode::NotT0, "Pervin space is not T0");
}

inline std::optional<PervinMap> iso_to(const PervinSpace& P, const PervinSpace& Q) {
  return find_pervin_isomorphism(P, Q);
}

}  // namespace detail

/// Evaluates the seven conditions on a T0 space. `candidates` are the T0
/// codomains searched by (2) and (3); pass t0_spaces_upto(search_points(P, b)).
inline CharReport theorem_char_report(const PervinSpace& P, const std::vector<PervinSpace>& candidates) {
  detail::require_T0(P);
  CharReport r;
  r.cauchy_complete = is_cauchy_complete(P);

  // (2): the symmetrization admits no proper dense extremal mono into a T0
  // symmetric space.
  const PervinSpace sym = symmetrize(P);
  r.complete = true;
  r.extremal_dense = true;
  for (const auto& Y : candidates) {
    if (Y.size() < P.size()) continue;
    r.searched = std::max(r.searched, Y.size());
    const bool y_sym = is_symmetric(Y);
    if (y_sym && r.complete)
      for (const auto& f : enumerate_pervin_maps(sym, Y, true)) {
        MapClass c = classify_map(f);
        if (c.dense && c.extremal_mono && !c.iso) {
          r.complete = false;
          if (!r.counterexample) r.counterexample = f;
          break;
        }
      }
    // (3): extremal monos out of P whose symmetrization is dense.
    if (r.extremal_dense)
      for (const auto& f : enumerate_pervin_maps(P, Y, true)) {
        MapClass c = classify_map(f);
        if (c.extremal_mono && classify_map(symmetrize(f)).dense && !c.iso) {
          r.extremal_dense = false;
          if (!r.counterexample) r.counterexample = f;
          break;
        }
      }
  }

  // (4): the neighborhood map is the witness when it is an iso.
  PervinMap nb = neighborhood_map(P);
  if (classify_map(nb).iso) r.w_pff = nb;
  else r.w_pff = detail::iso_to(P, nb.cod);
  r.iso_pff = r.w_pff.has_value();

  // (5): pt(Idl S, S).
  const FinLattice S = lperv(P);
  r.w_pt_idl = detail::iso_to(P, pt_functor(idlf(S)).space);
  r.iso_pt_idl = r.w_pt_idl.has_value();

  // (6), (7): D taken as the distinguished sublattice of Omega(P), a lattice
  // built independently of the family lattice above.
  const FinLattice D = lfrith(omega_functor(P));
  r.w_pt_idl_some = detail::iso_to(P, pt_functor(idlf(D)).space);
  r.iso_pt_idl_some = r.w_pt_idl_some.has_value();
  r.w_pff_some = detail::iso_to(P, pf_space(D));
  r.iso_pff_some = r.w_pff_some.has_value();
  return r;
}

inline CharReport theorem_char_report(const PervinSpace& P, int bound = 4) {
  return theorem_char_report(P, t0_spaces_upto(search_points(P, bound)));
}

// ---------------------------------------------------------------------------
// lperv-iso maps

/// (X \ {x}, {S \ {x}}) with its inclusion into P.
inline PervinMap point_deletion(const PervinSpace& P, int x) {
  std::vector<std::string> names;
  std::vector<int> incl;
  for (int y = 0; y < P.size(); ++y)
    if (y != x) {
      names.push_back(P.ground[y]);
      incl.push_back(y);
    }
  std::vector<Mask> fam;
  for (Mask S : P.family.members) {
    Mask t = 0;
    for (std::size_t i = 0; i < incl.size(); ++i)
      if (has(S, incl[i])) t |= bit(static_cast<int>(i));
    fam.push_back(t);
  }
  PervinMap f{PervinSpace::make(std::move(names), fam), P, incl};
  FD_ENSURE(f.is_morphism(), "point deletion is not a Pervin map");
  return f;
}

struct BPReport {
  bool complete_side = false;  // every f: P -> Y with lperv(f) iso is an iso
  bool td_side = false;        // every f: Y -> P with lperv(f) iso is an iso
  bool complete_direct = false;
  bool td_direct = false;
  std::optional<PervinMap> complete_witness, td_witness;  // non-iso maps with lperv(f) iso
  int searched = 0;
  bool agrees() const { return complete_side == complete_direct && td_side == td_direct; }
};

/// Bounded search over T0 spaces Y in `candidates`, plus every point deletion.
inline BPReport banaschewski_pultr_check(const PervinSpace& P, const std::vector<PervinSpace>& candidates) {
  detail::require_T0(P);
  BPReport r;
  r.complete_side = r.td_side = true;
  auto lperv_iso = [](const PervinMap& f) { return lperv(f).bijective(); };
  auto visit = [&](const PervinMap& f, bool& side, std::optional<PervinMap>& w) {
    if (side && lperv_iso(f) && !classify_map(f).iso) {
      side = false;
      w = f;
    }
  };
  for (const auto& Y : candidates) {
    r.searched = std::max(r.searched, Y.size());
    for (const auto& f : enumerate_pervin_maps(P, Y)) visit(f, r.complete_side, r.complete_witness);
    for (const auto& f : enumerate_pervin_maps(Y, P)) visit(f, r.td_side, r.td_witness);
  }
  for (int x = 0; x < P.size(); ++x) visit(point_deletion(P, x), r.td_side, r.td_witness);
  r.complete_direct = is_cauchy_complete(P);
  r.td_direct = is_TD(P);
  return r;
}

inline BPReport banaschewski_pultr_check(const PervinSpace& P, int bound = 4) {
  return banaschewski_pultr_check(P, t0_spaces_upto(search_points(P, bound)));
}

// ---------------------------------------------------------------------------
// Frith analogue

/// Every pair (M,T) with M one of `lattices` and T a bounded sublattice of M.
inline std::vector<FrithPair> pre_frith_pairs(const std::vector<FinLattice>& lattices) {
  std::vector<FrithPair> out;
  for (const auto& M : lattices) {
    const int n = M.size();
    if (n > 16) throw Error(ErrorCode::SizeExceeded, "pair enumeration limited to 16 elements");
    std::vector<int> inner;
    for (int a = 0; a < n; ++a)
      if (a != M.bottom() && a != M.top()) inner.push_back(a);
    for (std::uint32_t sub = 0; sub < (1u << inner.size()); ++sub) {
      ElemSet T = ElemSet::of(n, {M.bottom(), M.top()});
      for (std::size_t i = 0; i < inner.size(); ++i)
        if (sub >> i & 1u) T.set(inner[i]);
      if (is_bounded_sublattice(M, T)) out.push_back(FrithPair::make(M, T));
    }
  }
  return out;
}

struct FBReport {
  bool in_scope = false;           // F is a Frith frame, the hypothesis of both equivalences
  bool complete_side = false;      // every h: (M,T) -> F with lfrith(h) iso is an iso
  bool locale_based_side = false;  // every h: F -> (M,T) with lfrith(h) iso is an iso
  bool complete_direct = false;
  bool locale_based_direct = false;
  std::optional<FrithHom> complete_witness, locale_witness;
  bool agrees() const { return complete_side == complete_direct && locale_based_side == locale_based_direct; }
};

/// Bounded search over the pairs in `candidates`, plus the sublocale quotient
/// L -> <S>_Loc on the locale-based side.
inline FBReport frith_banaschewski_check(const FrithPair& F, const std::vector<FrithPair>& candidates) {
  FBReport r;
  r.in_scope = F.is_frith();
  r.complete_side = r.locale_based_side = true;
  auto visit = [&](const FrithHom& h, bool& side, std::optional<FrithHom>& w) {
    if (side && lfrith(h).bijective() && !classify_hom(h).iso) {
      side = false;
      w = h;
    }
  };
  for (const auto& G : candidates) {
    for (const auto& h : enumerate_frith_homs(G, F)) visit(h, r.complete_side, r.complete_witness);
    for (const auto& h : enumerate_frith_homs(F, G)) visit(h, r.locale_based_side, r.locale_witness);
  }
  visit(sublocale_quotient(F, generated_sublocale(F.lattice, F.sub)), r.locale_based_side, r.locale_witness);
  r.complete_direct = is_complete(F).value();
  r.locale_based_direct = is_locale_based(F);
  return r;
}

/// The Frith frames (M,M) over the given lattices.
inline std::vector<FrithPair> frith_pairs(const std::vector<FinLattice>& lattices) {
  std::vector<FrithPair> out;
  for (const auto& M : lattices) out.push_back(FrithPair::full(M));
  return out;
}

/// Candidates are the Frith frames over distributive lattices with at most
/// `bound` elements. Pre-Frith candidates fall outside both equivalences.
inline FBReport frith_banaschewski_check(const FrithPair& F, int bound = 4) {
  return frith_banaschewski_check(F, frith_pairs(enumerate_distributive_lattices(bound)));
}

}  // namespace finduality
