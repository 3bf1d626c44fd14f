#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finduality/bitop.hpp"
#include "finduality/characterization.hpp"
#include "finduality/enumerate.hpp"
#include "finduality/frith.hpp"
#include "finduality/laws.hpp"
#include "finduality/pervin.hpp"

namespace finduality {

// ---------------------------------------------------------------------------
// Categories as handles

inline std::string lattice_label(const FinLattice& L) {
  std::string s = "L" + std::to_string(L.size()) + "{";
  bool first = true;
  for (auto [a, b] : L.poset().covers()) {
    s += (first ? "" : ",") + L.name(a) + "<" + L.name(b);
    first = false;
  }
  return s + "}";
}

inline std::string elems_label(const FinLattice& L, const ElemSet& S) {
  std::string s = "{";
  bool first = true;
  S.for_each([&](int a) {
    s += (first ? "" : ",") + L.name(a);
    first = false;
  });
  return s + "}";
}

inline std::string pair_label(const FrithPair& F) { return lattice_label(F.lattice) + "/" + elems_label(F.lattice, F.sub); }

inline std::string pervin_label(const PervinSpace& P) {
  std::string s = "[";
  for (std::size_t i = 0; i < P.family.members.size(); ++i)
    s += (i ? " " : "") + mask_to_string(P.family.members[i], P.ground);
  return s + "]";
}

inline std::string bispace_label(const BiSpace& X) {
  return pervin_label(PervinSpace{X.ground, X.pos}) + "|" + pervin_label(PervinSpace{X.ground, X.neg});
}

inline std::string biframe_label(const BiFrame& B) {
  return lattice_label(B.main) + "/" + elems_label(B.main, B.pos) + "|" + elems_label(B.main, B.neg);
}

inline Category<PervinSpace, PervinMap> perv_category(std::string name = "Perv") {
  return {std::move(name),
          [](const PervinSpace& a, const PervinSpace& b) { return enumerate_pervin_maps(a, b); },
          [](const PervinMap& g, const PervinMap& f) { return compose(g, f); },
          [](const PervinSpace& a) { return PervinMap::identity(a); },
          [](const PervinMap& f, const PervinMap& g) { return f == g; },
          [](const PervinMap& f) { return f.dom; },
          [](const PervinMap& f) { return f.cod; },
          [](const PervinSpace& a, const PervinSpace& b) { return a == b; },
          pervin_label};
}

inline Category<FrithPair, FrithHom> ffrm_category(std::string name = "FFrm") {
  return {std::move(name),
          [](const FrithPair& a, const FrithPair& b) { return enumerate_frith_homs(a, b); },
          [](const FrithHom& g, const FrithHom& f) { return compose(g, f); },
          [](const FrithPair& a) { return FrithHom::identity(a); },
          [](const FrithHom& f, const FrithHom& g) { return f == g; },
          [](const FrithHom& f) { return f.dom; },
          [](const FrithHom& f) { return f.cod; },
          [](const FrithPair& a, const FrithPair& b) { return a == b; },
          pair_label};
}

inline Category<FinLattice, LatticeHom> dlat_category(std::string name = "DLat") {
  return {std::move(name),
          [](const FinLattice& a, const FinLattice& b) { return enumerate_homs(a, b); },
          [](const LatticeHom& g, const LatticeHom& f) { return compose(g, f); },
          [](const FinLattice& a) { return LatticeHom::identity(a); },
          [](const LatticeHom& f, const LatticeHom& g) { return f == g; },
          [](const LatticeHom& f) { return f.dom; },
          [](const LatticeHom& f) { return f.cod; },
          [](const FinLattice& a, const FinLattice& b) { return a == b; },
          lattice_label};
}

inline Category<BiSpace, BiMap> bitop_category() {
  return {"BiTop",
          [](const BiSpace& a, const BiSpace& b) { return enumerate_bimaps(a, b); },
          [](const BiMap& g, const BiMap& f) { return compose(g, f); },
          [](const BiSpace& a) { return BiMap::identity(a); },
          [](const BiMap& f, const BiMap& g) { return f.map == g.map && f.dom == g.dom && f.cod == g.cod; },
          [](const BiMap& f) { return f.dom; },
          [](const BiMap& f) { return f.cod; },
          [](const BiSpace& a, const BiSpace& b) { return a == b; },
          bispace_label};
}

inline Category<BiFrame, BiFrameHom> bifrm_category() {
  return {"BiFrm",
          [](const BiFrame& a, const BiFrame& b) { return enumerate_biframe_homs(a, b); },
          [](const BiFrameHom& g, const BiFrameHom& f) { return compose(g, f); },
          [](const BiFrame& a) { return BiFrameHom::identity(a); },
          [](const BiFrameHom& f, const BiFrameHom& g) {
            return f.hom.map == g.hom.map && f.dom == g.dom && f.cod == g.cod;
          },
          [](const BiFrameHom& f) { return f.dom; },
          [](const BiFrameHom& f) { return f.cod; },
          [](const BiFrame& a, const BiFrame& b) { return a == b; },
          biframe_label};
}

// ---------------------------------------------------------------------------
// The adjunctions

using PervAdj = Adjunction<PervinSpace, PervinMap, PervinSpace, PervinMap>;

/// Omega -| pt, with Omega: Perv -> FFrm^op.
inline Adjunction<PervinSpace, PervinMap, FrithPair, FrithHom> omega_pt_adjunction() {
  return {"Omega -| pt",
          perv_category(),
          opposite(ffrm_category()),
          {"Omega", [](const PervinSpace& P) { return omega_functor(P); },
           [](const PervinMap& f) { return omega_functor(f); }},
          {"pt", [](const FrithPair& F) { return pt_functor(F).space; },
           [](const FrithHom& h) { return pt_functor(h); }},
          [](const PervinSpace& P) { return omega_pt_unit(P); },
          [](const FrithPair& F) { return omega_pt_counit(F); }};
}

/// The embedding of symmetric spaces is left adjoint to psym.
inline PervAdj psym_adjunction() {
  return {"embedding -| psym",
          perv_category("Perv_sym"),
          perv_category(),
          {"embedding", [](const PervinSpace& P) { return P; }, [](const PervinMap& f) { return f; }},
          {"psym", [](const PervinSpace& P) { return symmetrize(P); },
           [](const PervinMap& f) { return symmetrize(f); }},
          [](const PervinSpace& B) { return PervinMap{B, symmetrize(B), PervinMap::identity(B).map}; },
          [](const PervinSpace& P) { return PervinMap{symmetrize(P), P, PervinMap::identity(P).map}; }};
}

/// fsym is left adjoint to the embedding of symmetric Frith frames.
inline Adjunction<FrithPair, FrithHom, FrithPair, FrithHom> fsym_adjunction() {
  return {"fsym -| embedding",
          ffrm_category(),
          ffrm_category("FFrm_sym"),
          {"fsym", [](const FrithPair& F) { return fsym(F).pair; }, [](const FrithHom& h) { return fsym(h); }},
          {"embedding", [](const FrithPair& F) { return F; }, [](const FrithHom& h) { return h; }},
          [](const FrithPair& F) { return fsym(F).unit; },
          [](const FrithPair& B) {
            Fsym s = fsym(B);
            return FrithHom{s.pair, B, universal_extension(LatticeHom::identity(B.lattice), B.sub, s.cong)};
          }};
}

/// lperv -| pff, with lperv: Perv -> DLat^op.
inline Adjunction<PervinSpace, PervinMap, FinLattice, LatticeHom> lperv_pff_adjunction() {
  return {"lperv -| pff",
          perv_category(),
          opposite(dlat_category()),
          {"lperv", [](const PervinSpace& P) { return lperv(P); }, [](const PervinMap& f) { return lperv(f); }},
          {"pff", [](const FinLattice& D) { return pf_space(D); }, [](const LatticeHom& h) { return pf_space(h); }},
          [](const PervinSpace& P) { return neighborhood_map(P); },
          [](const FinLattice& D) { return phi_hom(D); }};
}

/// idlf -| lfrith.
inline Adjunction<FinLattice, LatticeHom, FrithPair, FrithHom> idlf_lfrith_adjunction() {
  return {"idlf -| lfrith",
          dlat_category(),
          ffrm_category(),
          {"idlf", [](const FinLattice& D) { return idlf(D); }, [](const LatticeHom& g) { return idlf(g); }},
          {"lfrith", [](const FrithPair& F) { return lfrith(F); }, [](const FrithHom& h) { return lfrith(h); }},
          [](const FinLattice& D) { return LatticeHom{D, lfrith(idlf(D)), LatticeHom::identity(D).map}; },
          [](const FrithPair& F) { return completion(F).counit; }};
}

/// cl+ -| Sk.
inline Adjunction<BiSpace, BiMap, PervinSpace, PervinMap> skula_adjunction() {
  return {"cl+ -| Sk",
          bitop_category(),
          perv_category(),
          {"cl+", [](const BiSpace& X) { return clplus(X); }, [](const BiMap& f) { return clplus(f); }},
          {"Sk", [](const PervinSpace& P) { return skula_space(P); },
           [](const PervinMap& f) { return skula_space(f); }},
          [](const BiSpace& X) { return skula_unit(X); },
          [](const PervinSpace& P) { return skula_counit(P); }};
}

/// Sk_f -| bb+.
inline Adjunction<FrithPair, FrithHom, BiFrame, BiFrameHom> fsk_adjunction() {
  return {"Sk_f -| bb+",
          ffrm_category(),
          bifrm_category(),
          {"Sk_f", [](const FrithPair& F) { return skula_biframe(F).frame; },
           [](const FrithHom& h) { return skula_biframe(h); }},
          {"bb+", [](const BiFrame& B) { return bbplus(B).pair; }, [](const BiFrameHom& h) { return bbplus(h); }},
          [](const FrithPair& F) { return fsk_unit(F); },
          [](const BiFrame& B) { return fsk_counit(B); }};
}

/// cl -| U' between topologies (given as Pervin families) and Perv'.
inline PervAdj cl_uprime_adjunction() {
  auto cl = [](const PervinSpace& T) { return cl_space(T.ground, T.family); };
  auto up = [](const PervinSpace& P) { return PervinSpace::make(P.ground, uperv_prime(P).members); };
  return {"cl -| U'",
          perv_category("Top"),
          perv_category("Perv'"),
          {"cl", cl, [cl](const PervinMap& f) { return PervinMap{cl(f.dom), cl(f.cod), f.map}; }},
          {"U'", up, [up](const PervinMap& f) { return PervinMap{up(f.dom), up(f.cod), f.map}; }},
          [cl, up](const PervinSpace& T) { return PervinMap{T, up(cl(T)), PervinMap::identity(T).map}; },
          [cl, up](const PervinSpace& P) { return PervinMap{cl(up(P)), P, PervinMap::identity(P).map}; }};
}

namespace detail {

inline FrithHom bb_restrict(const LatticeHom& h) {
  BbPlus a = bb_frame(h.dom), b = bb_frame(h.cod);
  std::vector<int> m;
  for (int e : a.elems) {
    auto it = std::find(b.elems.begin(), b.elems.end(), h(e));
    FD_ENSURE(it != b.elems.end(), "complemented element mapped outside bb");
    m.push_back(static_cast<int>(it - b.elems.begin()));
  }
  return {a.pair, b.pair, LatticeHom{a.pair.lattice, b.pair.lattice, std::move(m)}};
}

}  // namespace detail

/// U'_f -| bb between FFrm' and frames.
inline Adjunction<FrithPair, FrithHom, FinLattice, LatticeHom> uprime_bb_adjunction() {
  return {"U'_f -| bb",
          ffrm_category("FFrm'"),
          dlat_category("Frm"),
          {"U'_f", [](const FrithPair& F) { return F.lattice; }, [](const FrithHom& h) { return h.hom; }},
          {"bb", [](const FinLattice& L) { return bb_frame(L).pair; },
           [](const LatticeHom& h) { return detail::bb_restrict(h); }},
          [](const FrithPair& F) {
            BbPlus b = bb_frame(F.lattice);
            std::vector<int> m(F.lattice.size(), -1);
            for (std::size_t i = 0; i < b.elems.size(); ++i) m[b.elems[i]] = static_cast<int>(i);
            return FrithHom{F, b.pair, LatticeHom{F.lattice, b.pair.lattice, std::move(m)}};
          },
          [](const FinLattice& L) {
            BbPlus b = bb_frame(L);
            return LatticeHom{b.pair.lattice, L, b.elems};
          }};
}

/// The identity adjunction on Perv.
inline PervAdj identity_adjunction() {
  Functor<PervinSpace, PervinMap, PervinSpace, PervinMap> id{
      "Id", [](const PervinSpace& P) { return P; }, [](const PervinMap& f) { return f; }};
  return {"Id -| Id", perv_category(), perv_category(), id, id,
          [](const PervinSpace& P) { return PervinMap::identity(P); },
          [](const PervinSpace& P) { return PervinMap::identity(P); }};
}

/// Swaps the images of the first two points; identity elsewhere.
template <class M>
M swap_first_two(M f) {
  if (f.map.size() >= 2) std::swap(f.map[0], f.map[1]);
  return f;
}

// ---------------------------------------------------------------------------
// Instance families and the battery

struct BatteryOptions {
  int max_points = 3;    // Pervin spaces and bispaces
  int lattice_size = 5;  // distributive lattices
  int skula_size = 4;    // lattices feeding Sk_f -| bb+ and fsym
  VerifyOptions verify;
};

struct AdjunctionResult {
  std::string name;
  std::vector<LawReport> laws;
  bool expect_pass = true;  // false for negative controls
  bool ok() const { return all_pass(laws) == expect_pass; }
  std::string witness() const {
    for (const auto& r : laws)
      if (!r.pass) return r.law + ": " + r.witness;
    return laws.empty() ? "" : std::to_string(laws.size()) + " laws";
  }
};

inline std::vector<PervinSpace> pervin_family(int max_points) { return enumerate_pervin_upto(max_points, false); }

inline std::vector<PervinSpace> symmetric_family(int max_points) {
  std::vector<PervinSpace> out;
  for (auto& P : pervin_family(max_points))
    if (is_symmetric(P)) out.push_back(P);
  return out;
}

/// Frith frames (M,M) and the proper pre-Frith pairs of the given lattices.
inline std::vector<FrithPair> frith_family(int lattice_size, bool with_pre = true) {
  auto lats = enumerate_distributive_lattices(lattice_size);
  return with_pre ? pre_frith_pairs(lats) : frith_pairs(lats);
}

inline std::vector<BiSpace> bispace_family(int max_points) {
  std::vector<BiSpace> out;
  for (const auto& P : pervin_family(max_points)) out.push_back(skula_space(P));
  out.push_back(catalog::SIER_BI());
  out.push_back(BiSpace::make({"a", "b"}, {0, 0b11}, {0, 0b01, 0b11}));
  out.push_back(BiSpace::make({"a", "b"}, {0, 0b01, 0b11}, {0, 0b01, 0b11}));
  return out;
}

inline std::vector<BiFrame> biframe_family(int lattice_size) {
  std::vector<BiFrame> out;
  for (const auto& F : frith_family(lattice_size, false)) out.push_back(skula_biframe(F).frame);
  out.push_back(catalog::BF332());
  const FinLattice C3 = catalog::C3();
  out.push_back(BiFrame::make(C3, ElemSet::full(3), ElemSet::full(3)));
  return out;
}

inline std::vector<AdjunctionResult> adjunction_battery(const BatteryOptions& o = {}) {
  std::vector<AdjunctionResult> out;
  const auto perv = pervin_family(o.max_points);
  const auto sym = symmetric_family(o.max_points);
  const auto lats = enumerate_distributive_lattices(o.lattice_size);
  const auto valid = frith_family(o.lattice_size, false);
  const auto pre = frith_family(o.skula_size, true);
  const auto small_valid = frith_family(o.skula_size, false);
  const auto& v = o.verify;

  out.push_back({"Omega -| pt", verify_adjunction(omega_pt_adjunction(), perv, valid, v)});
  out.push_back({"embedding -| psym", verify_adjunction(psym_adjunction(), sym, perv, v)});
  std::vector<FrithPair> sym_pairs;
  for (const auto& F : pre)
    if (is_symmetric(F)) sym_pairs.push_back(F);
  out.push_back({"fsym -| embedding", verify_adjunction(fsym_adjunction(), pre, sym_pairs, v)});
  out.push_back({"lperv -| pff", verify_adjunction(lperv_pff_adjunction(), perv, lats, v)});
  out.push_back({"idlf -| lfrith", verify_adjunction(idlf_lfrith_adjunction(), lats, pre, v)});
  out.push_back({"cl+ -| Sk", verify_adjunction(skula_adjunction(), bispace_family(o.max_points), perv, v)});
  out.push_back({"Sk_f -| bb+", verify_adjunction(fsk_adjunction(), small_valid, biframe_family(o.skula_size), v)});
  out.push_back({"cl -| U'", verify_adjunction(cl_uprime_adjunction(), perv, sym, v)});
  std::vector<FrithPair> boolean_pairs;
  for (const auto& F : valid)
    if (is_boolean(F.lattice)) boolean_pairs.push_back(F);
  out.push_back({"U'_f -| bb", verify_adjunction(uprime_bb_adjunction(), boolean_pairs, lats, v)});

  out.push_back({"Id -| Id", verify_adjunction(identity_adjunction(), perv, perv, v)});
  return out;
}

/// Negative controls: each must fail, with a witness.
inline std::vector<AdjunctionResult> negative_controls(const BatteryOptions& o = {}) {
  std::vector<AdjunctionResult> out;
  const auto perv = pervin_family(o.max_points);
  auto a = skula_adjunction();
  a.name = "cl+ -| Sk with swapped counit";
  auto counit = a.counit;
  a.counit = [counit](const PervinSpace& P) { return swap_first_two(counit(P)); };
  out.push_back({a.name, verify_adjunction(a, bispace_family(o.max_points), perv, o.verify), false});

  auto b = omega_pt_adjunction();
  b.name = "Omega -| pt with swapped unit";
  auto unit = b.unit;
  b.unit = [unit](const PervinSpace& P) { return swap_first_two(unit(P)); };
  out.push_back({b.name, verify_adjunction(b, perv, frith_family(o.skula_size, false), o.verify), false});
  return out;
}

}  // namespace finduality
