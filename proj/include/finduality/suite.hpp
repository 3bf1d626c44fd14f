#pragma once

#include <functional>
#include <future>
#include <string>
#include <vector>

#include "json.hpp"

#include "finduality/adjunctions.hpp"
#include "finduality/bitop.hpp"
#include "finduality/characterization.hpp"
#include "finduality/congruence.hpp"
#include "finduality/duality.hpp"
#include "finduality/enumerate.hpp"
#include "finduality/laws.hpp"

namespace finduality {

struct SuiteConfig {
  int max_points = 4;    // Pervin spaces
  int max_family = 8;    // family members of the T0 spaces swept by the characterization
  int max_lattice = 8;   // distributive lattices
  int search_bound = 4;  // bounded categorical searches
  int parallelism = 1;   // criteria evaluated concurrently
  bool inject_corruption = false;

  void validate() const {
    if (max_points < 1 || max_family < 1 || max_lattice < 1 || search_bound < 1 || parallelism < 1)
      throw Error(ErrorCode::InvariantViolation, "suite bounds must be positive");
    if (max_points > 5) throw Error(ErrorCode::SizeExceeded, "suite limited to 5 points");
    if (max_lattice > kDefaultCongruenceBound)
      throw Error(ErrorCode::SizeExceeded, "suite limited to lattices of 10 elements");
  }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<LawReport> laws;
  bool pass() const { return all_pass(laws); }
};

// ---------------------------------------------------------------------------
// Instance families

inline std::vector<PervinSpace> suite_t0_spaces(const SuiteConfig& c) {
  return enumerate_pervin_upto(c.max_points, true, c.max_family);
}

inline std::vector<FrithPair> suite_complete_pairs(const SuiteConfig& c) {
  return frith_pairs(enumerate_distributive_lattices(c.max_lattice));
}

namespace detail {

template <class T, class F>
LawReport law_over(const std::string& law, const std::vector<T>& xs, std::function<std::string(const T&)> label,
                   F&& holds) {
  LawReport r{law, {}, true, "", 0};
  for (const auto& x : xs) {
    const std::string l = label(x);
    r.instances.push_back(l);
    r.check(l, [&] { return holds(x); });
  }
  if (r.pass) r.witness = std::to_string(r.checks) + " instances";
  return r;
}

inline LawReport exact_value(const std::string& law, long long got, long long want) {
  LawReport r{law, {}, true, std::to_string(got), 1};
  if (got != want) r.fail("got " + std::to_string(got) + ", expected " + std::to_string(want));
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Criteria

inline CriterionResult criterion_1(const SuiteConfig&) {
  const NonCommutation w = non_commutation_witness(catalog::BF332());
  return {1,
          "(3,3,2) biframe: pt . bb+ and cl+ . pt_b differ",
          {detail::exact_value("points of pt(bb+(B))", w.pt_bbplus, 1),
           detail::exact_value("points of cl+(pt_b(B))", w.clplus_pt_b, 2)}};
}

inline CriterionResult criterion_2(const SuiteConfig& c) {
  const auto spaces = suite_t0_spaces(c);
  const auto candidates = t0_spaces_upto(std::max(c.search_bound, c.max_points + 1));
  LawReport all{"seven completeness conditions hold with witnesses", {}, true, "", 0};
  LawReport bounded{"bounded conditions (2),(3) find no counterexample", {}, true, "", 0};
  int searched = 0;
  for (const auto& P : spaces) {
    const std::string l = pervin_label(P);
    all.instances.push_back(l);
    bounded.instances.push_back(l);
    std::vector<PervinSpace> cands;
    for (const auto& Y : candidates)
      if (Y.size() <= search_points(P, c.search_bound)) cands.push_back(Y);
    CharReport r = theorem_char_report(P, cands);
    searched = std::max(searched, r.searched);
    all.check(l, [&] {
      return r.cauchy_complete && r.iso_pff && r.iso_pt_idl && r.iso_pt_idl_some && r.iso_pff_some && r.w_pff &&
             r.w_pt_idl && r.w_pt_idl_some && r.w_pff_some && r.all_agree();
    });
    bounded.check(l, [&] { return r.complete && r.extremal_dense && !r.counterexample; });
  }
  if (all.pass) all.witness = std::to_string(all.checks) + " spaces, witness isos found";
  if (bounded.pass) bounded.witness = "searched up to " + std::to_string(searched) + " points";
  return {2, "completeness characterization of T0 Pervin spaces", {all, bounded}};
}

inline CriterionResult criterion_3(const SuiteConfig& c) {
  auto laws = completeness_duality_check(suite_t0_spaces(c), suite_complete_pairs(c));
  laws.pop_back();
  return {3, "Omega / pt duality between T0 spaces and complete Frith frames", laws};
}

inline CriterionResult criterion_4(const SuiteConfig& c) {
  auto laws = completeness_duality_check(suite_t0_spaces(c), {});
  return {4, "compact opens of Omega_S(X) are exactly S", {laws.back()}};
}

inline CriterionResult criterion_5(const SuiteConfig& c) {
  std::vector<PervinSpace> all_spaces = enumerate_pervin_upto(c.max_points, false);
  auto laws = stone_iso_check(suite_t0_spaces(c), all_spaces);
  for (auto& r : priestley_iso_check(suite_t0_spaces(c))) laws.push_back(std::move(r));
  return {5, "Stone and Priestley isomorphisms", laws};
}

inline std::vector<AdjunctionResult> suite_adjunctions(const SuiteConfig& c) {
  BatteryOptions o;
  o.max_points = std::min(c.max_points, 3);
  o.lattice_size = std::min(c.max_lattice, 5);
  o.skula_size = std::min(c.max_lattice, 4);
  auto res = adjunction_battery(o);
  for (auto& n : negative_controls(o)) res.push_back(std::move(n));
  if (c.inject_corruption) {
    auto bad = negative_controls(o).front();
    bad.name += " (injected)";
    bad.expect_pass = true;
    res.push_back(std::move(bad));
  }
  return res;
}

inline CriterionResult criterion_6(const SuiteConfig& c) {
  CriterionResult out{6, "adjunction battery", {}};
  for (const auto& a : suite_adjunctions(c)) {
    LawReport r{a.name + (a.expect_pass ? ": all laws" : ": negative control fails"), {}, true, a.witness(), 0};
    for (const auto& l : a.laws) r.checks += l.checks;
    if (!a.laws.empty()) r.instances = a.laws.front().instances;
    if (!a.ok()) r.fail(a.expect_pass ? a.witness() : "corruption not detected");
    out.laws.push_back(std::move(r));
  }
  return out;
}

inline CriterionResult criterion_7(const SuiteConfig& c) {
  const auto lats = enumerate_distributive_lattices(c.max_lattice);
  std::function<std::string(const FinLattice&)> lab = lattice_label;
  CriterionResult out{7, "oracle equivalences", {}};
  out.laws.push_back(detail::law_over("prime filters: exhaustive search = join-irreducible fast path", lats, lab,
                                      [](const FinLattice& L) { return prime_filters_exhaustive(L) == prime_filters(L); }));
  out.laws.push_back(detail::law_over("Birkhoff representation is an isomorphism", lats, lab, [](const FinLattice& L) {
    LatticeHom h = birkhoff_roundtrip(L);
    return h.bijective() && h.is_hom();
  }));
  const CongruenceLattice C3 = all_congruences(catalog::C3());
  LawReport con = detail::exact_value("congruences of C3", C3.size(), 4);
  if (con.pass && !find_isomorphism(C3.lattice, catalog::B4())) con.fail("Con(C3) is not B4");
  out.laws.push_back(con);
  std::vector<FinLattice> small;
  for (const auto& L : lats)
    if (L.size() <= 6) small.push_back(L);
  out.laws.push_back(detail::law_over("generated congruence subframe C_L L = Con L", small, lab, [](const FinLattice& L) {
    return generated_congruence_subframe(L, ElemSet::full(L.size())).members == all_congruences(L).members &&
           all_congruences_by_partitions(L).members == all_congruences_by_principals(L).members;
  }));
  return out;
}

inline CriterionResult criterion_8(const SuiteConfig& c) {
  CriterionResult out{8, "T_D, Banaschewski-Pultr and sublocale characterizations", {}};
  std::function<std::string(const PervinSpace&)> plab = pervin_label;
  std::function<std::string(const FrithPair&)> flab = pair_label;
  out.laws.push_back(detail::law_over("three T_D conditions coincide", enumerate_pervin_upto(c.max_points, false), plab,
                                      [](const PervinSpace& P) {
                                        const bool a = td_condition1(P);
                                        return a == td_condition2(P) && a == td_condition3(P);
                                      }));
  const auto t0 = suite_t0_spaces(c);
  const auto cands = t0_spaces_upto(std::max(c.search_bound, c.max_points + 1));
  out.laws.push_back(detail::law_over("Banaschewski-Pultr check agrees with complete and T_D", t0, plab,
                                      [&](const PervinSpace& P) {
                                        std::vector<PervinSpace> cs;
                                        for (const auto& Y : cands)
                                          if (Y.size() <= search_points(P, c.search_bound)) cs.push_back(Y);
                                        return banaschewski_pultr_check(P, cs).agrees();
                                      }));
  const auto fcands = frith_pairs(enumerate_distributive_lattices(c.search_bound));
  const auto frith = suite_complete_pairs(c);
  out.laws.push_back(detail::law_over("Frith analogue agrees with complete and locale-based on Frith frames", frith,
                                      flab, [&](const FrithPair& F) {
                                        return frith_banaschewski_check(F, fcands).agrees();
                                      }));
  std::vector<FrithPair> sl = pre_frith_pairs(enumerate_distributive_lattices(std::min(c.max_lattice, 6)));
  out.laws.push_back(detail::law_over("generated sublocale = meet formula fixpoints, elementwise", sl, flab,
                                      [](const FrithPair& F) {
                                        ElemSet K = generated_sublocale(F.lattice, F.sub);
                                        for (int a = 0; a < F.lattice.size(); ++a)
                                          if ((sublocale_meet_formula(F.lattice, F.sub, a) == a) != K.test(a))
                                            return false;
                                        return true;
                                      }));
  return out;
}

inline CriterionResult criterion_9(const SuiteConfig& c) {
  CriterionResult out{9, "finite-scale degeneracies", {}};
  std::function<std::string(const PervinSpace&)> plab = pervin_label;
  std::function<std::string(const FrithPair&)> flab = pair_label;
  std::function<std::string(const BiSpace&)> blab = bispace_label;
  std::function<std::string(const BiFrame&)> flab2 = biframe_label;
  const auto spaces = enumerate_pervin_upto(c.max_points, false);
  out.laws.push_back(detail::law_over("every finite Pervin space is Cauchy complete", spaces, plab,
                                      [](const PervinSpace& P) { return is_cauchy_complete(P); }));
  out.laws.push_back(detail::law_over("every valid finite Frith pair has sem S = S", suite_complete_pairs(c), flab,
                                      [](const FrithPair& F) { return strongly_exact_meets(F) == F.sub; }));
  std::vector<BiSpace> bs;
  for (const auto& P : spaces) bs.push_back(skula_space(P));
  for (const auto& X : bispace_family(2)) bs.push_back(X);
  out.laws.push_back(detail::law_over("every finite bispace is compact", bs, blab,
                                      [](const BiSpace& X) { return is_compact(X); }));
  out.laws.push_back(detail::law_over("every finite biframe is compact", biframe_family(std::min(c.max_lattice, 6)),
                                      flab2, [](const BiFrame& B) { return is_compact(B); }));
  return out;
}

// ---------------------------------------------------------------------------
// Runner

inline const std::vector<std::function<CriterionResult(const SuiteConfig&)>>& suite_criteria() {
  static const std::vector<std::function<CriterionResult(const SuiteConfig&)>> all = {
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9};
  return all;
}

struct SuiteReport {
  SuiteConfig config;
  std::vector<CriterionResult> criteria;
  bool pass() const {
    for (const auto& c : criteria)
      if (!c.pass()) return false;
    return true;
  }
};

/// Runs every criterion; results are ordered by criterion regardless of parallelism.
inline SuiteReport run_suite(const SuiteConfig& c) {
  c.validate();
  SuiteReport rep{c, {}};
  const auto& fs = suite_criteria();
  if (c.parallelism <= 1) {
    for (const auto& f : fs) rep.criteria.push_back(f(c));
    return rep;
  }
  std::vector<std::future<CriterionResult>> futs;
  for (const auto& f : fs) futs.push_back(std::async(std::launch::async, f, c));
  for (auto& f : futs) rep.criteria.push_back(f.get());
  return rep;
}

inline nlohmann::ordered_json to_json(const LawReport& r) {
  return {{"law", r.law}, {"instances", r.instances}, {"pass", r.pass}, {"witness", r.witness}, {"checks", r.checks}};
}

inline nlohmann::ordered_json to_json(const SuiteReport& s) {
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : s.criteria) {
    nlohmann::ordered_json laws = nlohmann::ordered_json::array();
    for (const auto& l : c.laws) laws.push_back(to_json(l));
    cs.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"laws", laws}});
  }
  return {{"config",
           {{"max_points", s.config.max_points},
            {"max_family", s.config.max_family},
            {"max_lattice", s.config.max_lattice},
            {"search_bound", s.config.search_bound},
            {"inject_corruption", s.config.inject_corruption}}},
          {"criteria", cs},
          {"pass", s.pass()}};
}

inline std::string report_markdown(const SuiteReport& s) {
  std::string out = "# Suite report\n\n| # | criterion | result |\n|---|---|---|\n";
  for (const auto& c : s.criteria)
    out += "| " + std::to_string(c.id) + " | " + c.title + " | " + (c.pass() ? "pass" : "FAIL") + " |\n";
  for (const auto& c : s.criteria) {
    out += "\n## " + std::to_string(c.id) + ". " + c.title + "\n\n";
    for (const auto& l : c.laws)
      out += std::string("- ") + (l.pass ? "pass" : "FAIL") + ": " + l.law + " (" + std::to_string(l.checks) +
             " checks) " + l.witness + "\n";
  }
  return out + "\nOverall: " + (s.pass() ? "pass" : "FAIL") + "\n";
}

}  // namespace finduality
