#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace finduality {

/// One verified law: pass/fail over named instances, with a witness (the
/// counterexample on failure, a short confirmation otherwise).
struct LawReport {
  std::string law;
  std::vector<std::string> instances;
  bool pass = true;
  std::string witness;
  std::size_t checks = 0;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }

  /// Runs one check; a thrown error counts as a failure at `where`.
  template <class F>
  void check(const std::string& where, F&& holds) {
    ++checks;
    try {
      if (!holds()) fail(where);
    } catch (const std::exception& e) {
      fail(where + " (" + e.what() + ")");
    }
  }
};

inline bool all_pass(const std::vector<LawReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const LawReport& r) { return r.pass; });
}

/// Objects, hom-sets and composition, given as handles.
template <class O, class M>
struct Category {
  std::string name;
  std::function<std::vector<M>(const O&, const O&)> homs;
  std::function<M(const M&, const M&)> compose;  // compose(g, f) = g . f
  std::function<M(const O&)> identity;
  std::function<bool(const M&, const M&)> equal;
  std::function<O(const M&)> dom, cod;
  std::function<bool(const O&, const O&)> same_object;
  std::function<std::string(const O&)> label;
};

/// The opposite category: hom(a,b) = hom(b,a), composition reversed.
template <class O, class M>
Category<O, M> opposite(const Category<O, M>& C) {
  Category<O, M> op = C;
  op.name = C.name + "^op";
  op.homs = [C](const O& a, const O& b) { return C.homs(b, a); };
  op.compose = [C](const M& g, const M& f) { return C.compose(f, g); };
  op.dom = C.cod;
  op.cod = C.dom;
  return op;
}

template <class CO, class CM, class DO, class DM>
struct Functor {
  std::string name;
  std::function<DO(const CO&)> obj;
  std::function<DM(const CM&)> mor;
};

/// left: C -> D, right: D -> C, unit c -> right(left(c)), counit left(right(d)) -> d.
template <class CO, class CM, class DO, class DM>
struct Adjunction {
  std::string name;
  Category<CO, CM> C;
  Category<DO, DM> D;
  Functor<CO, CM, DO, DM> left;
  Functor<DO, DM, CO, CM> right;
  std::function<CM(const CO&)> unit;
  std::function<DM(const DO&)> counit;
};

struct VerifyOptions {
  std::size_t max_per_hom = 3;  // morphisms per hom-set used in composition checks
};

namespace detail {

template <class O, class M>
std::vector<std::vector<std::vector<M>>> hom_table(const Category<O, M>& C, const std::vector<O>& objs) {
  std::vector<std::vector<std::vector<M>>> t(objs.size(), std::vector<std::vector<M>>(objs.size()));
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) t[i][j] = C.homs(objs[i], objs[j]);
  return t;
}

// Identity and composition laws of a functor over the given objects.
template <class CO, class CM, class DO, class DM>
void functor_laws(const std::string& prefix, const Category<CO, CM>& C, const Category<DO, DM>& D,
                  const Functor<CO, CM, DO, DM>& F, const std::vector<CO>& objs,
                  const std::vector<std::vector<std::vector<CM>>>& homs, const VerifyOptions& opt,
                  std::vector<LawReport>& out) {
  LawReport id{prefix + ": " + F.name + " preserves identities", {}, true, "", 0};
  LawReport comp{prefix + ": " + F.name + " preserves composition", {}, true, "", 0};
  for (std::size_t i = 0; i < objs.size(); ++i) {
    id.instances.push_back(C.label(objs[i]));
    id.check(C.label(objs[i]), [&] { return D.equal(F.mor(C.identity(objs[i])), D.identity(F.obj(objs[i]))); });
  }
  comp.instances = id.instances;
  const std::size_t n = objs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& fs = homs[a][b];
        const auto& gs = homs[b][c];
        for (std::size_t x = 0; x < std::min(fs.size(), opt.max_per_hom); ++x)
          for (std::size_t y = 0; y < std::min(gs.size(), opt.max_per_hom); ++y) {
            comp.check(C.label(objs[a]) + " -> " + C.label(objs[b]) + " -> " + C.label(objs[c]), [&] {
              return D.equal(F.mor(C.compose(gs[y], fs[x])), D.compose(F.mor(gs[y]), F.mor(fs[x])));
            });
          }
      }
  out.push_back(std::move(id));
  out.push_back(std::move(comp));
}

}  // namespace detail

/// Functor laws, typing and naturality of unit and counit, and both triangle
/// identities, over every object and enumerated morphism of the families.
template <class CO, class CM, class DO, class DM>
std::vector<LawReport> verify_adjunction(const Adjunction<CO, CM, DO, DM>& A, const std::vector<CO>& cs,
                                         const std::vector<DO>& ds, const VerifyOptions& opt = {}) {
  std::vector<LawReport> out;
  const auto& C = A.C;
  const auto& D = A.D;
  auto chom = detail::hom_table(C, cs);
  auto dhom = detail::hom_table(D, ds);
  detail::functor_laws(A.name, C, D, A.left, cs, chom, opt, out);
  detail::functor_laws(A.name, D, C, A.right, ds, dhom, opt, out);

  std::vector<std::string> clabels, dlabels;
  for (const auto& c : cs) clabels.push_back(C.label(c));
  for (const auto& d : ds) dlabels.push_back(D.label(d));

  LawReport unit_nat{A.name + ": unit is natural", clabels, true, "", 0};
  LawReport counit_nat{A.name + ": counit is natural", dlabels, true, "", 0};
  LawReport tri_left{A.name + ": counit_F . F(unit) = id", clabels, true, "", 0};
  LawReport tri_right{A.name + ": G(counit) . unit_G = id", dlabels, true, "", 0};

  std::vector<CM> units;
  for (const auto& c : cs) {
    CM u = A.unit(c);
    ++unit_nat.checks;
    if (!C.same_object(C.dom(u), c) || !C.same_object(C.cod(u), A.right.obj(A.left.obj(c))))
      unit_nat.fail("unit mistyped at " + C.label(c));
    units.push_back(std::move(u));
  }
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b)
      for (const auto& f : chom[a][b])
        unit_nat.check(clabels[a] + " -> " + clabels[b], [&] {
          return C.equal(C.compose(A.right.mor(A.left.mor(f)), units[a]), C.compose(units[b], f));
        });

  std::vector<DM> counits;
  for (const auto& d : ds) {
    DM e = A.counit(d);
    ++counit_nat.checks;
    if (!D.same_object(D.cod(e), d) || !D.same_object(D.dom(e), A.left.obj(A.right.obj(d))))
      counit_nat.fail("counit mistyped at " + D.label(d));
    counits.push_back(std::move(e));
  }
  for (std::size_t a = 0; a < ds.size(); ++a)
    for (std::size_t b = 0; b < ds.size(); ++b)
      for (const auto& g : dhom[a][b])
        counit_nat.check(dlabels[a] + " -> " + dlabels[b], [&] {
          return D.equal(D.compose(counits[b], A.left.mor(A.right.mor(g))), D.compose(g, counits[a]));
        });

  for (std::size_t i = 0; i < cs.size(); ++i) {
    tri_left.check(clabels[i], [&] {
      const DO Fc = A.left.obj(cs[i]);
      return D.equal(D.compose(A.counit(Fc), A.left.mor(units[i])), D.identity(Fc));
    });
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    tri_right.check(dlabels[i], [&] {
      const CO Gd = A.right.obj(ds[i]);
      return C.equal(C.compose(A.right.mor(counits[i]), A.unit(Gd)), C.identity(Gd));
    });
  }
  for (auto* r : {&unit_nat, &counit_nat, &tri_left, &tri_right})
    if (r->pass) r->witness = std::to_string(r->checks) + " checks";
  for (auto& r : out)
    if (r.pass && r.witness.empty()) r.witness = std::to_string(r.checks) + " checks";
  out.push_back(std::move(unit_nat));
  out.push_back(std::move(counit_nat));
  out.push_back(std::move(tri_left));
  out.push_back(std::move(tri_right));
  return out;
}

}  // namespace finduality
