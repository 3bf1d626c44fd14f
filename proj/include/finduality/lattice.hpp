#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finduality/bitset.hpp"
#include "finduality/error.hpp"
#include "finduality/poset.hpp"

namespace finduality {

// At finite scale a frame is a distributive FinLattice: every join is a finite join.

/// A finite bounded lattice with precomputed meet and join tables. Immutable;
/// copies share storage.
class FinLattice {
 public:
  FinLattice() = default;

  int size() const { return d_ ? d_->n : 0; }
  bool leq(int a, int b) const { return d_->poset.leq(a, b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  int meet(int a, int b) const { return d_->meet[a * d_->n + b]; }
  int join(int a, int b) const { return d_->join[a * d_->n + b]; }
  int bottom() const { return d_->bottom; }
  int top() const { return d_->top; }
  const FinPoset& poset() const { return d_->poset; }
  const std::string& name(int a) const { return d_->names[a]; }
  const std::vector<std::string>& names() const { return d_->names; }

  int meet_of(const ElemSet& s) const {
    int r = top();
    s.for_each([&](int a) { r = meet(r, a); });
    return r;
  }
  int join_of(const ElemSet& s) const {
    int r = bottom();
    s.for_each([&](int a) { r = join(r, a); });
    return r;
  }
  int meet_of(const std::vector<int>& s) const {
    int r = top();
    for (int a : s) r = meet(r, a);
    return r;
  }
  int join_of(const std::vector<int>& s) const {
    int r = bottom();
    for (int a : s) r = join(r, a);
    return r;
  }

  ElemSet up(int a) const {
    ElemSet s(size());
    for (int x = 0; x < size(); ++x)
      if (leq(a, x)) s.set(x);
    return s;
  }
  ElemSet down(int a) const {
    ElemSet s(size());
    for (int x = 0; x < size(); ++x)
      if (leq(x, a)) s.set(x);
    return s;
  }

  /// std::nullopt when no element carries this name.
  std::optional<int> find(const std::string& nm) const {
    for (int i = 0; i < size(); ++i)
      if (d_->names[i] == nm) return i;
    return std::nullopt;
  }

  bool is_distributive() const {
    std::call_once(d_->dist_once, [this] {
      const int n = d_->n;
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          for (int c = 0; c < n && ok; ++c)
            if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) ok = false;
      d_->distributive = ok;
    });
    return d_->distributive;
  }

  /// Elements that are not the join of the elements strictly below them (bottom excluded).
  const std::vector<int>& join_irreducibles() const {
    std::call_once(d_->ji_once, [this] {
      for (int x = 0; x < size(); ++x) {
        if (x == bottom()) continue;
        int below = bottom();
        for (int y = 0; y < size(); ++y)
          if (lt(y, x)) below = join(below, y);
        if (below != x) d_->ji.push_back(x);
      }
    });
    return d_->ji;
  }

  FinLattice with_names(std::vector<std::string> names) const {
    FD_ENSURE(static_cast<int>(names.size()) == size(), "name count");
    auto nd = std::make_shared<Data>(d_->poset, d_->meet, d_->join, d_->bottom, d_->top, std::move(names));
    return FinLattice(std::move(nd));
  }

  /// Structural equality: same carrier size and order relation. Names are ignored.
  friend bool operator==(const FinLattice& a, const FinLattice& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->poset == b.d_->poset;
  }

  // Construction from verified tables; see validate_lattice() for the checked path.
  static FinLattice from_tables(FinPoset poset, std::vector<int> meet, std::vector<int> join, int bottom,
                                int top, std::vector<std::string> names) {
    return FinLattice(std::make_shared<Data>(std::move(poset), std::move(meet), std::move(join), bottom, top,
                                             std::move(names)));
  }

 private:
  struct Data {
    Data(FinPoset p, std::vector<int> m, std::vector<int> j, int b, int t, std::vector<std::string> nm)
        : n(p.size()), poset(std::move(p)), meet(std::move(m)), join(std::move(j)), bottom(b), top(t),
          names(std::move(nm)) {}
    int n;
    FinPoset poset;
    std::vector<int> meet, join;
    int bottom, top;
    std::vector<std::string> names;
    mutable std::once_flag dist_once;
    mutable bool distributive = false;
    mutable std::once_flag ji_once;
    mutable std::vector<int> ji;
  };
  explicit FinLattice(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(std::to_string(i));
  return v;
}

/// Computes meet/join tables; throws NotALattice naming the first pair without inf or sup.
inline FinLattice validate_lattice(const FinPoset& p, std::vector<std::string> names = {}) {
  const int n = p.size();
  if (names.empty()) names = default_names(n);
  if (static_cast<int>(names.size()) != n) throw Error(ErrorCode::InvariantViolation, "name count mismatch");
  if (n == 0) throw Error(ErrorCode::NotALattice, "empty poset has no bounds");
  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(static_cast<std::size_t>(n) * n);
  auto pair_str = [&](int a, int b) { return "(" + names[a] + "," + names[b] + ")"; };
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int inf = -1, sup = -1;
      for (int c = 0; c < n; ++c) {
        if (p.leq(c, a) && p.leq(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (p.leq(d, a) && p.leq(d, b) && !p.leq(d, c)) greatest = false;
          if (greatest) inf = c;
        }
        if (p.leq(a, c) && p.leq(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (p.leq(a, d) && p.leq(b, d) && !p.leq(c, d)) least = false;
          if (least) sup = c;
        }
      }
      if (inf < 0) throw Error(ErrorCode::NotALattice, "no infimum for pair " + pair_str(a, b));
      if (sup < 0) throw Error(ErrorCode::NotALattice, "no supremum for pair " + pair_str(a, b));
      meet[a * n + b] = meet[b * n + a] = inf;
      join[a * n + b] = join[b * n + a] = sup;
    }
  int bottom = 0, top = 0;
  for (int a = 0; a < n; ++a) {
    bottom = meet[bottom * n + a];
    top = join[top * n + a];
  }
  return FinLattice::from_tables(p, std::move(meet), std::move(join), bottom, top, std::move(names));
}

inline void require_distributive(const FinLattice& L, const std::string& context) {
  if (!L.is_distributive()) throw Error(ErrorCode::NotDistributive, context + " requires a distributive lattice");
}

inline bool is_distributive(const FinLattice& L) { return L.is_distributive(); }

// ---------------------------------------------------------------------------
// Families of subsets

/// A list of subsets of a ground set {0..ground-1}.
struct SubsetFamily {
  int ground = 0;
  std::vector<Mask> members;

  bool contains(Mask m) const { return std::find(members.begin(), members.end(), m) != members.end(); }
  int size() const { return static_cast<int>(members.size()); }

  /// Contains the empty and full sets and is closed under pairwise union and intersection.
  bool is_bounded_sublattice() const {
    if (!contains(0) || !contains(full_mask(ground))) return false;
    for (Mask a : members)
      for (Mask b : members)
        if (!contains(a | b) || !contains(a & b)) return false;
    return true;
  }

  /// Sorted (lexicographic index lists) and duplicate-free.
  SubsetFamily canonical() const {
    SubsetFamily f{ground, members};
    sort_lex(f.members);
    f.members.erase(std::unique(f.members.begin(), f.members.end()), f.members.end());
    return f;
  }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
};

/// Closure of `gens` (plus the empty and full sets) under pairwise union and intersection.
inline SubsetFamily generated_set_lattice(int ground, const std::vector<Mask>& gens) {
  std::vector<Mask> cur = gens;
  cur.push_back(0);
  cur.push_back(full_mask(ground));
  sort_lex(cur);
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> next = cur;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        for (Mask m : {cur[i] | cur[j], cur[i] & cur[j]})
          if (std::find(next.begin(), next.end(), m) == next.end()) {
            next.push_back(m);
            grew = true;
          }
    cur = std::move(next);
  }
  return SubsetFamily{ground, cur}.canonical();
}

/// Least Boolean subalgebra of the powerset containing the family.
inline SubsetFamily generated_boolean_subalgebra(int ground, const SubsetFamily& g) {
  const Mask full = full_mask(ground);
  std::vector<Mask> cur = g.members;
  cur.push_back(0);
  cur.push_back(full);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> next = cur;
    auto add = [&](Mask m) {
      if (std::find(next.begin(), next.end(), m) == next.end()) {
        next.push_back(m);
        grew = true;
      }
    };
    for (std::size_t i = 0; i < cur.size(); ++i) {
      add(full & ~cur[i]);
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        add(cur[i] | cur[j]);
        add(cur[i] & cur[j]);
      }
    }
    cur = std::move(next);
  }
  return SubsetFamily{ground, cur}.canonical();
}

/// The family ordered by inclusion, elements in the given member order and named
/// after their points.
inline FinLattice lattice_of_sets(const SubsetFamily& fam, const std::vector<std::string>& ground_names = {}) {
  const int n = fam.size();
  std::vector<std::string> names;
  for (Mask m : fam.members) names.push_back(mask_to_string(m, ground_names));
  std::map<Mask, int> index;
  for (int i = 0; i < n; ++i) index[fam.members[i]] = i;
  std::vector<char> leq(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a * n + b] = (fam.members[a] & ~fam.members[b]) == 0;
  bool closed = static_cast<int>(index.size()) == n;
  for (int a = 0; a < n && closed; ++a)
    for (int b = 0; b < n && closed; ++b)
      if (!index.count(fam.members[a] | fam.members[b]) || !index.count(fam.members[a] & fam.members[b]))
        closed = false;
  if (!closed || n == 0) return validate_lattice(FinPoset(n, std::move(leq)), std::move(names));
  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(static_cast<std::size_t>(n) * n);
  Mask lo = ~Mask{0}, hi = 0;
  for (int a = 0; a < n; ++a) {
    lo &= fam.members[a];
    hi |= fam.members[a];
    for (int b = 0; b < n; ++b) {
      meet[a * n + b] = index.at(fam.members[a] & fam.members[b]);
      join[a * n + b] = index.at(fam.members[a] | fam.members[b]);
    }
  }
  return FinLattice::from_tables(FinPoset(FinPoset::Unchecked{}, n, std::move(leq)), std::move(meet),
                                 std::move(join), index.at(lo), index.at(hi), std::move(names));
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// A map between finite lattices. `is_hom()` decides whether it preserves
/// bounds, meets and joins.
struct LatticeHom {
  FinLattice dom, cod;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }

  bool is_hom() const {
    if (static_cast<int>(map.size()) != dom.size()) return false;
    if (map[dom.bottom()] != cod.bottom() || map[dom.top()] != cod.top()) return false;
    for (int a = 0; a < dom.size(); ++a)
      for (int b = a + 1; b < dom.size(); ++b) {
        if (map[dom.meet(a, b)] != cod.meet(map[a], map[b])) return false;
        if (map[dom.join(a, b)] != cod.join(map[a], map[b])) return false;
      }
    return true;
  }
  bool injective() const {
    std::vector<char> seen(cod.size(), 0);
    for (int v : map) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
  bool surjective() const { return image().count() == cod.size(); }
  bool bijective() const { return injective() && surjective(); }
  ElemSet image() const {
    ElemSet s(cod.size());
    for (int v : map) s.set(v);
    return s;
  }
  ElemSet image(const ElemSet& src) const {
    ElemSet s(cod.size());
    src.for_each([&](int a) { s.set(map[a]); });
    return s;
  }

  static LatticeHom identity(const FinLattice& L) {
    std::vector<int> m(L.size());
    for (int i = 0; i < L.size(); ++i) m[i] = i;
    return {L, L, std::move(m)};
  }

  /// Inverse of a bijective map.
  LatticeHom inverse() const {
    FD_ENSURE(bijective(), "inverse of a non-bijective map");
    std::vector<int> inv(map.size());
    for (std::size_t a = 0; a < map.size(); ++a) inv[map[a]] = static_cast<int>(a);
    return {cod, dom, std::move(inv)};
  }

  friend bool operator==(const LatticeHom& a, const LatticeHom& b) {
    return a.map == b.map && a.dom == b.dom && a.cod == b.cod;
  }
};

/// g after f.
inline LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  FD_ENSURE(f.cod == g.dom, "composition of non-composable lattice maps");
  std::vector<int> m(f.map.size());
  for (std::size_t a = 0; a < m.size(); ++a) m[a] = g.map[f.map[a]];
  return {f.dom, g.cod, std::move(m)};
}

struct HomSearchOptions {
  /// Per-element forced image, -1 for free. Empty means no constraints.
  std::vector<int> fixed;
  bool injective = false;
  bool bijective = false;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::function<bool(const std::vector<int>&)> accept;
};

namespace detail {

struct HomSearch {
  const FinLattice& A;
  const FinLattice& B;
  const HomSearchOptions& opt;
  std::vector<int> ji;                   // JIs of A, linear-extension order
  std::vector<std::vector<int>> ji_below;  // per element of A: positions in `ji` below it
  std::vector<int> img;                  // image per JI position
  std::vector<char> b_is_ji;
  std::vector<std::vector<int>> found;

  HomSearch(const FinLattice& a, const FinLattice& b, const HomSearchOptions& o) : A(a), B(b), opt(o) {
    auto order = A.poset().linear_extension();
    const auto& jis = A.join_irreducibles();
    for (int x : order)
      if (std::find(jis.begin(), jis.end(), x) != jis.end()) ji.push_back(x);
    ji_below.resize(A.size());
    for (int x = 0; x < A.size(); ++x)
      for (std::size_t k = 0; k < ji.size(); ++k)
        if (A.leq(ji[k], x)) ji_below[x].push_back(static_cast<int>(k));
    img.assign(ji.size(), -1);
    b_is_ji.assign(B.size(), 0);
    for (int y : B.join_irreducibles()) b_is_ji[y] = 1;
  }

  int value(int x) const {
    int r = B.bottom();
    for (int k : ji_below[x]) r = B.join(r, img[k]);
    return r;
  }

  bool consistent(std::size_t pos) const {
    const int j = ji[pos];
    for (std::size_t k = 0; k <= pos; ++k) {
      const int i = ji[k];
      if (A.leq(i, j) && !B.leq(img[k], img[pos])) return false;
      if (opt.injective || opt.bijective)
        if (k != pos && img[k] == img[pos]) return false;
      const int m = A.meet(i, j);
      if (value(m) != B.meet(img[k], img[pos])) return false;
    }
    return true;
  }

  void run(std::size_t pos) {
    if (found.size() >= opt.limit) return;
    if (pos == ji.size()) {
      std::vector<int> map(A.size());
      for (int x = 0; x < A.size(); ++x) map[x] = value(x);
      LatticeHom h{A, B, map};
      if (!h.is_hom()) return;
      if (!opt.fixed.empty())
        for (int x = 0; x < A.size(); ++x)
          if (opt.fixed[x] >= 0 && opt.fixed[x] != map[x]) return;
      if ((opt.injective || opt.bijective) && !h.injective()) return;
      if (opt.bijective && !h.surjective()) return;
      if (opt.accept && !opt.accept(map)) return;
      found.push_back(std::move(map));
      return;
    }
    const int j = ji[pos];
    for (int y = 0; y < B.size(); ++y) {
      if (!opt.fixed.empty() && opt.fixed[j] >= 0 && opt.fixed[j] != y) continue;
      if (opt.bijective && !b_is_ji[y]) continue;
      img[pos] = y;
      if (consistent(pos)) run(pos + 1);
      if (found.size() >= opt.limit) return;
    }
    img[pos] = -1;
  }
};

}  // namespace detail

/// All lattice homomorphisms A -> B (bound-preserving), in lexicographic order of
/// their maps. Homomorphisms are determined by the images of join-irreducibles,
/// which are assigned first.
inline std::vector<LatticeHom> enumerate_homs(const FinLattice& A, const FinLattice& B,
                                              const HomSearchOptions& opt = {}) {
  if (opt.bijective && (A.size() != B.size() || A.join_irreducibles().size() != B.join_irreducibles().size()))
    return {};
  detail::HomSearch s(A, B, opt);
  s.run(0);
  std::sort(s.found.begin(), s.found.end());
  std::vector<LatticeHom> out;
  out.reserve(s.found.size());
  for (auto& m : s.found) out.push_back({A, B, std::move(m)});
  return out;
}

inline std::optional<LatticeHom> find_isomorphism(const FinLattice& A, const FinLattice& B,
                                                  std::vector<int> fixed = {}) {
  HomSearchOptions opt;
  opt.bijective = true;
  opt.limit = 1;
  opt.fixed = std::move(fixed);
  auto r = enumerate_homs(A, B, opt);
  if (r.empty()) return std::nullopt;
  return r.front();
}

// ---------------------------------------------------------------------------
// Heyting structure

inline int heyting_arrow(const FinLattice& L, int a, int b) {
  require_distributive(L, "heyting_arrow");
  int r = L.bottom();
  for (int x = 0; x < L.size(); ++x)
    if (L.leq(L.meet(x, a), b)) r = L.join(r, x);
  return r;
}

inline int pseudocomplement(const FinLattice& L, int a) { return heyting_arrow(L, a, L.bottom()); }

/// The complement of `a`, if it has one.
inline std::optional<int> complement(const FinLattice& L, int a) {
  int p = pseudocomplement(L, a);
  if (L.join(a, p) == L.top()) return p;
  return std::nullopt;
}

inline ElemSet complemented_elements(const FinLattice& L) {
  ElemSet s(L.size());
  for (int a = 0; a < L.size(); ++a)
    if (complement(L, a)) s.set(a);
  return s;
}

inline bool is_boolean(const FinLattice& L) {
  return L.is_distributive() && complemented_elements(L).count() == L.size();
}

inline std::vector<int> join_irreducibles(const FinLattice& L) { return L.join_irreducibles(); }

/// Elements that are not the meet of the elements strictly above them (top excluded).
inline std::vector<int> meet_irreducibles(const FinLattice& L) {
  std::vector<int> out;
  for (int x = 0; x < L.size(); ++x) {
    if (x == L.top()) continue;
    int above = L.top();
    for (int y = 0; y < L.size(); ++y)
      if (L.lt(x, y)) above = L.meet(above, y);
    if (above != x) out.push_back(x);
  }
  return out;
}

/// Cover-refinement definition of compactness: every cover of `a` has a finite
/// subcover. Covers are enumerated for lattices with at most 10 elements; above
/// that every family of elements is finite and is its own finite subcover.
inline bool is_compact_element(const FinLattice& L, int a) {
  const int n = L.size();
  if (n > 10) return true;
  for (std::uint32_t cover = 0; cover < (1u << n); ++cover) {
    int j = L.bottom();
    for (int x = 0; x < n; ++x)
      if (cover >> x & 1u) j = L.join(j, x);
    if (!L.leq(a, j)) continue;
    // Greedy refinement: drop members while the rest still covers a.
    std::uint32_t sub = cover;
    for (int x = 0; x < n; ++x) {
      if (!(sub >> x & 1u)) continue;
      std::uint32_t trial = sub & ~(1u << x);
      int tj = L.bottom();
      for (int y = 0; y < n; ++y)
        if (trial >> y & 1u) tj = L.join(tj, y);
      if (L.leq(a, tj)) sub = trial;
    }
    int sj = L.bottom();
    for (int y = 0; y < n; ++y)
      if (sub >> y & 1u) sj = L.join(sj, y);
    if (!L.leq(a, sj)) return false;
  }
  return true;
}

inline ElemSet compact_elements(const FinLattice& L) {
  ElemSet s(L.size());
  for (int a = 0; a < L.size(); ++a)
    if (is_compact_element(L, a)) s.set(a);
  return s;
}

/// `s` join-generates L: every element is the join of the members of `s` below it.
inline bool join_generates(const FinLattice& L, const ElemSet& s) {
  for (int a = 0; a < L.size(); ++a) {
    int j = L.bottom();
    s.for_each([&](int x) {
      if (L.leq(x, a)) j = L.join(j, x);
    });
    if (j != a) return false;
  }
  return true;
}

/// S consists of compact elements, is closed under finite meets and join-generates L.
inline bool is_coherent_pair(const FinLattice& L, const ElemSet& S) {
  if (!S.test(L.top())) return false;
  bool ok = true;
  S.for_each([&](int a) {
    if (!ok) return;
    if (!is_compact_element(L, a)) ok = false;
    S.for_each([&](int b) {
      if (!S.test(L.meet(a, b))) ok = false;
    });
  });
  return ok && join_generates(L, S);
}

/// Least subset containing G and the bounds, closed under meet and join.
inline ElemSet generated_sublattice(const FinLattice& L, const ElemSet& G) {
  ElemSet s = G;
  s.set(L.bottom());
  s.set(L.top());
  for (bool grew = true; grew;) {
    grew = false;
    auto idx = s.indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        for (int m : {L.meet(idx[i], idx[j]), L.join(idx[i], idx[j])})
          if (!s.test(m)) {
            s.set(m);
            grew = true;
          }
  }
  return s;
}

inline bool is_bounded_sublattice(const FinLattice& L, const ElemSet& S) {
  if (!S.test(L.bottom()) || !S.test(L.top())) return false;
  bool ok = true;
  S.for_each([&](int a) {
    S.for_each([&](int b) {
      if (!S.test(L.meet(a, b)) || !S.test(L.join(a, b))) ok = false;
    });
  });
  return ok;
}

/// A bounded sublattice materialized as a lattice, with its inclusion.
struct Sublattice {
  FinLattice lattice;
  std::vector<int> elems;  // sub index -> parent index
  LatticeHom inclusion;
  int index_of(int parent) const {
    auto it = std::find(elems.begin(), elems.end(), parent);
    return it == elems.end() ? -1 : static_cast<int>(it - elems.begin());
  }
};

inline Sublattice sublattice(const FinLattice& L, const ElemSet& S) {
  if (!is_bounded_sublattice(L, S)) throw Error(ErrorCode::InvariantViolation, "not a bounded sublattice");
  std::vector<int> elems = S.indices();
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(L.size(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  std::vector<char> leq(static_cast<std::size_t>(m) * m);
  std::vector<int> meet(static_cast<std::size_t>(m) * m), join(static_cast<std::size_t>(m) * m);
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back(L.name(elems[i]));
    for (int j = 0; j < m; ++j) {
      leq[i * m + j] = L.leq(elems[i], elems[j]);
      meet[i * m + j] = pos[L.meet(elems[i], elems[j])];
      join[i * m + j] = pos[L.join(elems[i], elems[j])];
    }
  }
  FinLattice sub = FinLattice::from_tables(FinPoset(FinPoset::Unchecked{}, m, std::move(leq)), std::move(meet),
                                           std::move(join), pos[L.bottom()], pos[L.top()], std::move(names));
  return {sub, elems, LatticeHom{sub, L, elems}};
}

/// The subposet on `elems` as a lattice in its own right (joins may differ from L's).
inline FinLattice subposet_lattice(const FinLattice& L, const std::vector<int>& elems) {
  std::vector<std::string> names;
  for (int e : elems) names.push_back(L.name(e));
  return validate_lattice(L.poset().restrict(elems), std::move(names));
}

// ---------------------------------------------------------------------------
// Filters and ideals

inline bool is_filter(const FinLattice& L, const ElemSet& F) {
  if (!F.test(L.top())) return false;
  bool ok = true;
  F.for_each([&](int a) {
    for (int x = 0; x < L.size(); ++x)
      if (L.leq(a, x) && !F.test(x)) ok = false;
    F.for_each([&](int b) {
      if (!F.test(L.meet(a, b))) ok = false;
    });
  });
  return ok;
}

inline bool is_prime_filter(const FinLattice& L, const ElemSet& F) {
  if (!is_filter(L, F) || F.test(L.bottom())) return false;
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (F.test(L.join(a, b)) && !F.test(a) && !F.test(b)) return false;
  return true;
}

/// Prime filters via the join-irreducible fast path {up(j)}.
inline std::vector<ElemSet> prime_filters(const FinLattice& D) {
  require_distributive(D, "prime_filters");
  std::vector<ElemSet> out;
  for (int j : D.join_irreducibles()) out.push_back(D.up(j));
  std::sort(out.begin(), out.end());
  return out;
}

/// Prime filters by testing every subset of the carrier (at most 16 elements).
inline std::vector<ElemSet> prime_filters_exhaustive(const FinLattice& D) {
  require_distributive(D, "prime_filters");
  const int n = D.size();
  if (n > 16) throw Error(ErrorCode::SizeExceeded, "exhaustive prime filter search limited to 16 elements");
  std::vector<ElemSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!(m >> D.top() & 1u) || (m >> D.bottom() & 1u)) continue;
    ElemSet F(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) F.set(i);
    if (is_prime_filter(D, F)) out.push_back(F);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Backtracking over a linear extension: each element is included or excluded,
// with includes forced by `must` and excludes forced by a missing lower element.
inline void enumerate_downsets(const FinPoset& P, const FinLattice* join_closed_in, std::vector<ElemSet>& out) {
  const int n = P.size();
  auto order = P.linear_extension();
  ElemSet cur(n);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    const int x = order[k];
    bool can_include = true;
    for (int y = 0; y < n; ++y)
      if (P.lt(y, x) && !cur.test(y)) can_include = false;
    bool must_include = false;
    if (join_closed_in) {
      const FinLattice& L = *join_closed_in;
      if (x == L.bottom()) must_include = true;  // ideals are nonempty
      cur.for_each([&](int a) {
        cur.for_each([&](int b) {
          if (L.join(a, b) == x) must_include = true;
        });
      });
    }
    if (can_include) {
      cur.set(x);
      rec(k + 1);
      cur.reset(x);
    }
    if (!must_include) rec(k + 1);
  };
  rec(0);
}

}  // namespace detail

struct DownsetLattice {
  FinLattice lattice;
  std::vector<ElemSet> downsets;  // element i of `lattice`
};

/// Downsets of P ordered by inclusion (lexicographic element order).
inline DownsetLattice downset_lattice(const FinPoset& P, const std::vector<std::string>& point_names = {}) {
  std::vector<ElemSet> ds;
  detail::enumerate_downsets(P, nullptr, ds);
  std::sort(ds.begin(), ds.end());
  const int m = static_cast<int>(ds.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[ds[i].indices()] = i;
  std::vector<char> leq(static_cast<std::size_t>(m) * m);
  std::vector<int> meet(static_cast<std::size_t>(m) * m), join(static_cast<std::size_t>(m) * m);
  std::vector<std::string> names;
  int bottom = 0, top = 0;
  for (int i = 0; i < m; ++i) {
    std::string nm = "{";
    bool first = true;
    ds[i].for_each([&](int p) {
      nm += (first ? "" : ",") +
            (static_cast<std::size_t>(p) < point_names.size() ? point_names[p] : std::to_string(p));
      first = false;
    });
    names.push_back(nm + "}");
    if (ds[i].count() == 0) bottom = i;
    if (ds[i].count() == P.size()) top = i;
    for (int j = 0; j < m; ++j) {
      leq[i * m + j] = ds[i].subset_of(ds[j]);
      meet[i * m + j] = index.at((ds[i] & ds[j]).indices());
      join[i * m + j] = index.at((ds[i] | ds[j]).indices());
    }
  }
  FinLattice L = FinLattice::from_tables(FinPoset(FinPoset::Unchecked{}, m, std::move(leq)), std::move(meet),
                                         std::move(join), bottom, top, std::move(names));
  return {L, std::move(ds)};
}

struct IdealLattice {
  FinLattice lattice;
  std::vector<ElemSet> ideals;  // element i of `lattice`
  LatticeHom principal;         // a -> down(a)
};

/// Ideals (nonempty join-closed downsets) of D ordered by inclusion, with the
/// principal-ideal embedding. Finite ideals are principal, so ideal i is listed
/// at the position of its generator and the embedding is an isomorphism.
inline IdealLattice ideal_lattice(const FinLattice& D) {
  require_distributive(D, "ideal_lattice");
  std::vector<ElemSet> found;
  detail::enumerate_downsets(D.poset(), &D, found);
  const int n = D.size();
  std::vector<ElemSet> ideals(n);
  std::vector<char> seen(n, 0);
  for (auto& I : found) {
    const int g = D.join_of(I);
    FD_ENSURE(I == D.down(g), "finite ideal is not principal");
    FD_ENSURE(!seen[g], "duplicate ideal");
    seen[g] = 1;
    ideals[g] = I;
  }
  FD_ENSURE(static_cast<int>(found.size()) == n, "ideal count differs from lattice size");
  std::vector<char> leq(static_cast<std::size_t>(n) * n);
  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("down(" + D.name(i) + ")");
    for (int j = 0; j < n; ++j) {
      leq[i * n + j] = ideals[i].subset_of(ideals[j]);
      meet[i * n + j] = D.meet(D.join_of(ideals[i]), D.join_of(ideals[j]));
      join[i * n + j] = D.join(D.join_of(ideals[i]), D.join_of(ideals[j]));
    }
  }
  FinLattice L = FinLattice::from_tables(FinPoset(FinPoset::Unchecked{}, n, std::move(leq)), std::move(meet),
                                         std::move(join), D.bottom(), D.top(), std::move(names));
  std::vector<int> principal(n);
  for (int a = 0; a < n; ++a) principal[a] = a;
  LatticeHom emb{D, L, principal};
  FD_ENSURE(emb.is_hom() && emb.bijective(), "principal ideal map is not an isomorphism");
  return {L, std::move(ideals), emb};
}

/// Birkhoff representation: the isomorphism a -> {j in JI(D) : j <= a} from D onto
/// the downsets of its join-irreducible subposet.
inline LatticeHom birkhoff_roundtrip(const FinLattice& D) {
  require_distributive(D, "birkhoff_roundtrip");
  const auto& ji = D.join_irreducibles();
  std::vector<std::string> jn;
  for (int j : ji) jn.push_back(D.name(j));
  auto dl = downset_lattice(D.poset().restrict(ji), jn);
  std::vector<int> map(D.size());
  for (int a = 0; a < D.size(); ++a) {
    ElemSet s(static_cast<int>(ji.size()));
    for (std::size_t k = 0; k < ji.size(); ++k)
      if (D.leq(ji[k], a)) s.set(static_cast<int>(k));
    auto it = std::find(dl.downsets.begin(), dl.downsets.end(), s);
    FD_ENSURE(it != dl.downsets.end(), "join-irreducible set below an element is not a downset");
    map[a] = static_cast<int>(it - dl.downsets.begin());
  }
  LatticeHom h{D, dl.lattice, map};
  FD_ENSURE(h.bijective() && h.is_hom(), "Birkhoff map is not an isomorphism");
  return h;
}

/// Prime-filter representation a -> {F prime : a in F}.
struct PhiEmbedding {
  std::vector<ElemSet> prime_filters;
  std::vector<Mask> tilde;  // per element of D, a subset of prime_filters
  SubsetFamily image;       // canonical family of the distinct tildes
  FinLattice image_lattice;
  LatticeHom hom;           // D -> image_lattice
};

inline PhiEmbedding phi_embedding(const FinLattice& D) {
  PhiEmbedding r;
  r.prime_filters = prime_filters(D);
  const int p = static_cast<int>(r.prime_filters.size());
  if (p > kMaxGround) throw Error(ErrorCode::SizeExceeded, "more than 64 prime filters");
  r.tilde.resize(D.size());
  for (int a = 0; a < D.size(); ++a)
    for (int k = 0; k < p; ++k)
      if (r.prime_filters[k].test(a)) r.tilde[a] |= bit(k);
  r.image = SubsetFamily{p, r.tilde}.canonical();
  FD_ENSURE(r.image.size() == D.size(), "prime filter map is not injective");
  std::vector<std::string> fnames;
  for (const auto& F : r.prime_filters) {
    int g = D.meet_of(F);
    fnames.push_back("up(" + D.name(g) + ")");
  }
  r.image_lattice = lattice_of_sets(r.image, fnames);
  std::vector<int> map(D.size());
  for (int a = 0; a < D.size(); ++a)
    map[a] = static_cast<int>(std::find(r.image.members.begin(), r.image.members.end(), r.tilde[a]) -
                              r.image.members.begin());
  r.hom = LatticeHom{D, r.image_lattice, map};
  FD_ENSURE(r.hom.is_hom(), "prime filter map is not a lattice homomorphism");
  return r;
}

// ---------------------------------------------------------------------------
// Canonical lattices

namespace catalog {

inline FinLattice chain(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return validate_lattice(FinPoset::chain(n), names);
}

inline FinLattice C2() { return validate_lattice(FinPoset::chain(2), {"0", "1"}); }
inline FinLattice C3() { return validate_lattice(FinPoset::chain(3), {"0", "m", "1"}); }

/// Powerset of an n-point set; element index = bitmask.
inline FinLattice powerset(int n, const std::vector<std::string>& points = {}) {
  std::vector<Mask> all;
  for (Mask m = 0; m < (Mask{1} << n); ++m) all.push_back(m);
  std::vector<std::string> pts = points;
  if (pts.empty())
    for (int i = 0; i < n; ++i) pts.push_back(std::string(1, static_cast<char>('a' + i)));
  return lattice_of_sets(SubsetFamily{n, all}, pts);
}

inline FinLattice B4() { return powerset(2, {"a", "b"}); }
inline FinLattice B8() { return powerset(3, {"x", "y", "z"}); }

/// Pentagon: 0 < a < c < 1 and 0 < b < 1.
inline FinLattice N5() {
  return validate_lattice(FinPoset::from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}),
                          {"0", "a", "b", "c", "1"});
}

/// Diamond: 0 < a, b, c < 1.
inline FinLattice M3() {
  return validate_lattice(FinPoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
                          {"0", "a", "b", "c", "1"});
}

}  // namespace catalog

}  // namespace finduality
