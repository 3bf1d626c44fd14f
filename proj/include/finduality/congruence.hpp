#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "finduality/lattice.hpp"

namespace finduality {

/// An equivalence on the carrier of L compatible with meet and join, stored as a
/// canonical block assignment: block[x] is the least element index equivalent to x.
struct Congruence {
  FinLattice lattice;
  std::vector<int> block;

  /// Canonicalizes an arbitrary labelling of blocks.
  static Congruence from_labels(const FinLattice& L, const std::vector<int>& label) {
    std::map<int, int> first;
    std::vector<int> b(label.size());
    for (std::size_t x = 0; x < label.size(); ++x) {
      auto [it, fresh] = first.emplace(label[x], static_cast<int>(x));
      b[x] = it->second;
    }
    return {L, std::move(b)};
  }

  bool related(int x, int y) const { return block[x] == block[y]; }

  int num_blocks() const {
    int c = 0;
    for (std::size_t x = 0; x < block.size(); ++x)
      if (block[x] == static_cast<int>(x)) ++c;
    return c;
  }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    std::map<int, std::size_t> pos;
    for (std::size_t x = 0; x < block.size(); ++x) {
      auto [it, fresh] = pos.emplace(block[x], out.size());
      if (fresh) out.emplace_back();
      out[it->second].push_back(static_cast<int>(x));
    }
    return out;
  }

  bool is_compatible() const {
    const FinLattice& L = lattice;
    for (int x = 0; x < L.size(); ++x)
      for (int z = 0; z < L.size(); ++z) {
        const int r = block[x];
        if (!related(L.meet(x, z), L.meet(r, z)) || !related(L.join(x, z), L.join(r, z))) return false;
      }
    return true;
  }

  /// Refinement: every pair related here is related in `o`.
  bool finer_than(const Congruence& o) const {
    for (std::size_t x = 0; x < block.size(); ++x)
      if (o.block[x] != o.block[block[x]]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& b : blocks()) {
      if (!s.empty()) s += "|";
      for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + lattice.name(b[i]);
    }
    return s;
  }

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.block == b.block; }
  friend bool operator<(const Congruence& a, const Congruence& b) {
    int na = a.num_blocks(), nb = b.num_blocks();
    if (na != nb) return na > nb;
    return a.block < b.block;
  }
};

inline Congruence diagonal(const FinLattice& L) {
  std::vector<int> b(L.size());
  std::iota(b.begin(), b.end(), 0);
  return {L, b};
}

inline Congruence total(const FinLattice& L) { return {L, std::vector<int>(L.size(), 0)}; }

inline Congruence relation_congruence(const FinLattice& L, const std::function<int(int)>& key) {
  std::vector<int> label(L.size());
  for (int x = 0; x < L.size(); ++x) label[x] = key(x);
  Congruence c = Congruence::from_labels(L, label);
  FD_ENSURE(c.is_compatible(), "relation is not a congruence");
  return c;
}

/// Closed congruence: x ~ y iff a v x = a v y.
inline Congruence nabla(const FinLattice& L, int a) {
  require_distributive(L, "nabla");
  return relation_congruence(L, [&](int x) { return L.join(a, x); });
}

/// Open congruence: x ~ y iff a ^ x = a ^ y.
inline Congruence delta(const FinLattice& L, int a) {
  require_distributive(L, "delta");
  return relation_congruence(L, [&](int x) { return L.meet(a, x); });
}

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    p[a] = b;
    return true;
  }
};

// Close a union-find partition under compatibility with meet and join.
inline Congruence close_congruence(const FinLattice& L, UnionFind& uf) {
  const int n = L.size();
  for (bool grew = true; grew;) {
    grew = false;
    for (int x = 0; x < n; ++x) {
      const int r = uf.find(x);
      if (r == x) continue;
      for (int z = 0; z < n; ++z) {
        grew |= uf.unite(L.meet(x, z), L.meet(r, z));
        grew |= uf.unite(L.join(x, z), L.join(r, z));
      }
    }
  }
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) label[x] = uf.find(x);
  return Congruence::from_labels(L, label);
}

}  // namespace detail

/// Least congruence containing every given congruence (diagonal for an empty list).
inline Congruence congruence_join(const FinLattice& L, const std::vector<Congruence>& thetas) {
  detail::UnionFind uf(L.size());
  for (const auto& t : thetas)
    for (int x = 0; x < L.size(); ++x) uf.unite(x, t.block[x]);
  return detail::close_congruence(L, uf);
}

inline Congruence congruence_join(const Congruence& a, const Congruence& b) {
  return congruence_join(a.lattice, {a, b});
}

/// Intersection of the relations (total for an empty list).
inline Congruence congruence_meet(const FinLattice& L, const std::vector<Congruence>& thetas) {
  std::vector<int> label(L.size(), 0);
  for (const auto& t : thetas) {
    std::map<std::pair<int, int>, int> ids;
    for (int x = 0; x < L.size(); ++x) label[x] = ids.emplace(std::pair{label[x], t.block[x]}, x).first->second;
  }
  return Congruence::from_labels(L, label);
}

inline Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  return congruence_meet(a.lattice, {a, b});
}

/// Least congruence identifying a and b.
inline Congruence principal_congruence(const FinLattice& L, int a, int b) {
  detail::UnionFind uf(L.size());
  uf.unite(a, b);
  return detail::close_congruence(L, uf);
}

/// A family of congruences of `base` closed under meet and join, ordered by refinement.
struct CongruenceLattice {
  FinLattice base;
  std::vector<Congruence> members;
  FinLattice lattice;  // element i is members[i]

  int index_of(const Congruence& c) const {
    auto it = std::lower_bound(members.begin(), members.end(), c);
    return (it != members.end() && *it == c) ? static_cast<int>(it - members.begin()) : -1;
  }
  int size() const { return static_cast<int>(members.size()); }
};

inline constexpr int kDefaultCongruenceBound = 10;

namespace detail {

inline void guard_size(const FinLattice& L, int bound) {
  if (L.size() > bound)
    throw Error(ErrorCode::SizeExceeded, "congruence computation limited to " + std::to_string(bound) +
                                             " elements, got " + std::to_string(L.size()));
}

// Builds the refinement lattice of a meet/join-closed, sorted family.
inline CongruenceLattice make_congruence_lattice(const FinLattice& L, std::vector<Congruence> ms) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  const int m = static_cast<int>(ms.size());
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < m; ++i) idx[ms[i].block] = i;
  std::vector<char> leq(static_cast<std::size_t>(m) * m);
  std::vector<int> meet(static_cast<std::size_t>(m) * m), join(static_cast<std::size_t>(m) * m);
  std::vector<std::string> names;
  int bottom = -1, top = -1;
  for (int i = 0; i < m; ++i) {
    names.push_back(ms[i].to_string());
    if (ms[i].num_blocks() == L.size()) bottom = i;
    if (ms[i].num_blocks() == 1) top = i;
    for (int j = 0; j < m; ++j) {
      leq[i * m + j] = ms[i].finer_than(ms[j]);
      if (j < i) {
        meet[i * m + j] = meet[j * m + i];
        join[i * m + j] = join[j * m + i];
        continue;
      }
      auto mi = idx.find(congruence_meet(ms[i], ms[j]).block);
      auto jo = idx.find(congruence_join(ms[i], ms[j]).block);
      FD_ENSURE(mi != idx.end() && jo != idx.end(), "congruence family not closed");
      meet[i * m + j] = mi->second;
      join[i * m + j] = jo->second;
    }
  }
  FD_ENSURE(bottom >= 0 && top >= 0, "congruence family lacks diagonal or total");
  FinLattice lat = FinLattice::from_tables(FinPoset(FinPoset::Unchecked{}, m, std::move(leq)), std::move(meet),
                                           std::move(join), bottom, top, std::move(names));
  return {L, std::move(ms), lat};
}

// Closure of a generating family under binary meet and join.
inline std::vector<Congruence> close_family(const FinLattice& L, std::vector<Congruence> gens) {
  std::set<std::vector<int>> seen;
  std::vector<Congruence> all;
  auto add = [&](Congruence c) {
    if (seen.insert(c.block).second) {
      all.push_back(std::move(c));
      return true;
    }
    return false;
  };
  add(diagonal(L));
  add(total(L));
  for (auto& g : gens) add(g);
  // Each new member is combined with every earlier one exactly once.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      add(congruence_meet(all[i], all[j]));
      add(congruence_join(all[i], all[j]));
    }
  return all;
}

}  // namespace detail

/// Every congruence, by testing each set partition of the carrier.
inline CongruenceLattice all_congruences_by_partitions(const FinLattice& L, int bound = kDefaultCongruenceBound) {
  detail::guard_size(L, bound);
  const int n = L.size();
  std::vector<Congruence> found;
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int x, int used) {
    if (x == n) {
      Congruence c = Congruence::from_labels(L, label);
      if (c.is_compatible()) found.push_back(std::move(c));
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      label[x] = b;
      rec(x + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) {
    label[0] = 0;
    rec(1, 1);
  }
  return detail::make_congruence_lattice(L, std::move(found));
}

/// Every congruence, as joins of principal congruences of covering pairs.
inline CongruenceLattice all_congruences_by_principals(const FinLattice& L, int bound = kDefaultCongruenceBound) {
  detail::guard_size(L, bound);
  std::vector<Congruence> gens;
  for (auto [a, b] : L.poset().covers()) gens.push_back(principal_congruence(L, a, b));
  std::set<std::vector<int>> seen;
  std::vector<Congruence> all;
  auto add = [&](Congruence c) {
    if (seen.insert(c.block).second) all.push_back(std::move(c));
  };
  add(diagonal(L));
  for (auto& g : gens) add(g);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& g : gens) add(congruence_join(all[i], g));
  return detail::make_congruence_lattice(L, std::move(all));
}

/// The congruence frame of L. Partition filtering below 7 elements, principal
/// joins above.
inline CongruenceLattice all_congruences(const FinLattice& L, int bound = kDefaultCongruenceBound) {
  return L.size() < 7 ? all_congruences_by_partitions(L, bound) : all_congruences_by_principals(L, bound);
}

/// Subframe of the congruence frame generated by all closed congruences and the
/// open congruences of members of S.
inline CongruenceLattice generated_congruence_subframe(const FinLattice& L, const ElemSet& S,
                                                       int bound = kDefaultCongruenceBound) {
  detail::guard_size(L, bound);
  std::vector<Congruence> gens;
  for (int a = 0; a < L.size(); ++a) gens.push_back(nabla(L, a));
  S.for_each([&](int s) { gens.push_back(delta(L, s)); });
  return detail::make_congruence_lattice(L, detail::close_family(L, std::move(gens)));
}

/// Inclusion of one congruence family into a larger one.
inline LatticeHom congruence_embedding(const CongruenceLattice& sub, const CongruenceLattice& all) {
  std::vector<int> map;
  for (const auto& c : sub.members) {
    int i = all.index_of(c);
    FD_ENSURE(i >= 0, "congruence missing from the larger family");
    map.push_back(i);
  }
  return {sub.lattice, all.lattice, std::move(map)};
}

/// a -> nabla(a) into a congruence family containing all closed congruences.
inline LatticeHom nabla_hom(const CongruenceLattice& C) {
  std::vector<int> map;
  for (int a = 0; a < C.base.size(); ++a) {
    int i = C.index_of(nabla(C.base, a));
    FD_ENSURE(i >= 0, "closed congruence missing from family");
    map.push_back(i);
  }
  return {C.base, C.lattice, std::move(map)};
}

/// Index of delta(s) in C, or -1.
inline int delta_index(const CongruenceLattice& C, int s) { return C.index_of(delta(C.base, s)); }

struct Quotient {
  FinLattice lattice;
  LatticeHom q;                    // L -> L/theta
  std::vector<int> right_adjoint;  // block -> its largest element
};

/// The block lattice L/theta with the quotient map and its right adjoint.
inline Quotient quotient(const FinLattice& L, const Congruence& theta) {
  FD_ENSURE(theta.is_compatible(), "quotient by a non-congruence");
  std::vector<int> reps;
  std::vector<int> pos(L.size(), -1);
  for (int x = 0; x < L.size(); ++x)
    if (theta.block[x] == x) {
      pos[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  const int m = static_cast<int>(reps.size());
  std::vector<char> leq(static_cast<std::size_t>(m) * m);
  std::vector<int> meet(static_cast<std::size_t>(m) * m), join(static_cast<std::size_t>(m) * m);
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back(L.name(reps[i]));
    for (int j = 0; j < m; ++j) {
      leq[i * m + j] = theta.related(L.meet(reps[i], reps[j]), reps[i]);
      meet[i * m + j] = pos[theta.block[L.meet(reps[i], reps[j])]];
      join[i * m + j] = pos[theta.block[L.join(reps[i], reps[j])]];
    }
  }
  FinLattice Q = FinLattice::from_tables(FinPoset(m, std::move(leq)), std::move(meet), std::move(join),
                                         pos[theta.block[L.bottom()]], pos[theta.block[L.top()]], std::move(names));
  std::vector<int> qmap(L.size());
  for (int x = 0; x < L.size(); ++x) qmap[x] = pos[theta.block[x]];
  LatticeHom q{L, Q, qmap};
  FD_ENSURE(q.is_hom() && q.surjective(), "quotient map is not a surjective homomorphism");
  std::vector<int> radj(m, L.bottom());
  for (int x = 0; x < L.size(); ++x) radj[qmap[x]] = L.join(radj[qmap[x]], x);
  for (int i = 0; i < m; ++i) FD_ENSURE(qmap[radj[i]] == i, "right adjoint is not a section");
  return {Q, q, radj};
}

/// The unique homomorphism C_S L -> M extending h along nabla, sending delta(s)
/// to the complement of h(s). Throws NotComplemented when some h(s) has no complement.
inline LatticeHom universal_extension(const LatticeHom& h, const ElemSet& S, const CongruenceLattice& CS) {
  const FinLattice& L = h.dom;
  const FinLattice& M = h.cod;
  require_distributive(M, "universal_extension");
  std::vector<int> val(CS.size(), -1);
  auto assign = [&](int i, int v) {
    if (val[i] < 0) {
      val[i] = v;
      return true;
    }
    if (val[i] != v)
      throw Error(ErrorCode::InvariantViolation, "inconsistent extension at congruence " + CS.members[i].to_string());
    return false;
  };
  for (int a = 0; a < L.size(); ++a) {
    int i = CS.index_of(nabla(L, a));
    FD_ENSURE(i >= 0, "closed congruence missing");
    assign(i, h(a));
  }
  S.for_each([&](int s) {
    auto c = complement(M, h(s));
    if (!c) throw Error(ErrorCode::NotComplemented, L.name(s));
    int i = delta_index(CS, s);
    FD_ENSURE(i >= 0, "open congruence missing");
    assign(i, *c);
  });
  const FinLattice& C = CS.lattice;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < C.size(); ++i) {
      if (val[i] < 0) continue;
      for (int j = 0; j < C.size(); ++j) {
        if (val[j] < 0) continue;
        grew |= assign(C.meet(i, j), M.meet(val[i], val[j]));
        grew |= assign(C.join(i, j), M.join(val[i], val[j]));
      }
    }
  }
  for (int v : val) FD_ENSURE(v >= 0, "extension does not reach every congruence");
  LatticeHom ext{C, M, val};
  FD_ENSURE(ext.is_hom(), "extension is not a homomorphism");
  return ext;
}

/// Every homomorphism C_S L -> M agreeing with h on closed congruences.
inline std::vector<LatticeHom> extensions_along_nabla(const LatticeHom& h, const CongruenceLattice& CS) {
  HomSearchOptions opt;
  opt.fixed.assign(CS.size(), -1);
  for (int a = 0; a < h.dom.size(); ++a) opt.fixed[CS.index_of(nabla(h.dom, a))] = h(a);
  return enumerate_homs(CS.lattice, h.cod, opt);
}

}  // namespace finduality
