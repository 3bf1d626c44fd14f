#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finduality/lattice.hpp"
#include "finduality/pervin.hpp"

namespace finduality {

namespace detail {

inline Preorder preorder_of_upsets(int n, const std::vector<Mask>& ups) {
  std::vector<char> t(static_cast<std::size_t>(n) * n, 1);
  for (Mask S : ups)
    for (int x = 0; x < n; ++x)
      if (has(S, x))
        for (int y = 0; y < n; ++y)
          if (!has(S, y)) t[x * n + y] = 0;
  return Preorder(Preorder::Unchecked{}, n, std::move(t));
}

inline std::vector<Mask> upsets_of(const Preorder& p) {
  const int n = p.size();
  std::vector<Mask> ups;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    bool up = true;
    for (int x = 0; x < n && up; ++x)
      if (has(m, x))
        for (int y = 0; y < n; ++y)
          if (p.leq(x, y) && !has(m, y)) {
            up = false;
            break;
          }
    if (up) ups.push_back(m);
  }
  return ups;
}

// Every preorder on k+1 points extending p by a new point k, given by the set D
// of old points below it and the set U of old points above it.
inline void for_each_extension(const Preorder& p, bool t0, const std::function<void(const Preorder&)>& f) {
  const int k = p.size();
  for (Mask D = 0; D <= full_mask(k); ++D)
    for (Mask U = 0; U <= full_mask(k); ++U) {
      if (t0 && (D & U)) continue;
      bool ok = true;
      for (int x = 0; x < k && ok; ++x)
        for (int y = 0; y < k && ok; ++y) {
          if (!p.leq(x, y)) continue;
          if (has(D, y) && !has(D, x)) ok = false;
          if (has(U, x) && !has(U, y)) ok = false;
        }
      for (int d : mask_indices(D))
        for (int u : mask_indices(U))
          if (!p.leq(d, u)) ok = false;
      if (!ok) continue;
      const int m = k + 1;
      std::vector<char> t(static_cast<std::size_t>(m) * m, 0);
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) t[x * m + y] = p.leq(x, y);
      for (int x = 0; x < k; ++x) {
        t[x * m + k] = has(D, x);
        t[k * m + x] = has(U, x);
      }
      t[k * m + k] = 1;
      f(Preorder(Preorder::Unchecked{}, m, std::move(t)));
    }
}

// Canonical upset families, level by level. `max_family` (0 = none) prunes
// extensions: adding a point never decreases the number of upsets.
inline std::vector<std::vector<std::vector<Mask>>> preorder_levels(int n, bool t0, int max_family) {
  std::vector<std::vector<std::vector<Mask>>> levels = {{{0}}};
  for (int k = 0; k < n; ++k) {
    std::set<std::vector<Mask>> next;
    for (const auto& fam : levels.back())
      for_each_extension(preorder_of_upsets(k, fam), t0, [&](const Preorder& q) {
        auto ups = upsets_of(q);
        if (max_family > 0 && static_cast<int>(ups.size()) > max_family) return;
        next.insert(canonical_key(SubsetFamily{k + 1, ups}));
      });
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

}  // namespace detail

/// Pervin spaces on exactly n points up to isomorphism (finite Pervin spaces are
/// the upset families of preorders), optionally T0 only and with at most
/// `max_family` members (0 = unbounded). Ordered by family size, then key.
inline std::vector<PervinSpace> enumerate_pervin(int n, bool t0_only = false, int max_family = 0) {
  if (n > 6) throw Error(ErrorCode::SizeExceeded, "Pervin enumeration limited to 6 points");
  auto levels = detail::preorder_levels(n, t0_only, 0);
  std::vector<PervinSpace> out;
  for (auto& f : levels[n]) {
    if (max_family > 0 && static_cast<int>(f.size()) > max_family) continue;
    out.push_back(PervinSpace::make(PervinSpace::letters(n), f));
  }
  std::stable_sort(out.begin(), out.end(), [](const PervinSpace& a, const PervinSpace& b) {
    return a.family.size() < b.family.size();
  });
  return out;
}

/// All Pervin spaces with 1..max_points points (up to isomorphism).
inline std::vector<PervinSpace> enumerate_pervin_upto(int max_points, bool t0_only = false, int max_family = 0) {
  std::vector<PervinSpace> out;
  for (int n = 1; n <= max_points; ++n)
    for (auto& P : enumerate_pervin(n, t0_only, max_family)) out.push_back(std::move(P));
  return out;
}

/// Distributive lattices with at most max_size elements up to isomorphism,
/// realized as upset lattices of posets. Ordered by size.
inline std::vector<FinLattice> enumerate_distributive_lattices(int max_size) {
  if (max_size > 12) throw Error(ErrorCode::SizeExceeded, "distributive lattice enumeration limited to 12");
  if (max_size < 1) return {};
  auto levels = detail::preorder_levels(max_size - 1, true, max_size);
  std::vector<std::vector<Mask>> keys;
  for (const auto& lvl : levels)
    for (const auto& f : lvl) keys.push_back(f);
  std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<FinLattice> out;
  for (const auto& key : keys) {
    const int k = popcount(key.back());
    FinLattice L = PervinSpace::make(PervinSpace::letters(k), key).family_lattice();
    out.push_back(L.with_names(default_names(L.size())));
  }
  return out;
}

}  // namespace finduality
