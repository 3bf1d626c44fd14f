#pragma once

// Brute-force reference computations that share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Leq = std::function<bool(int, int)>;

/// Greatest lower bound by exhaustive search, or -1.
inline int glb(int n, const Leq& leq, int a, int b) {
  int best = -1;
  for (int x = 0; x < n; ++x) {
    if (!leq(x, a) || !leq(x, b)) continue;
    bool greatest = true;
    for (int y = 0; y < n && greatest; ++y)
      if (leq(y, a) && leq(y, b) && !leq(y, x)) greatest = false;
    if (greatest) best = x;
  }
  return best;
}

inline int lub(int n, const Leq& leq, int a, int b) {
  return glb(n, [&](int x, int y) { return leq(y, x); }, a, b);
}

/// Subsets F of 0..n-1 that are proper prime filters.
inline int count_prime_filters(int n, const Leq& leq) {
  int count = 0;
  for (std::uint32_t F = 1; F < (1u << n); ++F) {
    auto in = [&](int x) { return (F >> x) & 1u; };
    bool ok = true;
    int bottom = -1;
    for (int x = 0; x < n; ++x) {
      bool is_bottom = true;
      for (int y = 0; y < n; ++y) is_bottom = is_bottom && leq(x, y);
      if (is_bottom) bottom = x;
    }
    if (in(bottom)) continue;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        if (in(x) && leq(x, y) && !in(y)) ok = false;
        if (in(x) && in(y) && !in(glb(n, leq, x, y))) ok = false;
        if (in(lub(n, leq, x, y)) && !in(x) && !in(y)) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

/// Partitions of 0..n-1 (as block labels) compatible with meet and join.
inline int count_congruences(int n, const Leq& leq) {
  int count = 0;
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (label[a] == label[b])
            for (int c = 0; c < n; ++c) {
              if (label[glb(n, leq, a, c)] != label[glb(n, leq, b, c)]) return;
              if (label[lub(n, leq, a, c)] != label[lub(n, leq, b, c)]) return;
            }
      ++count;
      return;
    }
    for (int k = 0; k <= blocks; ++k) {
      label[i] = k;
      rec(i + 1, std::max(blocks, k + 1));
    }
  };
  rec(0, 0);
  return count;
}

/// Families of subsets of an n-set containing 0 and X, closed under union and intersection,
/// counted up to relabelling of points. With t0, points must be separated by the family.
inline int count_pervin_spaces(int n, bool t0) {
  const int subsets = 1 << n;
  const std::uint32_t full = subsets - 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    auto in = [&](std::uint32_t s) { return (fam >> s) & 1u; };
    if (!in(0) || !in(full)) continue;
    bool closed = true;
    for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(subsets) && closed; ++a)
      for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(subsets) && closed; ++b)
        if (in(a) && in(b) && (!in(a | b) || !in(a & b))) closed = false;
    if (!closed) continue;
    if (t0) {
      bool sep = true;
      for (int x = 0; x < n && sep; ++x)
        for (int y = x + 1; y < n && sep; ++y) {
          bool split = false;
          for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(subsets); ++s)
            if (in(s) && (((s >> x) ^ (s >> y)) & 1u)) split = true;
          sep = split;
        }
      if (!sep) continue;
    }
    std::vector<std::uint32_t> best;
    for (const auto& p : perms) {
      std::vector<std::uint32_t> img;
      for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(subsets); ++s)
        if (in(s)) {
          std::uint32_t t = 0;
          for (int x = 0; x < n; ++x)
            if ((s >> x) & 1u) t |= 1u << p[x];
          img.push_back(t);
        }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    }
    seen.insert(best);
  }
  return static_cast<int>(seen.size());
}

}  // namespace oracle
