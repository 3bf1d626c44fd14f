#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "finduality/error.hpp"

namespace finduality {

/// A subset of a ground set of at most 64 points.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool has(Mask m, int i) { return ((m >> i) & 1u) != 0; }
inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_from(std::span<const int> idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

inline Mask mask_from(std::initializer_list<int> idx) {
  return mask_from(std::span<const int>(idx.begin(), idx.size()));
}

/// Lexicographic order on the sorted index lists of two masks. The empty set
/// comes first and a proper prefix precedes its extensions.
inline bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

inline void sort_lex(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end(), [](Mask x, Mask y) { return lex_less(x, y); });
}

inline std::string mask_to_string(Mask m, std::span<const std::string> names = {}) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_indices(m)) {
    if (!first) s += ",";
    first = false;
    s += (static_cast<std::size_t>(i) < names.size()) ? names[i] : std::to_string(i);
  }
  return s + "}";
}

/// Dynamic-width set of lattice elements (element indices 0..universe-1).
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static ElemSet of(int universe, std::initializer_list<int> idx) {
    ElemSet s(universe);
    for (int i : idx) s.set(i);
    return s;
  }
  static ElemSet from(int universe, std::span<const int> idx) {
    ElemSet s(universe);
    for (int i : idx) s.set(i);
    return s;
  }
  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool subset_of(const ElemSet& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend bool operator==(const ElemSet& a, const ElemSet& b) = default;

  /// Lexicographic order on sorted index lists (same convention as lex_less).
  friend bool operator<(const ElemSet& a, const ElemSet& b) { return a.indices() < b.indices(); }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace finduality
