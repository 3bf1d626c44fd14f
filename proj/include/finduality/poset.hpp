#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "finduality/bitset.hpp"
#include "finduality/error.hpp"

namespace finduality {

/// Reflexive, transitive relation on 0..size-1. Antisymmetry is not required.
class Preorder {
 public:
  Preorder() = default;
  Preorder(int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {
    if (static_cast<int>(leq_.size()) != n * n)
      throw Error(ErrorCode::InvariantViolation, "relation table has wrong size");
    for (int a = 0; a < n_; ++a)
      if (!this->leq(a, a))
        throw Error(ErrorCode::InvariantViolation, "relation is not reflexive at " + std::to_string(a));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (this->leq(a, b))
          for (int c = 0; c < n_; ++c)
            if (this->leq(b, c) && !this->leq(a, c))
              throw Error(ErrorCode::InvariantViolation,
                          "relation is not transitive at " + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c));
  }

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  const std::vector<char>& table() const { return leq_; }

  bool is_antisymmetric() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (leq(a, b) && leq(b, a)) return false;
    return true;
  }

  friend bool operator==(const Preorder&, const Preorder&) = default;

  /// Skips the O(n^3) validation; for relations that hold by construction.
  struct Unchecked {};
  Preorder(Unchecked, int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {}

 protected:
  int n_ = 0;
  std::vector<char> leq_;
};

/// Finite partial order on element indices 0..size-1.
class FinPoset : public Preorder {
 public:
  FinPoset() = default;
  FinPoset(int n, std::vector<char> leq) : Preorder(n, std::move(leq)) {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (this->leq(a, b) && this->leq(b, a))
          throw Error(ErrorCode::InvariantViolation,
                      "relation is not antisymmetric at " + std::to_string(a) + "," + std::to_string(b));
  }

  FinPoset(Unchecked u, int n, std::vector<char> leq) : Preorder(u, n, std::move(leq)) {}

  static FinPoset from_relation(int n, const std::function<bool(int, int)>& leq) {
    std::vector<char> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a * n + b] = leq(a, b) ? 1 : 0;
    return FinPoset(n, std::move(t));
  }

  /// Reflexive-transitive closure of the given strict pairs (a below b).
  static FinPoset from_covers(int n, const std::vector<std::pair<int, int>>& below) {
    std::vector<char> t(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) t[a * n + a] = 1;
    for (auto [a, b] : below) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw Error(ErrorCode::InvariantViolation, "cover pair out of range");
      t[a * n + b] = 1;
    }
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        if (t[a * n + k])
          for (int b = 0; b < n; ++b)
            if (t[k * n + b]) t[a * n + b] = 1;
    return FinPoset(n, std::move(t));
  }

  static FinPoset chain(int n) {
    return from_relation(n, [](int a, int b) { return a <= b; });
  }
  static FinPoset antichain(int n) {
    return from_relation(n, [](int a, int b) { return a == b; });
  }

  bool lt(int a, int b) const { return a != b && leq(a, b); }

  /// Hasse diagram: pairs (a, b) with a covered by b, in lexicographic order.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (!lt(a, b)) continue;
        bool cover = true;
        for (int c = 0; c < n_ && cover; ++c)
          if (lt(a, c) && lt(c, b)) cover = false;
        if (cover) out.emplace_back(a, b);
      }
    return out;
  }

  FinPoset dual() const {
    return from_relation(n_, [this](int a, int b) { return leq(b, a); });
  }

  /// Induced subposet on `elems` (new index i is old index elems[i]).
  FinPoset restrict(const std::vector<int>& elems) const {
    int m = static_cast<int>(elems.size());
    return from_relation(m, [&](int a, int b) { return leq(elems[a], elems[b]); });
  }

  bool is_downset(const ElemSet& s) const {
    for (int b = 0; b < n_; ++b)
      if (s.test(b))
        for (int a = 0; a < n_; ++a)
          if (leq(a, b) && !s.test(a)) return false;
    return true;
  }

  /// A linear extension (elements sorted by the number of elements below them).
  std::vector<int> linear_extension() const {
    std::vector<int> order(n_), height(n_, 0);
    for (int a = 0; a < n_; ++a) {
      order[a] = a;
      for (int b = 0; b < n_; ++b)
        if (lt(b, a)) ++height[a];
    }
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return height[x] < height[y]; });
    return order;
  }
};

}  // namespace finduality
