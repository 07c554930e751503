#pragma once
// Reference implementations kept deliberately naive and independent of the library code paths.

#include "hivelab/core_types.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using hivelab::Int;
using hivelab::Rational;

inline int eps(const Rational& x) { return sgn(x); }

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// J_3 as the signed double sum over S_3 x S_3.
inline Rational j3_double_sum(const std::vector<Rational>& a, const std::vector<Rational>& b,
                              const std::vector<Rational>& g) {
  Rational total = 0;
  for (const auto& P : permutations(3))
    for (const auto& Q : permutations(3)) {
      Rational A1 = a[P[0]] + b[Q[0]] - g[0];
      Rational A2 = A1 + a[P[1]] + b[Q[1]] - g[1];
      total += perm_sign(P) * perm_sign(Q) * eps(A1) * (abs(A2) - abs(Rational(A1 - A2)));
    }
  return total / 4;
}

/// J_4 as the full signed triple sum over S_4^3.
inline Rational j4_triple_sum(const std::vector<Rational>& a, const std::vector<Rational>& b,
                              const std::vector<Rational>& g) {
  auto cube = [](const Rational& x) { return Rational(x * x * x); };
  Rational total = 0;
  const auto perms = permutations(4);
  for (const auto& P : perms)
    for (const auto& Q : perms)
      for (const auto& R : perms) {
        Rational A[3];
        Rational s = 0;
        for (int k = 0; k < 3; ++k) A[k] = s += a[P[k]] + b[Q[k]] - g[R[k]];
        const Rational &A1 = A[0], &A2 = A[1], &A3 = A[2];
        Rational t =
            Rational(1, 6) * eps(A2 - A1) *
                (cube(abs(Rational(A3 - A1))) - cube(abs(Rational(A3 - A2 + A1))) -
                 cube(abs(Rational(A3 - A2))) + cube(abs(A3))) -
            Rational(1, 3) * eps(A2) * (cube(abs(A3)) - cube(abs(Rational(A3 - A2)))) -
            Rational(1, 2) * (abs(Rational(A2 - A1)) - abs(A2)) *
                (abs(Rational(A3 - A2)) * (A3 - A2) + abs(A3) * A3);
        total += perm_sign(P) * perm_sign(Q) * perm_sign(R) * eps(A1) * t;
      }
  return total / (8 * 24);
}

/// Weyl dimension as a product over positive roots in Dynkin coordinates.
inline hivelab::BigInt weyl_dim_roots(const std::vector<Int>& labels) {
  const int n = static_cast<int>(labels.size()) + 1;
  Rational d = 1;
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int s = 0;
      for (int k = i; k < j; ++k) s += labels[k] + 1;
      d *= hivelab::make_rational(s, j - i);
    }
  return d.get_num();
}

/// All weakly decreasing partitions with `parts` parts (trailing zeros allowed) of size `total`.
inline std::vector<std::vector<Int>> partitions(Int total, int parts, Int max_part) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int remaining, Int cap) -> void {
    if (static_cast<int>(cur.size()) == parts) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (Int v = std::min(cap, remaining); v >= 0; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, total, max_part);
  return out;
}

/// Dynkin weights of SU(n) with every label in [0, max_label].
inline std::vector<std::vector<Int>> weights_in_box(int n, Int max_label) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(n - 1, 0);
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < n - 1 && ++cur[i] > max_label) cur[i++] = 0;
    if (i == n - 1) break;
  }
  return out;
}

} // namespace oracle
