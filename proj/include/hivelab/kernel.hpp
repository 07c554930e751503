#pragma once

#include "hivelab/core_types.hpp"
#include "hivelab/hive.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace hivelab {

/// Ordered, trace-balanced eigenvalue triple fed to J_n.
struct KernelInput {
  int n = 0;
  Partition alpha, beta, gamma;
  bool shifted = false;
};

/// alpha = ell(lam[+rho]), beta = ell(mu[+rho]), gamma = ell(nu[+rho]) + c with
/// c fixing sum(gamma) = sum(alpha) + sum(beta). c may be fractional.
KernelInput kernel_input(const Triple& t, bool shifted);

/// Throws RankMismatch, NonDominant (unordered part) or TraceMismatch.
void validate(const KernelInput& k, int expected_n);

enum class EndpointMode { Open, Half };

Rational j2(const KernelInput& k, EndpointMode mode);
Rational j3(const KernelInput& k);
Rational j4(const KernelInput& k);
/// Dispatch to j2 / j3 / j4; Unsupported for other ranks.
Rational jn_closed_form(const KernelInput& k, EndpointMode mode = EndpointMode::Half);

/// SU(3) multiplicity from its min/max closed form; 0 for incompatible triples.
Count lr_su3_minmax(const Triple& t);

/// Density of the ordered eigenvalues of A + B in the free coordinates gamma_1..gamma_{n-1},
/// gamma_n fixed by the trace. Integrates to 1. Throws DegenerateOrbit.
Rational pdf_density(const std::vector<Rational>& gamma_free, const Partition& alpha,
                     const Partition& beta);
double pdf_density(const std::vector<double>& gamma_free, const std::vector<double>& alpha,
                   const std::vector<double>& beta);

namespace kernel {

template <class S> S abs_of(const S& x) { return x < 0 ? S(-x) : x; }
template <class S> int sign_of(const S& x) { return (x > 0) - (x < 0); }

template <class S> bool su3_horn_member(const S* a, const S* b, const S* g) {
  if (g[0] < g[1] || g[1] < g[2]) return false;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      int j = k - i;
      if (j >= 0 && j < 3 && g[k] > a[i] + b[j]) return false;
      j = k + 2 - i;
      if (j >= 0 && j < 3 && g[k] < a[i] + b[j]) return false;
    }
  return true;
}

template <class S> S su3_psi(const S* a, const S* b, const S* g) {
  const S e1 = g[0] - a[0] - b[1], e2 = g[1] - a[2] - b[0], e3 = g[2] - a[1] - b[2];
  // Guards are exclusive unless all three vanish, in which case every branch gives 0.
  if (e2 >= 0 && e1 <= 0) return e2 - e1;
  if (e3 >= 0 && e2 <= 0) return e3 - e2;
  return e1 - e3;
}

/// 6 * J_3 on Horn-polytope members, 0 elsewhere.
template <class S> S j3_times6(const S* a, const S* b, const S* g) {
  if (!su3_horn_member(a, b, g)) return S(0);
  S v = (a[0] - a[2] + b[0] - b[2] + g[0] - g[2]) - 3 * abs_of(S(a[1] + b[1] - g[1])) -
        2 * su3_psi(a, b, g) - 2 * su3_psi(b, a, g);
  return v;
}

struct PermTable {
  std::vector<std::array<int, 4>> perms;
  std::vector<int> signs;
};
const PermTable& s4();

/// 48 * J_4 as the S_4 x S_4 sum with the gamma permutation fixed.
template <class S> S j4_times48(const S* a, const S* b, const S* g) {
  const PermTable& t = s4();
  S total = S(0);
  for (std::size_t p = 0; p < t.perms.size(); ++p)
    for (std::size_t q = 0; q < t.perms.size(); ++q) {
      const auto& P = t.perms[p];
      const auto& Q = t.perms[q];
      S A1 = a[P[0]] + b[Q[0]] - g[0];
      const int e1 = sign_of(A1);
      if (e1 == 0) continue;
      S A2 = A1 + a[P[1]] + b[Q[1]] - g[1];
      S A3 = A2 + a[P[2]] + b[Q[2]] - g[2];
      S d31 = abs_of(S(A3 - A1)), d321 = abs_of(S(A3 - A2 + A1)), d32 = abs_of(S(A3 - A2)),
        d3 = abs_of(A3);
      S term = S(sign_of(S(A2 - A1))) * (d31 * d31 * d31 - d321 * d321 * d321 - d32 * d32 * d32 +
                                         d3 * d3 * d3) -
               S(2 * sign_of(A2)) * (d3 * d3 * d3 - d32 * d32 * d32) -
               3 * (abs_of(S(A2 - A1)) - abs_of(A2)) * (d32 * S(A3 - A2) + d3 * A3);
      if (e1 * t.signs[p] * t.signs[q] > 0) total += term;
      else total -= term;
    }
  return total;
}

} // namespace kernel
} // namespace hivelab
