#include "hivelab/kernel.hpp"

#include "hivelab/errors.hpp"

#include <numeric>

namespace hivelab {

namespace kernel {

const PermTable& s4() {
  static const PermTable table = [] {
    PermTable t;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
      t.perms.push_back(p);
      t.signs.push_back(inversions % 2 ? -1 : 1);
    } while (std::next_permutation(p.begin(), p.end()));
    return t;
  }();
  return table;
}

} // namespace kernel

KernelInput kernel_input(const Triple& t, bool shifted) {
  const Triple s = shifted ? rho_shift(t, +1) : t;
  KernelInput k;
  k.n = t.n;
  k.shifted = shifted;
  k.alpha = to_partition(ell(s.lam));
  k.beta = to_partition(ell(s.mu));
  k.gamma = to_partition(ell(s.nu));
  Rational c = (std::accumulate(k.alpha.begin(), k.alpha.end(), Rational(0)) +
                std::accumulate(k.beta.begin(), k.beta.end(), Rational(0)) -
                std::accumulate(k.gamma.begin(), k.gamma.end(), Rational(0))) /
               t.n;
  for (Rational& g : k.gamma) g += c;
  return k;
}

void validate(const KernelInput& k, int expected_n) {
  if (k.n != expected_n || static_cast<int>(k.alpha.size()) != expected_n ||
      static_cast<int>(k.beta.size()) != expected_n || static_cast<int>(k.gamma.size()) != expected_n)
    throw RankMismatch("kernel expects rank " + std::to_string(expected_n));
  for (const Partition* p : {&k.alpha, &k.beta, &k.gamma})
    if (!is_weakly_decreasing(*p)) throw NonDominant("kernel arguments must be weakly decreasing");
  Rational lhs = std::accumulate(k.gamma.begin(), k.gamma.end(), Rational(0));
  Rational rhs = std::accumulate(k.alpha.begin(), k.alpha.end(), Rational(0)) +
                 std::accumulate(k.beta.begin(), k.beta.end(), Rational(0));
  if (lhs != rhs)
    throw TraceMismatch("sum(gamma) = " + to_string(lhs) + " but sum(alpha)+sum(beta) = " +
                        to_string(rhs));
}

Rational j2(const KernelInput& k, EndpointMode mode) {
  validate(k, 2);
  Rational a = k.alpha[0] - k.alpha[1], b = k.beta[0] - k.beta[1], g = k.gamma[0] - k.gamma[1];
  Rational lo = abs(a - b), hi = a + b;
  if (g > lo && g < hi) return 1;
  if (g < lo || g > hi) return 0;
  return mode == EndpointMode::Half ? make_rational(1, 2) : Rational(0);
}

namespace {

void check_psi_guards(const Rational* a, const Rational* b, const Rational* g) {
  const Rational e[3] = {g[0] - a[0] - b[1], g[1] - a[2] - b[0], g[2] - a[1] - b[2]};
  bool seen = false;
  Rational value;
  for (int k = 0; k < 3; ++k) {
    const Rational& hi = e[(k + 1) % 3];
    const Rational& lo = e[k];
    if (hi >= 0 && lo <= 0) {
      Rational v = hi - lo;
      if (seen && v != value) throw ValidationFailure("inconsistent psi branches");
      seen = true;
      value = v;
    }
  }
}

/// Common denominator scaling so the cubic sum runs in integer arithmetic.
struct Scaled {
  BigInt denom = 1;
  std::array<BigInt, 4> a, b, g;
  bool small = true;
};

Scaled scale_to_integers(const KernelInput& k) {
  Scaled s;
  for (const Partition* p : {&k.alpha, &k.beta, &k.gamma})
    for (const Rational& x : *p) s.denom = lcm(s.denom, BigInt(x.get_den()));
  const BigInt bound = BigInt(1) << 20;
  for (int i = 0; i < 4; ++i) {
    s.a[i] = k.alpha[i].get_num() * (s.denom / k.alpha[i].get_den());
    s.b[i] = k.beta[i].get_num() * (s.denom / k.beta[i].get_den());
    s.g[i] = k.gamma[i].get_num() * (s.denom / k.gamma[i].get_den());
    for (const BigInt* x : {&s.a[i], &s.b[i], &s.g[i]})
      if (abs(*x) >= bound) s.small = false;
  }
  return s;
}

BigInt to_bigint(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi = BigInt(static_cast<unsigned long>(u >> 64));
  BigInt out = (hi << 64) + BigInt(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  return neg ? BigInt(-out) : out;
}

} // namespace

Rational j3(const KernelInput& k) {
  validate(k, 3);
  check_psi_guards(k.alpha.data(), k.beta.data(), k.gamma.data());
  check_psi_guards(k.beta.data(), k.alpha.data(), k.gamma.data());
  return kernel::j3_times6(k.alpha.data(), k.beta.data(), k.gamma.data()) / 6;
}

Rational j4(const KernelInput& k) {
  validate(k, 4);
  Scaled s = scale_to_integers(k);
  BigInt sum;
  if (s.small) {
    std::array<__int128, 4> a, b, g;
    for (int i = 0; i < 4; ++i) {
      a[i] = s.a[i].get_si();
      b[i] = s.b[i].get_si();
      g[i] = s.g[i].get_si();
    }
    sum = to_bigint(kernel::j4_times48(a.data(), b.data(), g.data()));
  } else {
    sum = kernel::j4_times48(s.a.data(), s.b.data(), s.g.data());
  }
  Rational out(sum, BigInt(48) * s.denom * s.denom * s.denom);
  out.canonicalize();
  return out;
}

Rational jn_closed_form(const KernelInput& k, EndpointMode mode) {
  switch (k.n) {
  case 2: return j2(k, mode);
  case 3: return j3(k);
  case 4: return j4(k);
  default: throw Unsupported("closed-form kernel available for n = 2, 3, 4 only");
  }
}

Count lr_su3_minmax(const Triple& t) {
  if (t.n != 3) throw RankMismatch("min/max multiplicity formula is SU(3) only");
  Rational sig = balancing_shift(t);
  if (!is_integer(sig)) return 0;
  const Int s = sig.get_num().get_si();
  const Int l1 = t.lam.labels[0], l2 = t.lam.labels[1];
  const Int m1 = t.mu.labels[0], m2 = t.mu.labels[1];
  const Int v1 = t.nu.labels[0], v2 = t.nu.labels[1];
  Int hi = std::min({l1 + l2, v2 + s, v2 - m2 + 2 * s});
  Int lo = std::max({l2, s, v2 - m2 + s, v2 - l2 - m2 + 2 * s, v2 - m1 - m2 + 2 * s, l1 + l2 - v1});
  return hi >= lo ? static_cast<Count>(hi - lo + 1) : 0;
}

namespace {

template <class S>
S density_impl(const std::vector<S>& gamma_free, const std::vector<S>& alpha,
               const std::vector<S>& beta, const S& sf) {
  const std::size_t n = alpha.size();
  if (n < 2 || n > 4 || beta.size() != n || gamma_free.size() + 1 != n)
    throw RankMismatch("density available for n = 2, 3, 4 with n-1 free coordinates");
  const S da = vandermonde_of(alpha), db = vandermonde_of(beta);
  if (da == 0 || db == 0) throw DegenerateOrbit("alpha or beta has a repeated eigenvalue");
  std::vector<S> g(gamma_free);
  S last = S(0);
  for (std::size_t i = 0; i < n; ++i) last += alpha[i] + beta[i];
  for (const S& x : gamma_free) last -= x;
  g.push_back(last);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (g[i] < g[i + 1]) return S(0);
  S j;
  if (n == 2) {
    S a = alpha[0] - alpha[1], b = beta[0] - beta[1], x = g[0] - g[1];
    j = (x > kernel::abs_of(S(a - b)) && x < a + b) ? S(1) : S(0);
  } else if (n == 3) {
    j = kernel::j3_times6(alpha.data(), beta.data(), g.data()) / S(6);
  } else {
    j = kernel::j4_times48(alpha.data(), beta.data(), g.data()) / S(48);
  }
  return sf * vandermonde_of(g) / (da * db) * j;
}

} // namespace

Rational pdf_density(const std::vector<Rational>& gamma_free, const Partition& alpha,
                     const Partition& beta) {
  return density_impl(gamma_free, alpha, beta,
                      Rational(superfactorial(static_cast<int>(alpha.size()) - 1)));
}

double pdf_density(const std::vector<double>& gamma_free, const std::vector<double>& alpha,
                   const std::vector<double>& beta) {
  return density_impl(gamma_free, alpha, beta,
                      superfactorial(static_cast<int>(alpha.size()) - 1).get_d());
}

} // namespace hivelab
