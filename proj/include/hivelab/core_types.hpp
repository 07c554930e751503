#pragma once

#include "hivelab/rational.hpp"

#include <string>
#include <vector>

namespace hivelab {

/// SU(n) highest weight in Dynkin labels (n-1 non-negative integers).
struct Weight {
  int n = 2;
  std::vector<Int> labels;

  Weight() : labels(1, 0) {}
  /// Throws InvalidWeight on n < 2, wrong length or a negative label.
  Weight(int rank, std::vector<Int> dynkin);

  static Weight zero(int rank) { return Weight(rank, std::vector<Int>(rank - 1, 0)); }
  static Weight rho(int rank) { return Weight(rank, std::vector<Int>(rank - 1, 1)); }

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};

/// Weakly decreasing length-n vector of exact rationals.
using Partition = std::vector<Rational>;
/// Integral partition with an explicit trailing part.
using IntPartition = std::vector<Int>;

struct Triple {
  int n = 2;
  Weight lam, mu, nu;

  Triple() = default;
  /// Throws RankMismatch unless all weights share rank n.
  Triple(Weight l, Weight m, Weight v);

  bool operator==(const Triple&) const = default;
};

/// Balanced U(n) partitions of a compatible triple: gamma = ell(nu) + sigma.
struct UnTriple {
  IntPartition alpha, beta, gamma;
  Int sigma = 0;
};

IntPartition ell(const Weight& w);
/// Inverse of ell up to a constant shift: labels are consecutive differences.
Weight weight_from_partition(const IntPartition& p);

Weight rho_shift(const Weight& w, int sign);
Weight scale(const Weight& w, Int s);
Triple scale(const Triple& t, Int s);
Triple rho_shift(const Triple& t, int sign);

/// (1/n) sum_j j (lam_j + mu_j - nu_j), possibly non-integral.
Rational balancing_shift(const Triple& t);

/// Throws Incompatible (sigma non-integral) or NegativeShift (sigma < 0).
UnTriple extend_to_un(const Triple& t);
bool is_compatible(const Triple& t);

template <class Seq> auto vandermonde_of(const Seq& p) {
  using T = std::decay_t<decltype(p[0])>;
  T prod = T(1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) prod *= p[i] - p[j];
  return prod;
}

Rational vandermonde(const Partition& p);
BigInt vandermonde(const IntPartition& p);

BigInt factorial(int m);
BigInt superfactorial(int m);
BigInt weyl_dim(const Weight& w);

Partition to_partition(const IntPartition& p);
bool is_weakly_decreasing(const Partition& p);

std::string to_string(const Weight& w);
std::string to_string(const IntPartition& p);

} // namespace hivelab
