#pragma once

#include "hivelab/core_types.hpp"
#include "hivelab/hive.hpp"

#include <vector>

namespace hivelab {

/// R_n pairs with rho-shifted kernel arguments, R-hat_n with unshifted ones.
enum class Variant { Shifted, Unshifted };

struct CharacterTerm {
  Weight kappa;
  Rational r;
};

/// Finite combination sum_kappa r_kappa chi_kappa.
struct CharacterCombo {
  int n = 0;
  Variant variant = Variant::Shifted;
  std::vector<CharacterTerm> terms;

  /// sum_kappa r_kappa dim(kappa), i.e. the combination evaluated at the identity.
  Rational dimension_sum() const;
};

/// Stored tables for 2 <= n <= 6; Unsupported otherwise.
CharacterCombo rn_table(int n, Variant variant);

/// Least delta_n with delta_n * J_n integral on compatible integral triples.
BigInt quantization_delta(int n);

struct Theorem1Term {
  Weight kappa;
  Rational r;
  /// sum over nu' of N_{lam mu}^{nu'} N_{kappa nu}^{nu'} (or the rho-reduced analogue).
  Count lr_sum = 0;
};

struct Theorem1Result {
  Rational value;
  std::vector<Theorem1Term> terms;
};

/// Kernel value as a finite rational combination of LR coefficients.
/// Unshifted: 0 unless lam, mu, nu all have every label >= 1.
Theorem1Result theorem1(const Triple& t, Variant variant,
                        const HiveOptions& opts = default_hive_options());
Rational theorem1_rhs(const Triple& t, Variant variant,
                      const HiveOptions& opts = default_hive_options());

struct Lemma3Report {
  Rational sum_r_dim, sum_rhat_dim;
  bool pass = false;
};
Lemma3Report lemma3_check(int n);

bool quantization_check(const Rational& value, int n);

struct Conjecture2Report {
  Rational min_r, min_rhat;
  bool nonnegative = false;
};
Conjecture2Report conjecture2_scan(int n);

struct LocalizationReport {
  Rational sum, target;
  std::size_t points = 0;
  bool pass = false;
};

/// sum over integral ordered trace-balanced gamma of J_n Delta(gamma) / (Delta(alpha) Delta(beta)),
/// compared with 1 / Sf(n-1). n = 3, 4; alpha and beta must have distinct parts.
LocalizationReport localization_check(const IntPartition& alpha, const IntPartition& beta);

} // namespace hivelab
