#pragma once

#include "hivelab/core_types.hpp"

#include <cstdint>
#include <vector>

namespace hivelab {

using Count = std::uint64_t;

/// Triangular integer array h[i][j], i, j >= 0, i + j <= n.
/// Boundary: h[0][j] = alpha_1+..+alpha_j, h[i][n-i] = |alpha| + beta_1+..+beta_i,
/// h[i][0] = gamma_1+..+gamma_i.
struct Hive {
  int n = 0;
  std::vector<std::vector<Int>> entries;

  bool operator==(const Hive&) const = default;
};

struct HiveOptions {
  Count node_limit = 1'000'000'000;
  int threads = 1;
  /// Require every rhombus inequality to hold strictly (relative interior points).
  bool strict = false;
};

/// Process-wide default used by callers that do not pass options explicitly.
HiveOptions& default_hive_options();

/// Hive polytope with a fixed boundary, prepared for backtracking.
class HivePolytope {
public:
  HivePolytope(const IntPartition& alpha, const IntPartition& beta, const IntPartition& gamma);

  int rank() const { return n_; }
  int dimension() const { return static_cast<int>(vars_.size()); }

  Count count(const HiveOptions& opts = default_hive_options()) const;
  std::vector<Hive> enumerate(const HiveOptions& opts = default_hive_options()) const;

private:
  struct Bound {
    int plus1, plus2, minus;
  };
  struct Var {
    int point;
    std::vector<Bound> lower, upper;
  };
  struct Rhombus {
    int p1, p2, q1, q2; // h[p1] + h[p2] >= h[q1] + h[q2]
  };
  struct Worker;

  int index(int i, int j) const { return row_offset_[i] + j; }
  bool boundary_feasible(bool strict) const;
  Hive to_hive(const std::vector<Int>& h) const;

  int n_;
  std::vector<int> row_offset_;
  std::vector<Int> boundary_;
  std::vector<Var> vars_;
  std::vector<Rhombus> fixed_rhombi_;
  std::vector<Rhombus> all_rhombi_;
  bool trace_ok_ = true;

  friend bool satisfies_rhombi(const HivePolytope&, const Hive&, bool);
};

/// True iff the hive has the polytope's boundary and satisfies every rhombus inequality.
bool satisfies_rhombi(const HivePolytope& p, const Hive& h, bool strict = false);

/// N_{lam,mu}^nu; 0 for incompatible or negatively shifted triples.
Count count_hives(const Triple& t, const HiveOptions& opts = default_hive_options());
std::vector<Hive> enumerate_hives(const Triple& t,
                                  const HiveOptions& opts = default_hive_options());

/// Skew LR tableaux of shape gamma/alpha with content beta.
Count lr_tableaux(const IntPartition& alpha, const IntPartition& beta, const IntPartition& gamma,
                  Count node_limit = default_hive_options().node_limit);
Count lr_oracle(const Triple& t, const HiveOptions& opts = default_hive_options());

struct DecompositionEntry {
  Weight nu;
  Count multiplicity = 0;
};

std::vector<DecompositionEntry> tensor_decompose(const Weight& lam, const Weight& mu,
                                                 const HiveOptions& opts = default_hive_options());

struct TensorReport {
  std::size_t distinct = 0;
  Count total = 0;
  Count max = 0;
  std::vector<DecompositionEntry> entries;
};

TensorReport tensor_polytope_report(const Weight& lam, const Weight& mu,
                                    const HiveOptions& opts = default_hive_options());

} // namespace hivelab
