#pragma once

#include "hivelab/core_types.hpp"
#include "hivelab/hive.hpp"
#include "hivelab/polynomial.hpp"

#include <vector>

namespace hivelab {

/// Dimension (n-1)(n-2)/2 of the hive polytope.
int hive_dimension(int n);

/// N at (s lam, s mu; s nu) for s = 1..s_max.
std::vector<Count> stretched_counts(const Triple& t, int s_max,
                                    const HiveOptions& opts = default_hive_options());

/// Interpolates counts on s = 0..d with P(0) = 1 and checks s = d+1, d+2 against direct counts.
/// Throws Incompatible when the triple is not admissible, ValidationFailure on a mismatch.
RationalPoly stretching_polynomial(const Triple& t,
                                   const HiveOptions& opts = default_hive_options());

struct GeometryReport {
  int polytope_dimension = 0; ///< deg P, the dimension of the hive polytope
  int ambient_dimension = 0;  ///< (n-1)(n-2)/2
  RationalPoly polynomial;
  Rational normalized_volume;   ///< d! lead(P)
  Rational normalized_boundary; ///< 2 (d-1)! [s^{d-1}] P
  Rational interior_points;     ///< (-1)^d P(-1)
  Count lattice_points = 0;     ///< P(1)
  bool blichfeldt_ok = false;   ///< V >= N - d
  bool coefficients_nonnegative = false;
};

GeometryReport geometry_report(const Triple& t, const HiveOptions& opts = default_hive_options());
GeometryReport geometry_from_polynomial(const RationalPoly& p, int n);

/// Coefficient of s^{(n-1)(n-2)/2} in the stretching polynomial.
Rational jn_via_volume(const Triple& t, const HiveOptions& opts = default_hive_options());

/// J_4 at rho-shifted stretched arguments, interpolated on s = 1..4 and checked at s = 5, 6.
RationalPoly shifted_kernel_poly(const Triple& t);

/// Hives satisfying every rhombus inequality strictly.
Count interior_hive_count(const Triple& t, const HiveOptions& opts = default_hive_options());

} // namespace hivelab
