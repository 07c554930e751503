#include "hivelab/stretch.hpp"

#include "hivelab/errors.hpp"
#include "hivelab/kernel.hpp"

namespace hivelab {

namespace {

Rational from_count(Count c) { return Rational(BigInt(static_cast<unsigned long>(c))); }

} // namespace

int hive_dimension(int n) { return (n - 1) * (n - 2) / 2; }

std::vector<Count> stretched_counts(const Triple& t, int s_max, const HiveOptions& opts) {
  std::vector<Count> out;
  for (int s = 1; s <= s_max; ++s) out.push_back(count_hives(scale(t, s), opts));
  return out;
}

RationalPoly stretching_polynomial(const Triple& t, const HiveOptions& opts) {
  if (!is_compatible(t)) throw Incompatible("stretching needs a compatible triple");
  const int d = hive_dimension(t.n);
  std::vector<Count> counts = stretched_counts(t, d + 2, opts);
  if (counts.front() == 0) throw Incompatible("triple is not admissible (N = 0)");
  std::vector<Rational> values{Rational(1)};
  for (int s = 1; s <= d; ++s) values.push_back(from_count(counts[s - 1]));
  RationalPoly p = RationalPoly::interpolate(values);
  for (int s = d + 1; s <= d + 2; ++s)
    if (p(s) != from_count(counts[s - 1]))
      throw ValidationFailure("interpolant gives " + to_string(p(s)) + " at s = " +
                              std::to_string(s) + " but the count is " +
                              std::to_string(counts[s - 1]));
  return p;
}

GeometryReport geometry_from_polynomial(const RationalPoly& p, int n) {
  GeometryReport g;
  g.polynomial = p;
  g.ambient_dimension = hive_dimension(n);
  const int d = std::max(p.degree(), 0);
  g.polytope_dimension = d;
  g.normalized_volume = Rational(factorial(d)) * p.coeff(d);
  g.normalized_boundary = d >= 1 ? Rational(2 * factorial(d - 1)) * p.coeff(d - 1) : Rational(0);
  g.interior_points = (d % 2 ? -1 : 1) * p(-1);
  Rational n1 = p(1);
  g.lattice_points = n1.get_num().get_ui();
  g.blichfeldt_ok = g.normalized_volume >= n1 - d;
  g.coefficients_nonnegative = true;
  for (const Rational& c : p.coeffs())
    if (c < 0) g.coefficients_nonnegative = false;
  return g;
}

GeometryReport geometry_report(const Triple& t, const HiveOptions& opts) {
  return geometry_from_polynomial(stretching_polynomial(t, opts), t.n);
}

Rational jn_via_volume(const Triple& t, const HiveOptions& opts) {
  return stretching_polynomial(t, opts).coeff(hive_dimension(t.n));
}

RationalPoly shifted_kernel_poly(const Triple& t) {
  if (t.n != 4) throw RankMismatch("shifted kernel polynomial is implemented for n = 4");
  // s = 0 puts all three arguments at ell(rho), generally in another chamber of J_4.
  std::vector<Rational> nodes, values;
  for (int s = 1; s <= 4; ++s) {
    nodes.push_back(s);
    values.push_back(j4(kernel_input(scale(t, s), true)));
  }
  RationalPoly p = RationalPoly::interpolate(nodes, values);
  for (int s = 5; s <= 6; ++s)
    if (p(s) != j4(kernel_input(scale(t, s), true)))
      throw ValidationFailure("shifted J_4 is not cubic along this stretching ray");
  return p;
}

Count interior_hive_count(const Triple& t, const HiveOptions& opts) {
  HiveOptions strict = opts;
  strict.strict = true;
  return count_hives(t, strict);
}

} // namespace hivelab
