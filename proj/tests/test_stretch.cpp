#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hivelab/errors.hpp"
#include "hivelab/kernel.hpp"
#include "hivelab/matriochka.hpp"
#include "hivelab/stretch.hpp"
#include "oracles.hpp"

#include <random>

using namespace hivelab;

namespace {
Triple T(int n, std::vector<Int> l, std::vector<Int> m, std::vector<Int> v) {
  return Triple(Weight(n, l), Weight(n, m), Weight(n, v));
}
RationalPoly P(std::vector<Rational> c) { return RationalPoly(std::move(c)); }
} // namespace

TEST_CASE("polynomial basics") {
  RationalPoly p = P({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p(3) == 7);
  CHECK(P({}).degree() == -1);
  CHECK(to_string(P({make_rational(5, 12), 12, make_rational(205, 2), make_rational(742, 3)})) ==
        "742/3 s^3 + 205/2 s^2 + 12 s + 5/12");
  CHECK(to_string(P({1, -1})) == "-s + 1");
}

TEST_CASE("interpolation recovers random polynomials") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    int deg = trial % 7;
    std::vector<Rational> coeffs(deg + 1);
    for (auto& x : coeffs) x = make_rational(c(rng), 1 + trial % 5);
    RationalPoly p(coeffs);
    std::vector<Rational> vals, nodes;
    for (int s = 0; s <= deg; ++s) vals.push_back(p(s));
    CHECK(RationalPoly::interpolate(vals) == p);
    for (int s = 0; s <= deg; ++s) nodes.push_back(make_rational(2 * s - 3, 2));
    vals.clear();
    for (auto& x : nodes) vals.push_back(p(x));
    CHECK(RationalPoly::interpolate(nodes, vals) == p);
  }
}

TEST_CASE("stretched counts") {
  Triple su4 = T(4, {21, 13, 5}, {7, 10, 12}, {20, 11, 9});
  CHECK(stretched_counts(su4, 4) == std::vector<Count>{367, 2422, 7650, 17535});
  CHECK(stretched_counts(T(6, {1, 3, 1, 2, 1}, {2, 1, 3, 2, 1}, {4, 1, 6, 2, 1}), 2) ==
        std::vector<Count>{38, 511});
}

TEST_CASE("stretching polynomials and geometry") {
  Triple su4 = T(4, {21, 13, 5}, {7, 10, 12}, {20, 11, 9});
  RationalPoly p = stretching_polynomial(su4);
  CHECK(p == P({1, make_rational(388, 24), make_rational(2460, 24), make_rational(5936, 24)}));
  GeometryReport g = geometry_report(su4);
  CHECK(g.normalized_volume == 1484);
  CHECK(g.normalized_boundary == 410);
  CHECK(g.interior_points == 160);
  CHECK(g.blichfeldt_ok);
  CHECK(jn_via_volume(su4) == j4(kernel_input(su4, false)));

  GeometryReport e = geometry_report(T(3, {1, 1}, {1, 1}, {1, 1}));
  CHECK(e.polynomial == P({1, 1}));
  CHECK(e.polytope_dimension == 1);
  CHECK(e.normalized_volume == 1);
  CHECK(e.interior_points == 0);

  CHECK(stretching_polynomial(T(2, {3}, {2}, {1})) == P({1}));
  CHECK_THROWS_AS(stretching_polynomial(T(3, {1, 0}, {0, 0}, {0, 1})), Incompatible);
  CHECK_THROWS_AS(stretching_polynomial(T(3, {0, 0}, {0, 0}, {3, 0})), Incompatible);
}

TEST_CASE("SU(3) polynomial is 1 + (N-1) s") {
  for (const auto& l : oracle::weights_in_box(3, 3))
    for (const auto& m : oracle::weights_in_box(3, 3))
      for (const auto& v : oracle::weights_in_box(3, 4)) {
        Triple t = T(3, l, m, v);
        if (!is_compatible(t)) continue;
        Count n = count_hives(t);
        if (n == 0) continue;
        CHECK(stretching_polynomial(t) == P({1, Rational(static_cast<long>(n) - 1)}));
      }
}

TEST_CASE("reciprocity matches strict interior counts") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<Int> label(1, 5);
  int done = 0;
  while (done < 12) {
    int n = 4 + done % 2;
    auto w = [&] {
      std::vector<Int> l(n - 1);
      for (Int& x : l) x = label(rng);
      return Weight(n, l);
    };
    Triple t(w(), w(), w());
    if (!is_compatible(t) || balancing_shift(t) < 0 || count_hives(t) == 0) continue;
    GeometryReport g = geometry_report(t);
    if (g.polytope_dimension != hive_dimension(n)) continue;
    CHECK(g.interior_points == Rational(BigInt(static_cast<unsigned long>(interior_hive_count(t)))));
    ++done;
  }
  Triple su4 = T(4, {21, 13, 5}, {7, 10, 12}, {20, 11, 9});
  CHECK(interior_hive_count(su4) == 160);
}

TEST_CASE("degree drops exactly when the closed-form kernel vanishes") {
  for (const auto& l : oracle::weights_in_box(4, 2))
    for (const auto& m : oracle::weights_in_box(4, 2))
      for (const auto& v : oracle::weights_in_box(4, 2)) {
        Triple t = T(4, l, m, v);
        if (!is_compatible(t) || balancing_shift(t) < 0 || count_hives(t) == 0) continue;
        RationalPoly p = stretching_polynomial(t);
        Rational j = j4(kernel_input(t, false));
        CHECK((p.degree() == 3) == (j != 0));
        CHECK(p.coeff(3) == j);
      }
}

TEST_CASE("shifted kernel polynomial shares the top two coefficients") {
  Triple su4 = T(4, {21, 13, 5}, {7, 10, 12}, {20, 11, 9});
  RationalPoly q = shifted_kernel_poly(su4);
  CHECK(q == P({make_rational(5, 12), 12, make_rational(205, 2), make_rational(742, 3)}));
  RationalPoly p = stretching_polynomial(su4);
  CHECK(q.coeff(3) == p.coeff(3));
  CHECK(q.coeff(2) == p.coeff(2));
  CHECK_THROWS_AS(shifted_kernel_poly(T(3, {1, 1}, {1, 1}, {1, 1})), RankMismatch);
}

TEST_CASE("matriochka pattern of the (9,5) x (6,5) product") {
  auto r = matriochka_check(Weight(3, {9, 5}), Weight(3, {6, 5}));
  CHECK(r.max_multiplicity == 6);
  CHECK(r.levels.size() == 6);
  for (const auto& l : r.levels) {
    CHECK(l.nested);
    CHECK(l.lattice_convex);
  }
  CHECK(r.pass);
  CHECK_THROWS_AS(matriochka_check(Weight(4, {1, 1, 1}), Weight(4, {1, 1, 1})), RankMismatch);
}
