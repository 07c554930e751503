#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hivelab/core_types.hpp"
#include "hivelab/errors.hpp"
#include "hivelab/hive.hpp"
#include "oracles.hpp"

#include <random>

using namespace hivelab;

TEST_CASE("ell maps Dynkin labels to row lengths") {
  CHECK(ell(Weight(3, {9, 5})) == IntPartition{14, 5, 0});
  CHECK(ell(Weight::zero(3)) == IntPartition{0, 0, 0});
  CHECK(ell(Weight::rho(3)) == IntPartition{2, 1, 0});
  CHECK(weight_from_partition({14, 5, 0}) == Weight(3, {9, 5}));
}

TEST_CASE("ell is injective, decreasing and ends in zero") {
  std::set<IntPartition> seen;
  for (const auto& l : oracle::weights_in_box(4, 3)) {
    IntPartition p = ell(Weight(4, l));
    CHECK(p.back() == 0);
    CHECK(std::is_sorted(p.rbegin(), p.rend()));
    CHECK(seen.insert(p).second);
  }
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(Weight(3, {1}), InvalidWeight);
  CHECK_THROWS_AS(Weight(3, {1, -1}), InvalidWeight);
  CHECK_THROWS_AS(Weight(1, {}), InvalidWeight);
  CHECK_THROWS_AS(Triple(Weight(3, {1, 1}), Weight(4, {1, 1, 1}), Weight(3, {1, 1})), RankMismatch);
}

TEST_CASE("rho shift") {
  CHECK(rho_shift(Weight(4, {1, 2, 2}), +1) == Weight(4, {2, 3, 3}));
  CHECK(rho_shift(Weight(3, {1, 1}), -1) == Weight::zero(3));
  CHECK_THROWS_AS(rho_shift(Weight(3, {0, 5}), -1), NonDominant);
}

TEST_CASE("extension to U(n)") {
  SUBCASE("8 x 8 -> 8") {
    UnTriple u = extend_to_un(Triple(Weight(3, {1, 1}), Weight(3, {1, 1}), Weight(3, {1, 1})));
    CHECK(u.sigma == 1);
    CHECK(u.gamma == IntPartition{3, 2, 1});
  }
  SUBCASE("SU(4) example") {
    UnTriple u = extend_to_un(Triple(Weight(4, {21, 13, 5}), Weight(4, {7, 10, 12}), Weight(4, {20, 11, 9})));
    CHECK(u.sigma == 14);
    CHECK(u.alpha == IntPartition{39, 18, 5, 0});
    CHECK(u.beta == IntPartition{29, 22, 12, 0});
    CHECK(u.gamma == IntPartition{54, 34, 23, 14});
  }
  SUBCASE("congruence failure") {
    Triple t(Weight(3, {1, 0}), Weight::zero(3), Weight(3, {0, 1}));
    CHECK_THROWS_AS(extend_to_un(t), Incompatible);
    CHECK_FALSE(is_compatible(t));
  }
  SUBCASE("negative shift") {
    Triple t(Weight::zero(3), Weight::zero(3), Weight(3, {3, 0}));
    CHECK(is_compatible(t));
    CHECK_THROWS_AS(extend_to_un(t), NegativeShift);
  }
  CHECK(is_compatible(Triple(Weight(6, {1, 3, 1, 2, 1}), Weight(6, {2, 1, 3, 2, 1}), Weight(6, {4, 1, 6, 2, 1}))));
}

TEST_CASE("extension balances the trace") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> label(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 5;
    auto w = [&] {
      std::vector<Int> l(n - 1);
      for (Int& x : l) x = label(rng);
      return Weight(n, l);
    };
    Triple t(w(), w(), w());
    if (!is_compatible(t) || balancing_shift(t) < 0) continue;
    UnTriple u = extend_to_un(t);
    Int a = std::accumulate(u.alpha.begin(), u.alpha.end(), Int{0});
    Int b = std::accumulate(u.beta.begin(), u.beta.end(), Int{0});
    Int g = std::accumulate(u.gamma.begin(), u.gamma.end(), Int{0});
    CHECK(g == a + b);
  }
}

TEST_CASE("vandermonde") {
  CHECK(vandermonde(IntPartition{2, 1, 0}) == 2);
  CHECK(vandermonde(IntPartition{3, 2, 1}) == 2);
  CHECK(vandermonde(IntPartition{4, 1, 1}) == 0);
  Partition p{make_rational(7, 2), 1, make_rational(-1, 3)};
  Partition q{1, make_rational(7, 2), make_rational(-1, 3)};
  CHECK(vandermonde(q) == -vandermonde(p));
}

TEST_CASE("superfactorial") {
  CHECK(superfactorial(0) == 1);
  CHECK(superfactorial(2) == 2);
  CHECK(superfactorial(3) == 12);
  CHECK(superfactorial(4) == 288);
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dim(Weight(2, {1})) == 2);
  CHECK(weyl_dim(Weight(4, {1, 0, 1})) == 15);
  CHECK(weyl_dim(Weight(5, {0, 1, 1, 0})) == 75);
  CHECK(weyl_dim(Weight::zero(6)) == 1);
  for (int n = 2; n <= 5; ++n)
    for (const auto& l : oracle::weights_in_box(n, 3)) {
      BigInt d = weyl_dim(Weight(n, l));
      CHECK(d >= 1);
      CHECK(d == oracle::weyl_dim_roots(l));
    }
}

TEST_CASE("dimension sum rule") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& l : oracle::weights_in_box(n, 2))
      for (const auto& m : oracle::weights_in_box(n, 2)) {
        Weight lam(n, l), mu(n, m);
        BigInt total = 0;
        for (const auto& e : tensor_decompose(lam, mu))
          total += weyl_dim(e.nu) * BigInt(static_cast<unsigned long>(e.multiplicity));
        CHECK(total == weyl_dim(lam) * weyl_dim(mu));
      }
}

TEST_CASE("rational text round trip") {
  for (const char* s : {"0", "-3", "97/24", "-1/11340"}) CHECK(to_string(parse_rational(s)) == s);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
