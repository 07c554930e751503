#include "hivelab/golden.hpp"

#include "hivelab/character_tables.hpp"
#include "hivelab/errors.hpp"
#include "hivelab/json_io.hpp"
#include "hivelab/kernel.hpp"
#include "hivelab/stretch.hpp"

#include <functional>

namespace hivelab {

namespace {

Triple triple(int n, std::vector<Int> l, std::vector<Int> m, std::vector<Int> v) {
  return Triple(Weight(n, std::move(l)), Weight(n, std::move(m)), Weight(n, std::move(v)));
}

std::string poly_str(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return to_string(RationalPoly(c));
}

} // namespace

std::vector<GoldenResult> run_golden_suite(const HiveOptions& opts) {
  const Triple su4 = triple(4, {21, 13, 5}, {7, 10, 12}, {20, 11, 9});
  const Triple su4b = triple(4, {1, 2, 2}, {2, 2, 1}, {1, 4, 1});
  const Triple su5 = triple(5, {1, 3, 2, 3}, {2, 1, 4, 2}, {3, 1, 4, 3});
  const Triple su5b = triple(5, {2, 3, 3, 2}, {3, 2, 3, 2}, {5, 3, 2, 3});
  const Triple su6 = triple(6, {1, 3, 1, 2, 1}, {2, 1, 3, 2, 1}, {4, 1, 6, 2, 1});

  std::vector<GoldenResult> out;
  auto check = [&](std::string name, std::string expected, std::function<std::string()> actual) {
    GoldenResult r{std::move(name), std::move(expected), "", false};
    try {
      r.actual = actual();
      r.pass = r.actual == r.expected;
    } catch (const Error& e) {
      r.actual = e.name() + ": " + e.what();
    }
    out.push_back(std::move(r));
  };
  auto num = [](auto v) { return std::to_string(v); };

  check("ell SU(3) (9,5)", "(14,5,0)", [] { return to_string(ell(Weight(3, {9, 5}))); });
  check("compatible SU(6) example", "true", [&] { return is_compatible(su6) ? "true" : "false"; });
  check("superfactorial 3", "12", [] { return superfactorial(3).get_str(); });
  check("superfactorial 4", "288", [] { return superfactorial(4).get_str(); });
  check("weyl_dim SU(5) (0,1,1,0)", "75", [] { return weyl_dim(Weight(5, {0, 1, 1, 0})).get_str(); });

  check("N SU(4) example", "367", [&] { return num(count_hives(su4, opts)); });
  check("LR tableaux SU(4) example", "367", [&] { return num(lr_oracle(su4, opts)); });
  check("N SU(6) example", "38", [&] { return num(count_hives(su6, opts)); });
  check("N SU(5) example", "99", [&] { return num(count_hives(su5, opts)); });
  check("hives SU(5) doubled example", "1463",
        [&] { return num(enumerate_hives(scale(su5, 2), opts).size()); });
  check("tensor SU(3) (9,5)x(6,5) max", "6", [&] {
    return num(tensor_polytope_report(Weight(3, {9, 5}), Weight(3, {6, 5}), opts).max);
  });
  check("tensor SU(4) report", "7092/537186/377", [&] {
    auto r = tensor_polytope_report(su4.lam, su4.mu, opts);
    return num(r.distinct) + "/" + num(r.total) + "/" + num(r.max);
  });
  check("SU(3) min/max max multiplicity", "6", [&] {
    Count best = 0;
    for (const auto& e : tensor_decompose(Weight(3, {9, 5}), Weight(3, {6, 5}), opts))
      best = std::max(best, lr_su3_minmax(Triple(Weight(3, {9, 5}), Weight(3, {6, 5}), e.nu)));
    return num(best);
  });

  check("j2 endpoint half", "1/2", [] {
    KernelInput k{2, to_partition({1, 0}), to_partition({1, 0}), to_partition({2, 0}), false};
    return to_string(j2(k, EndpointMode::Half));
  });
  check("j4 SU(4) example", "742/3", [&] { return to_string(j4(kernel_input(su4, false))); });
  check("j4 shifted (1,2,2)", "97/24", [&] { return to_string(j4(kernel_input(su4b, true))); });
  check("j4 unshifted (1,2,2)", "1/3", [&] { return to_string(j4(kernel_input(su4b, false))); });

  auto table = [](int n, Variant v) { return Json(rn_table(n, v)).at("terms").dump(); };
  check("R_4", R"([{"kappa":[0,0,0],"r":"3/8"},{"kappa":[1,0,1],"r":"1/24"}])",
        [&] { return table(4, Variant::Shifted); });
  check("Rhat_4", R"([{"kappa":[0,1,0],"r":"1/6"}])", [&] { return table(4, Variant::Unshifted); });
  check("R_3", R"([{"kappa":[0,0],"r":"1"}])", [&] { return table(3, Variant::Shifted); });

  check("theorem1 shifted (1,2,2)", "97/24",
        [&] { return to_string(theorem1_rhs(su4b, Variant::Shifted, opts)); });
  check("theorem1 SU(5) shifted split", to_string(make_rational(63213, 360)) + " 9495 42010 11708",
        [&] {
          auto r = theorem1(su5b, Variant::Shifted, opts);
          std::string s = to_string(r.value);
          for (const auto& t : r.terms)
            s += " " + to_string(Rational(t.r * 360 * Rational(BigInt(static_cast<unsigned long>(t.lr_sum)))));
          return s;
        });
  check("theorem1 SU(6) unshifted", "1/11340",
        [&] { return to_string(theorem1_rhs(su6, Variant::Unshifted, opts)); });

  for (int n : {4, 5, 6})
    check("lemma3 n=" + num(n), "pass", [n] { return lemma3_check(n).pass ? "pass" : "fail"; });
  check("quantization 742/3 n=4", "true",
        [] { return quantization_check(make_rational(742, 3), 4) ? "true" : "false"; });
  check("quantization 1/3 n=4", "true",
        [] { return quantization_check(make_rational(1, 3), 4) ? "true" : "false"; });
  check("quantization 53/15 n=5", "true",
        [] { return quantization_check(make_rational(53, 15), 5) ? "true" : "false"; });
  check("conjecture2 n=4 min", "1/24", [] {
    auto r = conjecture2_scan(4);
    return to_string(std::min(r.min_r, r.min_rhat));
  });
  check("conjecture2 n=2 min", "1/2", [] { return to_string(conjecture2_scan(2).min_rhat); });
  check("conjecture2 n=6 nonnegative", "true",
        [] { return conjecture2_scan(6).nonnegative ? "true" : "false"; });

  check("stretched counts SU(4)", "[367,2422,7650,17535]",
        [&] { return Json(stretched_counts(su4, 4, opts)).dump(); });
  check("stretched counts SU(6)", "[38,511]", [&] { return Json(stretched_counts(su6, 2, opts)).dump(); });
  check("stretching polynomial SU(4)", poly_str({"1", "97/6", "205/2", "742/3"}),
        [&] { return to_string(stretching_polynomial(su4, opts)); });
  check("stretching polynomial SU(5)",
        poly_str({"1", "73/12", "687/40", "679/24", "667/24", "121/8", "53/15"}),
        [&] { return to_string(stretching_polynomial(su5, opts)); });
  check("geometry SU(4) V/A/interior", "1484/410/160", [&] {
    auto g = geometry_report(su4, opts);
    return to_string(g.normalized_volume) + "/" + to_string(g.normalized_boundary) + "/" +
           to_string(g.interior_points);
  });
  check("geometry SU(5) V/A", "2544/3630", [&] {
    auto g = geometry_report(su5, opts);
    return to_string(g.normalized_volume) + "/" + to_string(g.normalized_boundary);
  });
  check("volume route SU(4)", "742/3", [&] { return to_string(jn_via_volume(su4, opts)); });
  check("volume route SU(5)", "53/15", [&] { return to_string(jn_via_volume(su5, opts)); });
  check("volume route SU(6)", "1/11340", [&] { return to_string(jn_via_volume(su6, opts)); });
  check("shifted J_4 polynomial SU(4)", poly_str({"5/12", "12", "205/2", "742/3"}),
        [&] { return to_string(shifted_kernel_poly(su4)); });

  const std::vector<std::pair<Triple, std::vector<std::string>>> degenerate = {
      {triple(4, {2, 2, 1}, {2, 1, 3}, {0, 1, 4}), {"1", "3/2", "1/2"}},
      {triple(4, {2, 2, 1}, {2, 1, 3}, {2, 4, 0}), {"1", "2"}},
      {triple(4, {2, 2, 1}, {2, 1, 3}, {2, 0, 4}), {"1", "2", "1"}},
      {triple(4, {3, 0, 3}, {2, 3, 1}, {3, 4, 0}), {"1", "2"}},
      {triple(4, {3, 0, 3}, {2, 3, 1}, {2, 3, 1}), {"1", "3", "2"}},
  };
  for (const auto& [t, coeffs] : degenerate)
    check("degenerate " + to_string(t.lam) + to_string(t.mu) + to_string(t.nu), poly_str(coeffs),
          [&, t = t] { return to_string(stretching_polynomial(t, opts)); });
  return out;
}

} // namespace hivelab
