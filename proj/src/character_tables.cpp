#include "hivelab/character_tables.hpp"

#include "hivelab/errors.hpp"
#include "hivelab/kernel.hpp"

#include <algorithm>
#include <numeric>

namespace hivelab {

namespace {

struct RawTerm {
  std::vector<Int> kappa;
  long num;
};

struct RawTable {
  long denom;
  std::vector<RawTerm> terms;
};

RawTable raw_table(int n, Variant v) {
  const bool hat = v == Variant::Unshifted;
  switch (n) {
  case 2:
    return hat ? RawTable{2, {{{1}, 1}}} : RawTable{1, {{{0}, 1}}};
  case 3:
    return RawTable{1, {{{0, 0}, 1}}};
  case 4:
    return hat ? RawTable{6, {{{0, 1, 0}, 1}}} : RawTable{24, {{{0, 0, 0}, 9}, {{1, 0, 1}, 1}}};
  case 5:
    return RawTable{360, {{{0, 0, 0, 0}, 45}, {{1, 0, 0, 1}, 10}, {{0, 1, 1, 0}, 1}}};
  case 6:
    if (hat)
      return RawTable{362880,
                      {{{0, 0, 1, 0, 0}, 5422},
                       {{0, 1, 1, 1, 0}, 1},
                       {{0, 2, 0, 0, 1}, 13},
                       {{1, 0, 0, 2, 0}, 13},
                       {{1, 0, 1, 0, 1}, 186},
                       {{0, 0, 0, 1, 1}, 982},
                       {{1, 1, 0, 0, 0}, 982}}};
    return RawTable{256L * 362880,
                    {{{0, 0, 0, 0, 0}, 2629422},
                     {{0, 0, 1, 1, 1}, 1670},
                     {{1, 1, 1, 0, 0}, 1670},
                     {{0, 0, 2, 0, 0}, 24167},
                     {{0, 1, 0, 0, 2}, 13826},
                     {{2, 0, 0, 1, 0}, 13826},
                     {{0, 1, 0, 1, 0}, 216561},
                     {{1, 0, 0, 0, 1}, 957461},
                     {{1, 0, 2, 0, 1}, 1},
                     {{1, 1, 0, 1, 1}, 125},
                     {{2, 0, 0, 0, 2}, 985}}};
  default:
    throw Unsupported("character tables stored for 2 <= n <= 6, got n = " + std::to_string(n));
  }
}

} // namespace

Rational CharacterCombo::dimension_sum() const {
  Rational s = 0;
  for (const auto& t : terms) s += t.r * Rational(weyl_dim(t.kappa));
  return s;
}

CharacterCombo rn_table(int n, Variant variant) {
  RawTable raw = raw_table(n, variant);
  CharacterCombo c;
  c.n = n;
  c.variant = variant;
  for (const auto& t : raw.terms) c.terms.push_back({Weight(n, t.kappa), make_rational(t.num, raw.denom)});
  return c;
}

BigInt quantization_delta(int n) {
  switch (n) {
  case 2:
  case 3: return 1;
  case 4: return 6;
  case 5: return 360;
  case 6: return 362880;
  default: throw Unsupported("quantization table stored for 2 <= n <= 6");
  }
}

Theorem1Result theorem1(const Triple& t, Variant variant, const HiveOptions& opts) {
  if (!is_compatible(t)) throw Incompatible("triple fails the congruence condition");
  CharacterCombo table = rn_table(t.n, variant);
  Theorem1Result out;
  out.value = 0;
  Triple base = t;
  if (variant == Variant::Unshifted) {
    auto positive = [](const Weight& w) {
      return std::all_of(w.labels.begin(), w.labels.end(), [](Int l) { return l >= 1; });
    };
    if (!positive(t.lam) || !positive(t.mu) || !positive(t.nu)) {
      for (const auto& term : table.terms) out.terms.push_back({term.kappa, term.r, 0});
      return out;
    }
    base = rho_shift(t, -1);
  }
  for (const auto& term : table.terms) {
    Count sum = 0;
    for (const auto& e : tensor_decompose(term.kappa, base.nu, opts))
      sum += e.multiplicity * count_hives(Triple(base.lam, base.mu, e.nu), opts);
    out.terms.push_back({term.kappa, term.r, sum});
    out.value += term.r * Rational(BigInt(static_cast<unsigned long>(sum)));
  }
  return out;
}

Rational theorem1_rhs(const Triple& t, Variant variant, const HiveOptions& opts) {
  return theorem1(t, variant, opts).value;
}

Lemma3Report lemma3_check(int n) {
  Lemma3Report r;
  r.sum_r_dim = rn_table(n, Variant::Shifted).dimension_sum();
  r.sum_rhat_dim = rn_table(n, Variant::Unshifted).dimension_sum();
  r.pass = r.sum_r_dim == 1 && r.sum_rhat_dim == 1;
  return r;
}

bool quantization_check(const Rational& value, int n) {
  return is_integer(Rational(value * Rational(quantization_delta(n))));
}

Conjecture2Report conjecture2_scan(int n) {
  auto min_of = [](const CharacterCombo& c) {
    Rational m = c.terms.front().r;
    for (const auto& t : c.terms) m = std::min(m, t.r);
    return m;
  };
  Conjecture2Report r;
  r.min_r = min_of(rn_table(n, Variant::Shifted));
  r.min_rhat = min_of(rn_table(n, Variant::Unshifted));
  r.nonnegative = r.min_r >= 0 && r.min_rhat >= 0;
  return r;
}

LocalizationReport localization_check(const IntPartition& alpha, const IntPartition& beta) {
  const int n = static_cast<int>(alpha.size());
  if (n < 3 || n > 4 || static_cast<int>(beta.size()) != n)
    throw Unsupported("localization check implemented for n = 3, 4");
  const BigInt da = vandermonde(alpha), db = vandermonde(beta);
  if (da == 0 || db == 0) throw DegenerateOrbit("alpha or beta has a repeated part");
  const Int total = std::accumulate(alpha.begin(), alpha.end(), Int{0}) +
                    std::accumulate(beta.begin(), beta.end(), Int{0});
  const Int top = alpha.front() + beta.front(), bottom = alpha.back() + beta.back();

  LocalizationReport rep;
  rep.sum = 0;
  rep.target = Rational(BigInt(1), superfactorial(n - 1));
  KernelInput k;
  k.n = n;
  k.alpha = to_partition(alpha);
  k.beta = to_partition(beta);
  IntPartition gamma(n);
  auto visit = [&](auto&& self, int i, Int ceiling, Int remaining) -> void {
    if (i == n - 1) {
      if (remaining < bottom || remaining > ceiling) return;
      gamma[i] = remaining;
      k.gamma = to_partition(gamma);
      Rational j = jn_closed_form(k);
      if (j != 0) {
        ++rep.points;
        rep.sum += j * Rational(vandermonde(gamma)) / Rational(da * db);
      }
      return;
    }
    for (Int g = ceiling; g >= bottom; --g) {
      if (remaining - g > g * (n - 1 - i)) break;
      if (remaining - g < bottom * (n - 1 - i)) continue;
      gamma[i] = g;
      self(self, i + 1, g, remaining - g);
    }
  };
  visit(visit, 0, top, total);
  rep.pass = rep.sum == rep.target;
  return rep;
}

} // namespace hivelab
