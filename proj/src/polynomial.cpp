#include "hivelab/polynomial.hpp"

#include "hivelab/core_types.hpp"

#include <sstream>

namespace hivelab {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational RationalPoly::operator()(const Rational& s) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

RationalPoly RationalPoly::interpolate(const std::vector<Rational>& values) {
  // Newton forward differences on the nodes 0..k, then expand the Newton basis.
  const int k = static_cast<int>(values.size()) - 1;
  std::vector<Rational> diff = values;
  std::vector<Rational> newton;
  for (int order = 0; order <= k; ++order) {
    newton.push_back(diff[0] / Rational(factorial(order)));
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  std::vector<Rational> result(k + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)}; // prod_{m<order} (s - m)
  for (int order = 0; order <= k; ++order) {
    for (std::size_t i = 0; i < basis.size(); ++i) result[i] += newton[order] * basis[i];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * order;
    }
    basis = std::move(next);
  }
  return RationalPoly(std::move(result));
}

RationalPoly RationalPoly::interpolate(const std::vector<Rational>& nodes,
                                      const std::vector<Rational>& values) {
  // Divided differences, then Horner-style expansion of the Newton form.
  const std::size_t m = nodes.size();
  std::vector<Rational> dd = values;
  for (std::size_t order = 1; order < m; ++order)
    for (std::size_t i = m - 1; i >= order; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - order]);
  std::vector<Rational> result{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<Rational> next(result.size() + 1, Rational(0));
    for (std::size_t k = 0; k < result.size(); ++k) {
      next[k + 1] += result[k];
      next[k] -= result[k] * nodes[i];
    }
    next[0] += dd[i];
    result = std::move(next);
  }
  return RationalPoly(std::move(result));
}

std::string to_string(const RationalPoly& p, const std::string& var) {
  if (p.degree() < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) os << (a != 1 ? " " : "") << var << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

} // namespace hivelab
