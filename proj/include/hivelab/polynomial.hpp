#pragma once

#include "hivelab/rational.hpp"

#include <string>
#include <vector>

namespace hivelab {

/// Exact univariate polynomial, constant term first, no trailing zeros.
class RationalPoly {
public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  /// Unique polynomial of degree <= k through (0, v_0), ..., (k, v_k).
  static RationalPoly interpolate(const std::vector<Rational>& values);
  /// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]); nodes distinct.
  static RationalPoly interpolate(const std::vector<Rational>& nodes,
                                  const std::vector<Rational>& values);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  Rational leading() const { return coeff(degree()); }
  Rational operator()(const Rational& s) const;

  bool operator==(const RationalPoly&) const = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// "53/15 s^6 + ... + 1" for human-readable summaries.
std::string to_string(const RationalPoly& p, const std::string& var = "s");

} // namespace hivelab
