#include "hivelab/core_types.hpp"

#include "hivelab/errors.hpp"

#include <numeric>
#include <sstream>

namespace hivelab {

Weight::Weight(int rank, std::vector<Int> dynkin) : n(rank), labels(std::move(dynkin)) {
  if (n < 2) throw InvalidWeight("rank must be at least 2, got " + std::to_string(n));
  if (labels.size() != static_cast<std::size_t>(n - 1))
    throw InvalidWeight("SU(" + std::to_string(n) + ") weight needs " + std::to_string(n - 1) +
                        " labels, got " + std::to_string(labels.size()));
  for (Int l : labels)
    if (l < 0) throw InvalidWeight("negative Dynkin label in " + to_string(*this));
}

Triple::Triple(Weight l, Weight m, Weight v)
    : n(l.n), lam(std::move(l)), mu(std::move(m)), nu(std::move(v)) {
  if (mu.n != n || nu.n != n)
    throw RankMismatch("weights of ranks " + std::to_string(n) + ", " + std::to_string(mu.n) +
                       ", " + std::to_string(nu.n));
}

IntPartition ell(const Weight& w) {
  IntPartition p(w.n, 0);
  for (int i = w.n - 2; i >= 0; --i) p[i] = p[i + 1] + w.labels[i];
  return p;
}

Weight weight_from_partition(const IntPartition& p) {
  std::vector<Int> labels(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) labels[i] = p[i] - p[i + 1];
  return Weight(static_cast<int>(p.size()), std::move(labels));
}

Weight rho_shift(const Weight& w, int sign) {
  std::vector<Int> labels = w.labels;
  for (Int& l : labels) {
    l += sign;
    if (l < 0) throw NonDominant(to_string(w) + " minus rho is not dominant");
  }
  return Weight(w.n, std::move(labels));
}

Weight scale(const Weight& w, Int s) {
  std::vector<Int> labels = w.labels;
  for (Int& l : labels) l *= s;
  return Weight(w.n, std::move(labels));
}

Triple scale(const Triple& t, Int s) { return Triple(scale(t.lam, s), scale(t.mu, s), scale(t.nu, s)); }

Triple rho_shift(const Triple& t, int sign) {
  return Triple(rho_shift(t.lam, sign), rho_shift(t.mu, sign), rho_shift(t.nu, sign));
}

Rational balancing_shift(const Triple& t) {
  Int acc = 0;
  for (int j = 1; j < t.n; ++j)
    acc += j * (t.lam.labels[j - 1] + t.mu.labels[j - 1] - t.nu.labels[j - 1]);
  return make_rational(acc, t.n);
}

UnTriple extend_to_un(const Triple& t) {
  Rational sigma = balancing_shift(t);
  if (!is_integer(sigma))
    throw Incompatible("sigma = " + to_string(sigma) + " is not an integer");
  if (sigma < 0) throw NegativeShift("sigma = " + to_string(sigma) + " is negative");
  UnTriple u;
  u.sigma = sigma.get_num().get_si();
  u.alpha = ell(t.lam);
  u.beta = ell(t.mu);
  u.gamma = ell(t.nu);
  for (Int& g : u.gamma) g += u.sigma;
  return u;
}

bool is_compatible(const Triple& t) { return is_integer(balancing_shift(t)); }

Rational vandermonde(const Partition& p) { return vandermonde_of(p); }

BigInt vandermonde(const IntPartition& p) {
  BigInt prod = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) prod *= BigInt(static_cast<long>(p[i] - p[j]));
  return prod;
}

BigInt factorial(int m) {
  BigInt f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

BigInt superfactorial(int m) {
  BigInt s = 1;
  for (int p = 1; p <= m; ++p) s *= factorial(p);
  return s;
}

BigInt weyl_dim(const Weight& w) {
  return vandermonde(ell(rho_shift(w, +1))) / superfactorial(w.n - 1);
}

Partition to_partition(const IntPartition& p) {
  Partition out;
  out.reserve(p.size());
  for (Int v : p) out.push_back(to_rational(v));
  return out;
}

bool is_weakly_decreasing(const Partition& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return true;
}

std::string to_string(const Weight& w) { return to_string(IntPartition(w.labels)); }

std::string to_string(const IntPartition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw ParseError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

} // namespace hivelab
