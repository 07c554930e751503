#include "hivelab/horn_mc.hpp"

#include "hivelab/errors.hpp"
#include "hivelab/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

namespace hivelab {

namespace {

constexpr std::size_t kChunk = 4096;

Eigen::MatrixXcd diag_conjugate(const Eigen::MatrixXcd& u, const std::vector<double>& d) {
  Eigen::VectorXcd dv(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) dv[i] = d[i];
  return u * dv.asDiagonal() * u.adjoint();
}

} // namespace

Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = {normal(rng), normal(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    std::complex<double> d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= a > 0 ? d / a : 1.0;
  }
  return q;
}

std::vector<SpectrumSample> sample_spectra(const std::vector<double>& alpha,
                                           const std::vector<double>& beta, std::size_t count,
                                           std::uint64_t seed, int threads) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1 || n > 6 || beta.size() != alpha.size())
    throw RankMismatch("sampling needs matching eigenvalue vectors with n <= 6");
  std::vector<SpectrumSample> out(count);
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
      std::mt19937_64 rng(seq);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(n);
      for (std::size_t k = c * kChunk; k < std::min(count, (c + 1) * kChunk); ++k) {
        Eigen::MatrixXcd m =
            diag_conjugate(haar_unitary(n, rng), alpha) + diag_conjugate(haar_unitary(n, rng), beta);
        solver.compute(m, Eigen::EigenvaluesOnly);
        auto ev = solver.eigenvalues();
        out[k].gamma.assign(ev.data(), ev.data() + n);
        std::sort(out[k].gamma.begin(), out[k].gamma.end(), std::greater<>());
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

double max_trace_error(const std::vector<SpectrumSample>& samples, const std::vector<double>& alpha,
                       const std::vector<double>& beta) {
  double target = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) target += alpha[i] + beta[i];
  double worst = 0;
  for (const auto& s : samples) {
    double sum = 0;
    for (double g : s.gamma) sum += g;
    worst = std::max(worst, std::abs(sum - target));
  }
  return worst;
}

std::size_t HistogramSpec::cell_count() const {
  std::size_t c = 1;
  for (int b : bins) c *= static_cast<std::size_t>(b);
  return c;
}

HistogramSpec horn_bounding_bins(const std::vector<double>& alpha, const std::vector<double>& beta,
                                 int bins_per_axis) {
  const int n = static_cast<int>(alpha.size());
  HistogramSpec spec;
  for (int k = 0; k + 1 < n; ++k) {
    double upper = std::numeric_limits<double>::infinity();
    double lower = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= k; ++i) upper = std::min(upper, alpha[i] + beta[k - i]);
    for (int i = k; i < n; ++i) lower = std::max(lower, alpha[i] + beta[n - 1 + k - i]);
    spec.lo.push_back(lower);
    spec.hi.push_back(upper);
    spec.bins.push_back(bins_per_axis);
  }
  return spec;
}

namespace {

constexpr int kOrder = 5;
constexpr double kNodes[kOrder] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                   0.5384693101056831, 0.9061798459386640};
constexpr double kWeights[kOrder] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                     0.4786286704993665, 0.2369268850561891};

using Density = std::function<double(const std::vector<double>&)>;

double gauss_box(const Density& f, const std::vector<double>& lo, const std::vector<double>& hi) {
  const std::size_t dim = lo.size();
  std::vector<int> idx(dim, 0);
  std::vector<double> x(dim);
  double total = 0;
  while (true) {
    double w = 1;
    for (std::size_t a = 0; a < dim; ++a) {
      double half = (hi[a] - lo[a]) / 2;
      x[a] = lo[a] + half * (1 + kNodes[idx[a]]);
      w *= half * kWeights[idx[a]];
    }
    total += w * f(x);
    std::size_t a = 0;
    while (a < dim && ++idx[a] == kOrder) idx[a++] = 0;
    if (a == dim) break;
  }
  return total;
}

double adaptive(const Density& f, const std::vector<double>& lo, const std::vector<double>& hi,
                double coarse, double rel_tol, double abs_tol, int depth) {
  const std::size_t dim = lo.size();
  double fine = 0;
  std::vector<std::pair<std::vector<double>, std::vector<double>>> parts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    std::vector<double> l(dim), h(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      double mid = (lo[a] + hi[a]) / 2;
      bool upper = mask >> a & 1;
      l[a] = upper ? mid : lo[a];
      h[a] = upper ? hi[a] : mid;
    }
    parts.emplace_back(l, h);
  }
  std::vector<double> vals;
  for (const auto& [l, h] : parts) {
    vals.push_back(gauss_box(f, l, h));
    fine += vals.back();
  }
  if (depth == 0 || std::abs(fine - coarse) <= std::max(rel_tol * std::abs(fine), abs_tol))
    return fine;
  double sum = 0;
  const double sub_abs = abs_tol / static_cast<double>(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    sum += adaptive(f, parts[i].first, parts[i].second, vals[i], rel_tol, sub_abs, depth - 1);
  return sum;
}

std::vector<double> cell_box(const HistogramSpec& spec, std::size_t cell, bool upper) {
  std::vector<double> corner(spec.lo.size());
  for (std::size_t a = 0; a < spec.lo.size(); ++a) {
    std::size_t i = cell % spec.bins[a];
    cell /= spec.bins[a];
    corner[a] = spec.lo[a] + spec.width(a) * static_cast<double>(i + (upper ? 1 : 0));
  }
  return corner;
}

} // namespace

std::vector<double> analytic_bin_masses(const std::vector<double>& alpha,
                                        const std::vector<double>& beta, const HistogramSpec& spec,
                                        double rel_tol) {
  const std::size_t n = alpha.size();
  if (n < 2 || n > 3) throw Unsupported("analytic bin masses available for n = 2, 3");
  Density f = [&](const std::vector<double>& x) { return pdf_density(x, alpha, beta); };
  const std::size_t cells = spec.cell_count();
  const double abs_tol = 1e-9 / static_cast<double>(cells);
  std::vector<double> masses(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    std::vector<double> lo = cell_box(spec, c, false), hi = cell_box(spec, c, true);
    masses[c] = adaptive(f, lo, hi, gauss_box(f, lo, hi), rel_tol, abs_tol, 12);
  }
  return masses;
}

DensityComparison compare_density(const std::vector<SpectrumSample>& samples,
                                  const std::vector<double>& alpha, const std::vector<double>& beta,
                                  const HistogramSpec& spec) {
  DensityComparison out;
  out.spec = spec;
  out.samples = samples.size();
  out.analytic = analytic_bin_masses(alpha, beta, spec);
  out.empirical.assign(spec.cell_count(), 0.0);
  const double unit = samples.empty() ? 0.0 : 1.0 / static_cast<double>(samples.size());
  for (const auto& s : samples) {
    std::size_t cell = 0, stride = 1;
    bool inside = true;
    for (std::size_t a = 0; a < spec.lo.size(); ++a) {
      double t = (s.gamma[a] - spec.lo[a]) / spec.width(a);
      auto i = static_cast<long>(std::floor(t));
      if (i == spec.bins[a] && t - spec.bins[a] < 1e-9) i = spec.bins[a] - 1;
      if (i < 0 || i >= spec.bins[a]) {
        inside = false;
        break;
      }
      cell += static_cast<std::size_t>(i) * stride;
      stride *= spec.bins[a];
    }
    if (inside) out.empirical[cell] += unit;
    else out.empirical_outside += unit;
  }
  out.l1_distance = out.empirical_outside;
  for (std::size_t c = 0; c < out.analytic.size(); ++c) {
    out.l1_distance += std::abs(out.empirical[c] - out.analytic[c]);
    out.analytic_total += out.analytic[c];
  }
  return out;
}

void write_samples_csv(std::ostream& os, const std::vector<SpectrumSample>& samples) {
  if (samples.empty()) return;
  for (std::size_t i = 0; i < samples.front().gamma.size(); ++i)
    os << (i ? "," : "") << "gamma" << i + 1;
  os << '\n';
  os.precision(17);
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < s.gamma.size(); ++i) os << (i ? "," : "") << s.gamma[i];
    os << '\n';
  }
}

} // namespace hivelab
