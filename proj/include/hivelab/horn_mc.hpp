#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace hivelab {

struct SpectrumSample {
  std::vector<double> gamma; ///< descending
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with R's diagonal phases removed.
Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng);

/// Spectra of U diag(alpha) U* + V diag(beta) V*. Samples are generated in fixed-size
/// chunks with per-chunk seeds, so the stream depends only on (seed, count).
std::vector<SpectrumSample> sample_spectra(const std::vector<double>& alpha,
                                           const std::vector<double>& beta, std::size_t count,
                                           std::uint64_t seed, int threads = 1);

double max_trace_error(const std::vector<SpectrumSample>& samples, const std::vector<double>& alpha,
                       const std::vector<double>& beta);

/// Regular grid over the free coordinates gamma_1..gamma_{n-1}.
struct HistogramSpec {
  std::vector<double> lo, hi;
  std::vector<int> bins;

  std::size_t cell_count() const;
  double width(std::size_t axis) const { return (hi[axis] - lo[axis]) / bins[axis]; }
};

/// Bounding box of the Horn polytope from the Weyl inequalities, bins_per_axis on each axis.
HistogramSpec horn_bounding_bins(const std::vector<double>& alpha, const std::vector<double>& beta,
                                 int bins_per_axis);

struct DensityComparison {
  HistogramSpec spec;
  std::vector<double> empirical, analytic;
  double l1_distance = 0;
  double empirical_outside = 0; ///< sample mass falling outside the grid
  double analytic_total = 0;
  std::size_t samples = 0;
};

/// Cell integrals of the analytic density by adaptive tensor Gauss-Legendre quadrature.
std::vector<double> analytic_bin_masses(const std::vector<double>& alpha,
                                        const std::vector<double>& beta, const HistogramSpec& spec,
                                        double rel_tol = 1e-4);

/// n = 2, 3 only; throws DegenerateOrbit for repeated eigenvalues.
DensityComparison compare_density(const std::vector<SpectrumSample>& samples,
                                  const std::vector<double>& alpha, const std::vector<double>& beta,
                                  const HistogramSpec& spec);

void write_samples_csv(std::ostream& os, const std::vector<SpectrumSample>& samples);

} // namespace hivelab
