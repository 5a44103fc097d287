#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "tfmult/verify.hpp"

namespace tfmult::verify {
namespace {

double relative_deviation(double measured, double predicted) {
  return std::abs(measured / predicted - 1.0);
}

Grid resolved_grid(const Grid& grid, double t, const AmalgamOptions& options) {
  if (!options.resolve_ridge || grid.dim() != 1) return grid;
  // At N/2 the frequency period N/(2L) must still hold the ridge w = t x over
  // the central half of the box, t L / 2, with a factor two to spare.
  const double needed = 2.0 * std::abs(t) * grid.length() * grid.length();
  std::size_t n = grid.samples_per_axis();
  while (static_cast<double>(n) < needed && n * 2 <= options.max_samples_per_axis) n *= 2;
  return Grid(grid.dim(), grid.length(), n);
}

}  // namespace

double chirp_stft_oracle(std::span<const double> x, std::span<const double> omega, double t) {
  const double s = 1.0 + t * t;
  double dist2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double u = omega[i] - t * x[i];
    dist2 += u * u;
  }
  const double dim = static_cast<double>(x.size());
  return std::pow(s, -dim / 4.0) * std::exp(-std::numbers::pi * dist2 / s);
}

double chirp_amalgam_constant(double t, int dim) {
  return std::pow(1.0 + t * t, static_cast<double>(dim) / 4.0);
}

double chirp_m1inf_constant(double t, int dim) {
  if (t == 0.0) return kInf;
  return chirp_amalgam_constant(t, dim) * std::pow(std::abs(t), -static_cast<double>(dim));
}

ChirpStftReport verify_chirp_stft(const Grid& grid, double t, std::size_t stride) {
  ChirpStftReport report;
  report.t = t;
  const GaussianChirp chirp{t};
  if (auto w = aliasing_warning(grid, chirp, Domain::position)) report.warnings.push_back(*w);

  const SampledField sigma = symbol_field(grid, chirp);
  const Window g = gaussian_window(grid);
  const auto dim = static_cast<std::size_t>(grid.dim());
  const auto n = static_cast<long long>(grid.samples_per_axis());
  std::vector<double> x(dim), omega(dim);
  std::vector<std::size_t> index(dim);

  for_each_stft_row(sigma, g, StftOptions{stride, 0.5},
                    [&](std::size_t, std::size_t position, std::span<const complex> row) {
                      grid.position_of(position, x);
                      for (std::size_t k = 0; k < row.size(); ++k) {
                        grid.unravel(k, index);
                        bool central = true;
                        for (auto i : index) {
                          central = central && std::llabs(static_cast<long long>(i) - n / 2) < n / 4;
                        }
                        if (!central) continue;
                        grid.frequency_of(k, omega);
                        const double err = std::abs(std::abs(row[k]) - chirp_stft_oracle(x, omega, t));
                        report.max_abs_error = std::max(report.max_abs_error, err);
                        ++report.points_checked;
                      }
                    });
  return report;
}

AmalgamTable verify_amalgam_constants(const Grid& grid, const std::vector<double>& t_list,
                                      const AmalgamOptions& options) {
  AmalgamTable table;
  table.tolerance = options.tolerance;
  table.passed = true;
  for (double t : t_list) {
    const Grid g_t = resolved_grid(grid, t, options);
    StftOptions stft = options.stft;
    stft.stride *= g_t.samples_per_axis() / grid.samples_per_axis();

    const SampledField sigma = symbol_field(g_t, GaussianChirp{t});
    const Window g = gaussian_window(g_t);
    const NormOptions norm_options{stft, true};

    AmalgamRow row;
    row.t = t;
    row.grid = GridInfo{g_t.dim(), g_t.length(), g_t.samples_per_axis(), stft.stride, stft.interior};
    if (auto w = aliasing_warning(g_t, GaussianChirp{t}, Domain::position)) row.warnings.push_back(*w);

    const NormReport w = amalgam_norm_wfl1(sigma, g, norm_options);
    row.w_measured = w.value;
    row.w_predicted = chirp_amalgam_constant(t, g_t.dim());
    row.w_refinement = w.refinement_estimate;
    row.passed = relative_deviation(row.w_measured, row.w_predicted) <= options.tolerance;

    if (options.include_m1inf && t != 0.0) {
      const NormReport m = m_1_inf_norm(sigma, g, norm_options);
      row.m1inf_measured = m.value;
      row.m1inf_predicted = chirp_m1inf_constant(t, g_t.dim());
      row.m1inf_refinement = m.refinement_estimate;
      row.passed = row.passed &&
                   relative_deviation(*row.m1inf_measured, *row.m1inf_predicted) <= options.tolerance;
    }
    table.passed = table.passed && row.passed;
    table.rows.push_back(std::move(row));
  }
  return table;
}

DivergenceReport verify_m_inf_1_divergence(const Grid& grid, double t, int doublings) {
  if (grid.dim() != 1) throw ParameterError("divergence experiment is one-dimensional");
  if (doublings < 1) throw ParameterError("divergence experiment needs at least one doubling");
  DivergenceReport report;
  report.t = t;
  for (int i = 0; i <= doublings; ++i) {
    const std::size_t scale = std::size_t{1} << i;
    const Grid g_i(1, grid.length() * static_cast<double>(scale), grid.samples_per_axis() * scale);
    const double nyquist = 0.5 * static_cast<double>(g_i.samples_per_axis()) * g_i.dxi();
    if (std::abs(t) * g_i.length() / 4.0 > nyquist) {
      report.warnings.push_back("ridge leaves the frequency lattice at L = " +
                                std::to_string(g_i.length()));
    }
    const SampledField sigma = symbol_field(g_i, GaussianChirp{t});
    const NormReport norm =
        m_inf_1_norm(sigma, gaussian_window(g_i), NormOptions{StftOptions{1, 0.5}, false});
    // Along w = t x the STFT modulus is (1 + t^2)^{-1/4}; the ridge covers
    // |w| < t L / 4 of the frequency axis for the central-half positions.
    const double covered = std::min(std::abs(t) * g_i.length() / 2.0, 2.0 * nyquist);
    report.rows.push_back(
        DivergenceRow{g_i.length(), g_i.samples_per_axis(), norm.value,
                      std::pow(1.0 + t * t, -0.25) * covered});
  }

  report.strictly_increasing = true;
  report.min_growth = kInf;
  report.above_envelope = true;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    report.above_envelope =
        report.above_envelope && report.rows[i].value >= (1.0 - 1e-3) * report.rows[i].ridge_envelope;
    if (i == 0) continue;
    const double growth = report.rows[i].value / report.rows[i - 1].value;
    report.min_growth = std::min(report.min_growth, growth);
    report.strictly_increasing = report.strictly_increasing && growth > 1.0;
  }
  report.divergence_checked = t != 0.0;
  return report;
}

}  // namespace tfmult::verify
