#pragma once

// Numerical experiments for unimodular multipliers on modulation spaces:
// closed-form checks for the Gaussian chirp, the dyadic FL^1 series for
// homogeneous phases, linear-phase and Taylor-remainder probes, operator
// norm probes and the Schrodinger / wave evolution tables.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfmult/core.hpp"
#include "tfmult/mult.hpp"
#include "tfmult/tf.hpp"

namespace tfmult::verify {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED2007ULL;

// ---------------------------------------------------------------------------
// Gaussian chirp sigma_2(xi) = e^{i pi t |xi|^2}

/// |V_g sigma_2(x, w)| = (1 + t^2)^{-d/4} e^{-pi |w - t x|^2 / (1 + t^2)} for
/// the window g = e^{-pi |x|^2}. Dimension is x.size().
double chirp_stft_oracle(std::span<const double> x, std::span<const double> omega, double t);

/// (1 + t^2)^{d/4}.
double chirp_amalgam_constant(double t, int dim);
/// (1 + t^2)^{d/4} t^{-d}; infinite at t = 0.
double chirp_m1inf_constant(double t, int dim);

struct ChirpStftReport {
  double t = 0.0;
  double max_abs_error = 0.0;
  std::size_t points_checked = 0;
  std::vector<std::string> warnings;
};

/// Discrete STFT of the sampled chirp against the oracle over the central
/// half of both lattices.
ChirpStftReport verify_chirp_stft(const Grid& grid, double t, std::size_t stride = 1);

struct AmalgamRow {
  double t = 0.0;
  GridInfo grid;
  double w_measured = 0.0;
  double w_predicted = 0.0;
  std::optional<double> w_refinement;
  std::optional<double> m1inf_measured;
  std::optional<double> m1inf_predicted;  // empty at t = 0
  std::optional<double> m1inf_refinement;
  bool passed = false;
  std::vector<std::string> warnings;
};

struct AmalgamOptions {
  /// Positions evaluated: the central half, every `stride`-th point.
  StftOptions stft{1, 0.5};
  /// Raise N per t so the chirp ridge fits the frequency period at N/2.
  bool resolve_ridge = true;
  std::size_t max_samples_per_axis = 8192;
  bool include_m1inf = true;
  double tolerance = 0.02;
};

struct AmalgamTable {
  std::vector<AmalgamRow> rows;
  double tolerance = 0.02;
  bool passed = false;
};

/// W(FL^1, l^inf) and M^{1,inf} norms of the chirp against the closed forms.
AmalgamTable verify_amalgam_constants(const Grid& grid, const std::vector<double>& t_list,
                                      const AmalgamOptions& options = {});

struct DivergenceRow {
  double length = 0.0;
  std::size_t samples_per_axis = 0;
  double value = 0.0;
  double ridge_envelope = 0.0;  // lower bound from the ridge w = t x
};

struct DivergenceReport {
  double t = 0.0;
  std::vector<DivergenceRow> rows;
  bool strictly_increasing = false;
  double min_growth = 0.0;
  bool above_envelope = false;
  bool divergence_checked = false;
  std::vector<std::string> warnings;
};

/// m_inf_1_norm of the chirp on boxes L, 2L, 4L at the spacing of `grid`.
DivergenceReport verify_m_inf_1_divergence(const Grid& grid, double t, int doublings = 2);

// ---------------------------------------------------------------------------
// Dyadic FL^1 machinery for e^{i mu} chi, mu homogeneous of order alpha

struct DyadicTerm {
  int k = 0;
  double psi_hat_l1 = 0.0;  // ||psi_k^||_1 (k >= 1)
  double phi_bound = 0.0;   // sum_j 2^{-k j alpha} ||psi_k^||_1 + geometric tail
  double phi_direct = 0.0;  // ||mu^k chi||_{FL^1} computed directly
  double partial_sum = 0.0; // sum_{k' <= k} phi_bound / k'!
};

struct DyadicSeriesReport {
  double alpha = 0.0;
  int K = 0;
  int J = 0;
  std::vector<DyadicTerm> per_k;
  double direct_fl1 = 0.0;
  std::optional<double> direct_refinement;
  double series_bound = 0.0;
  /// First k whose increment is below 1e-6 relative to the partial sum.
  std::optional<int> cauchy_index;
};

/// mu(xi) = |xi|^alpha. The grid must contain the ball |xi| <= 4.
DyadicSeriesReport dyadic_fl1_series(double alpha, int K, int J, const Grid& grid);

struct SinSingularReport {
  double alpha = 0.0;
  double delta = 0.0;
  double direct_fl1 = 0.0;
  std::optional<double> direct_refinement;
  std::vector<double> partial_sums;  // sum_{k' <= k} ||xi^{(2k'+1)a - d} chi||_{FL^1} / (2k'+1)!
  std::optional<int> cauchy_index;
  double value_at_origin = 0.0;
};

/// FL^1 membership of sin(|xi|^alpha) |xi|^{-delta} chi, 0 < delta <= alpha <= 1.
SinSingularReport verify_sin_singular_fl1(double alpha, double delta, const Grid& grid,
                                          int terms = 20);

// ---------------------------------------------------------------------------
// Linear phases and Taylor remainders

struct PhaseInvarianceResult {
  double before = 0.0;
  double after = 0.0;
  double relative_difference = 0.0;
};

/// ||sigma T_x g||_{FL^1} before and after sigma -> e^{i(a + xi.b)} sigma with
/// b = 2 pi m dxi (exact lattice modulation). `shift` is x in samples.
PhaseInvarianceResult linear_phase_invariance(const SampledField& sigma, const Window& g,
                                              std::span<const long long> shift, double a,
                                              std::span<const long long> m);

/// Same with an arbitrary real b, evaluated pointwise.
PhaseInvarianceResult linear_phase_invariance(const SampledField& sigma, const Window& g,
                                              std::span<const long long> shift, double a,
                                              std::span<const double> b);

struct PhaseTrial {
  std::string symbol;
  long long shift = 0;
  double a = 0.0;
  long long m = 0;
  PhaseInvarianceResult result;
};

/// Seeded random (sigma, x, a, b) cases drawn from the symbol families.
std::vector<PhaseTrial> linear_phase_trials(const Grid& grid, int count,
                                            std::uint64_t seed = kDefaultSeed);

using Phase1d = std::function<double(double)>;

struct TaylorReport {
  double x = 0.0;
  double second_derivative_bound = 0.0;  // C = sup |mu''| on the window support
  double max_remainder_excess = 0.0;     // max(|r| - C |xi - x|^2), <= 0 when the bound holds
  double max_gradient_excess = 0.0;      // max(|r'| - C |xi - x|)
  double max_remainder = 0.0;
  std::size_t points = 0;
  bool holds = false;
};

/// r_x(xi) = mu(xi) - mu(x) - mu'(x)(xi - x) on the support of T_x g
/// (|xi - x| <= support_radius), sampled on the position lattice (d = 1).
TaylorReport taylor_remainder_probe(const Phase1d& mu, double x, const Grid& grid,
                                    double support_radius = 3.5);

using PhaseNd = std::function<double(std::span<const double>)>;

struct SmoothnessEntry {
  std::vector<int> multi_index;
  double sup = 0.0;
};

struct SmoothnessReport {
  int dim = 1;
  int l = 1;  // floor(d/2) + 1
  std::vector<SmoothnessEntry> entries;
  double bound = 0.0;
  bool all_bounded = false;
};

struct Annulus {
  double inner = 1.0;
  double outer = 8.0;
};

/// sup |d^beta mu| over inner <= |xi| <= outer for 2 <= |beta| <= order_max
/// (order_max = 0 means 2l), centered 4th-order differences with step h.
SmoothnessReport phase_smoothness_probe(const PhaseNd& mu, int dim, int order_max,
                                        const Annulus& annulus, double h, double bound,
                                        std::size_t samples_per_axis = 257);

// ---------------------------------------------------------------------------
// Operator norm probes

struct ProbeFunction {
  std::string name;
  SampledField field;
};

/// Dilated Gaussians e^{-pi lambda |x|^2}, lambda in {1/8, ..., 8}, plus
/// modulated, translated and chirped Gaussians.
std::vector<ProbeFunction> probe_family(const Grid& grid);

struct ProbeReport {
  std::string symbol;
  double p = 2.0;
  double q = 2.0;
  std::vector<std::string> functions;
  std::vector<double> ratios;
  double max_ratio = 0.0;
  GridInfo grid;
};

/// Lower bounds ||H_sigma f||_{M^{p,q}} / ||f||_{M^{p,q}} over a family, for
/// each requested (p, q).
std::vector<ProbeReport> operator_norm_probe(const Symbol& sigma,
                                             const std::vector<std::pair<double, double>>& pq,
                                             const std::vector<ProbeFunction>& family);

/// ||H f_lambda||_p / ||f_lambda||_p for sigma = e^{i t xi^2}, f = e^{-pi lambda x^2}, d = 1.
double lp_ratio_oracle(double t, double lambda, double p);

struct ContrastRow {
  double lambda = 0.0;
  double lp_ratio = 0.0;
  double lp_oracle = 0.0;
  double m11_ratio = 0.0;
};

struct ContrastReport {
  double t = 0.0;
  double p = 1.0;
  std::vector<ContrastRow> rows;
  bool lp_strictly_increasing = false;
  double m11_spread = 0.0;  // max / min of the modulation-norm ratios
};

/// L^p versus M^{1,1} ratios for e^{i t xi^2} on dilated Gaussians (d = 1).
ContrastReport lp_contrast_probe(const Grid& grid, double t, double p,
                                 const std::vector<double>& lambdas);

// ---------------------------------------------------------------------------
// Evolution equations

struct SchrodingerRow {
  std::string datum;
  double t = 0.0;
  double ratio = 0.0;
  double constant = 0.0;  // ratio / (t^2 + 4 pi^2)^{d/4}
  std::optional<double> refinement;
};

struct SchrodingerTable {
  double p = 2.0;
  double q = 2.0;
  std::vector<SchrodingerRow> rows;
  double fitted_constant = 0.0;  // smallest C with ratio <= C (t^2 + 4 pi^2)^{d/4}
  double variation = 0.0;        // max C_t / min C_t - 1 over rows with t > 0
};

SchrodingerTable schrodinger_conservation(const std::vector<ProbeFunction>& data, const Window& g,
                                          double p, double q, const std::vector<double>& t_list);

struct WaveRow {
  double t = 0.0;
  double solution_norm = 0.0;
  double data_norm = 0.0;  // ||f|| + ||g||
  double constant = 0.0;   // C(t) = solution_norm / data_norm
  std::optional<double> constant_refinement;
  double energy_drift = 0.0;
};

struct WaveTable {
  double p = 2.0;
  double q = 2.0;
  std::vector<WaveRow> rows;
};

WaveTable wave_conservation(const SampledField& f, const SampledField& g, const Window& window,
                            double p, double q, const std::vector<double>& t_list);

}  // namespace tfmult::verify
