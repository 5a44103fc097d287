#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "tfmult/verify.hpp"

namespace tfmult::verify {
namespace {

constexpr double kPi = std::numbers::pi;

// Centered fourth-order stencils for derivatives of order 0..4, offsets -3..3.
constexpr std::array<std::array<double, 7>, 5> kStencils{{
    {0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0},
    {0.0, 1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0, 0.0},
    {0.0, -1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0, 0.0},
    {1.0 / 8.0, -1.0, 13.0 / 8.0, 0.0, -13.0 / 8.0, 1.0, -1.0 / 8.0},
    {-1.0 / 6.0, 2.0, -13.0 / 2.0, 28.0 / 3.0, -13.0 / 2.0, 2.0, -1.0 / 6.0},
}};

double derivative_1d(const Phase1d& mu, double x, int order, double h) {
  double acc = 0.0;
  for (int o = -3; o <= 3; ++o) {
    const double c = kStencils[static_cast<std::size_t>(order)][static_cast<std::size_t>(o + 3)];
    if (c != 0.0) acc += c * mu(x + o * h);
  }
  return acc / std::pow(h, order);
}

// Mixed partial d^beta mu at xi as a tensor product of 1D stencils.
double partial(const PhaseNd& mu, std::span<const double> xi, std::span<const int> beta, double h) {
  const std::size_t dim = xi.size();
  std::vector<double> point(xi.begin(), xi.end());
  std::vector<int> offset(dim, -3);
  int total_order = 0;
  for (int b : beta) total_order += b;
  double acc = 0.0;
  while (true) {
    double weight = 1.0;
    for (std::size_t a = 0; a < dim && weight != 0.0; ++a) {
      weight *= kStencils[static_cast<std::size_t>(beta[a])][static_cast<std::size_t>(offset[a] + 3)];
    }
    if (weight != 0.0) {
      for (std::size_t a = 0; a < dim; ++a) point[a] = xi[a] + offset[a] * h;
      acc += weight * mu(point);
    }
    std::size_t a = dim;
    while (a-- > 0) {
      if (++offset[a] <= 3) break;
      offset[a] = -3;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return acc / std::pow(h, total_order);
}

void multi_indices(int dim, int order, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == dim - 1) {
    current.push_back(order);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int b = order; b >= 0; --b) {
    current.push_back(b);
    multi_indices(dim, order - b, current, out);
    current.pop_back();
  }
}

SampledField windowed(const SampledField& sigma, const Window& g, std::span<const long long> shift) {
  const SampledField tg = translate(g.field, shift);
  SampledField out(sigma.grid, Domain::position);
  for (std::size_t k = 0; k < out.size(); ++k) out.values[k] = sigma.values[k] * tg.values[k];
  return out;
}

PhaseInvarianceResult compare(double before, double after) {
  const double diff = before == 0.0 ? std::abs(after) : std::abs(after - before) / before;
  return {before, after, diff};
}

void require_position_pair(const SampledField& sigma, const Window& g) {
  if (!(sigma.grid == g.field.grid) || sigma.domain != Domain::position ||
      g.field.domain != Domain::position) {
    throw GridMismatch("linear_phase_invariance: symbol and window must share a position grid");
  }
}

}  // namespace

PhaseInvarianceResult linear_phase_invariance(const SampledField& sigma, const Window& g,
                                              std::span<const long long> shift, double a,
                                              std::span<const long long> m) {
  require_position_pair(sigma, g);
  const double before = fl1_norm(windowed(sigma, g, shift), false).value;
  SampledField rotated = modulate(sigma, m);
  const complex global(std::cos(a), std::sin(a));
  for (auto& v : rotated.values) v *= global;
  const double after = fl1_norm(windowed(rotated, g, shift), false).value;
  return compare(before, after);
}

PhaseInvarianceResult linear_phase_invariance(const SampledField& sigma, const Window& g,
                                              std::span<const long long> shift, double a,
                                              std::span<const double> b) {
  require_position_pair(sigma, g);
  const Grid& grid = sigma.grid;
  if (b.size() != static_cast<std::size_t>(grid.dim())) {
    throw ParameterError("linear_phase_invariance: b has wrong dimension");
  }
  const double before = fl1_norm(windowed(sigma, g, shift), false).value;
  SampledField rotated = sigma;
  std::vector<double> xi(b.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid.position_of(k, xi);
    double phase = a;
    for (std::size_t i = 0; i < xi.size(); ++i) phase += xi[i] * b[i];
    rotated.values[k] *= complex(std::cos(phase), std::sin(phase));
  }
  const double after = fl1_norm(windowed(rotated, g, shift), false).value;
  return compare(before, after);
}

std::vector<PhaseTrial> linear_phase_trials(const Grid& grid, int count, std::uint64_t seed) {
  if (grid.dim() != 1) throw ParameterError("linear_phase_trials draws one-dimensional cases");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto n = static_cast<long long>(grid.samples_per_axis());
  std::uniform_int_distribution<long long> shift_dist(-n / 4, n / 4);
  std::uniform_int_distribution<long long> m_dist(-n / 8, n / 8);
  const Window g = gaussian_window(grid);

  std::vector<PhaseTrial> trials;
  trials.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    SymbolDescriptor d;
    switch (i % 4) {
      case 0:
        d = GaussianChirp{0.1 + 1.9 * unit(rng)};
        break;
      case 1:
        d = Unimodular{2.0 * unit(rng), 0.5 + 1.5 * unit(rng), 1.0};
        break;
      case 2: {
        const double alpha = 0.2 + 0.8 * unit(rng);
        d = SinSingular{alpha, alpha * (0.1 + 0.9 * unit(rng))};
        break;
      }
      default:
        d = Piecewise{{0.5 + 1.5 * unit(rng)}, random_signs(rng())};
        break;
    }
    PhaseTrial trial;
    trial.symbol = describe(d);
    trial.shift = shift_dist(rng);
    trial.a = 2.0 * kPi * unit(rng);
    trial.m = m_dist(rng);
    const SampledField sigma = symbol_field(grid, d);
    const std::array<long long, 1> shift{trial.shift};
    const std::array<long long, 1> m{trial.m};
    trial.result = linear_phase_invariance(sigma, g, shift, trial.a, m);
    trials.push_back(std::move(trial));
  }
  return trials;
}

TaylorReport taylor_remainder_probe(const Phase1d& mu, double x, const Grid& grid,
                                    double support_radius) {
  if (grid.dim() != 1) throw ParameterError("taylor_remainder_probe is one-dimensional");
  constexpr double kStep = 1e-3;
  TaylorReport report;
  report.x = x;
  const double mu_x = mu(x);
  const double slope_x = derivative_1d(mu, x, 1, kStep);

  std::vector<double> support;
  for (std::size_t i = 0; i < grid.samples_per_axis(); ++i) {
    const double xi = grid.position(i);
    if (std::abs(xi - x) <= support_radius) support.push_back(xi);
  }
  for (double xi : support) {
    report.second_derivative_bound =
        std::max(report.second_derivative_bound, std::abs(derivative_1d(mu, xi, 2, kStep)));
  }
  const double c = report.second_derivative_bound;
  const double tolerance = 1e-7 * (1.0 + c);
  report.max_remainder_excess = -kInf;
  report.max_gradient_excess = -kInf;
  for (double xi : support) {
    const double u = xi - x;
    const double r = mu(xi) - mu_x - slope_x * u;
    const double dr = derivative_1d(mu, xi, 1, kStep) - slope_x;
    report.max_remainder = std::max(report.max_remainder, std::abs(r));
    report.max_remainder_excess = std::max(report.max_remainder_excess, std::abs(r) - c * u * u);
    report.max_gradient_excess = std::max(report.max_gradient_excess, std::abs(dr) - c * std::abs(u));
  }
  report.points = support.size();
  report.holds = report.points > 0 && report.max_remainder_excess <= tolerance &&
                 report.max_gradient_excess <= tolerance;
  return report;
}

SmoothnessReport phase_smoothness_probe(const PhaseNd& mu, int dim, int order_max,
                                        const Annulus& annulus, double h, double bound,
                                        std::size_t samples_per_axis) {
  if (dim < 1 || dim > 3) throw ParameterError("phase_smoothness_probe supports d = 1, 2, 3");
  if (!(h > 0.0)) throw ParameterError("finite-difference step must be positive");
  if (!(annulus.inner >= 0.0) || !(annulus.outer > annulus.inner)) {
    throw ParameterError("annulus needs 0 <= inner < outer");
  }
  if (samples_per_axis < 2) throw ParameterError("phase_smoothness_probe needs >= 2 samples per axis");

  SmoothnessReport report;
  report.dim = dim;
  report.l = dim / 2 + 1;
  if (order_max == 0) order_max = 2 * report.l;
  if (order_max < 2 || order_max > 4) {
    throw ParameterError("phase_smoothness_probe supports derivative orders 2..4");
  }
  report.bound = bound;

  // Sample points: a regular lattice on [-outer, outer]^d inside the annulus.
  const auto d = static_cast<std::size_t>(dim);
  std::vector<std::vector<double>> points;
  std::vector<std::size_t> digit(d, 0);
  const double spacing = 2.0 * annulus.outer / static_cast<double>(samples_per_axis - 1);
  while (true) {
    std::vector<double> p(d);
    double r2 = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      p[a] = -annulus.outer + spacing * static_cast<double>(digit[a]);
      r2 += p[a] * p[a];
    }
    const double r = std::sqrt(r2);
    // A relative slack keeps lattice points that sit on the boundary circles.
    if (r >= annulus.inner * (1.0 - 1e-12) && r <= annulus.outer * (1.0 + 1e-12)) {
      points.push_back(std::move(p));
    }
    std::size_t a = d;
    while (a-- > 0) {
      if (++digit[a] < samples_per_axis) break;
      digit[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }

  report.all_bounded = true;
  for (int order = 2; order <= order_max; ++order) {
    std::vector<std::vector<int>> betas;
    std::vector<int> current;
    multi_indices(dim, order, current, betas);
    for (const auto& beta : betas) {
      SmoothnessEntry entry{beta, 0.0};
      for (const auto& p : points) entry.sup = std::max(entry.sup, std::abs(partial(mu, p, beta, h)));
      report.all_bounded = report.all_bounded && entry.sup <= bound;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace tfmult::verify
