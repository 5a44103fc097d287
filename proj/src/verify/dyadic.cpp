#include <cmath>

#include "tfmult/verify.hpp"

namespace tfmult::verify {
namespace {

constexpr double kCauchyTolerance = 1e-6;

double radius_of(std::span<const double> xi) {
  double s = 0.0;
  for (double v : xi) s += v * v;
  return std::sqrt(s);
}

void require_annulus_fits(const Grid& grid) {
  // psi lives on 1 <= |xi| <= 4; keep a margin to the periodic seam.
  if (!(grid.length() / 2.0 > 5.0)) {
    throw ParameterError("dyadic experiments need a box with L/2 > 5 to hold |xi| <= 4");
  }
}

double fl1_of(const Grid& grid, const PointFunction& fn) {
  return fl1_norm(sample(fn, grid), false).value;
}

// log(k!) via lgamma so large k never overflows.
double inverse_factorial_weight(double value, int k) {
  if (value == 0.0) return 0.0;
  return std::exp(std::log(value) - std::lgamma(static_cast<double>(k) + 1.0));
}

}  // namespace

DyadicSeriesReport dyadic_fl1_series(double alpha, int K, int J, const Grid& grid) {
  if (!(alpha > 0.0) || alpha > 2.0) throw ParameterError("dyadic series needs alpha in (0, 2]");
  if (K < 10) throw ParameterError("dyadic series needs K >= 10");
  if (J < 5) throw ParameterError("dyadic series needs J >= 5");
  require_annulus_fits(grid);

  DyadicSeriesReport report;
  report.alpha = alpha;
  report.K = K;
  report.J = J;

  double partial = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double kd = static_cast<double>(k);
    DyadicTerm term;
    term.k = k;
    term.phi_direct = fl1_of(grid, [&](std::span<const double> xi) {
      const double r = radius_of(xi);
      return complex(std::pow(r, kd * alpha) * bump_value(r));
    });
    if (k == 0) {
      // phi_0 = chi; the dyadic sum of psi(2^j .) has no decay at k = 0.
      term.phi_bound = term.phi_direct;
    } else {
      term.psi_hat_l1 = fl1_of(grid, [&](std::span<const double> xi) {
        const double r = radius_of(xi);
        return complex(std::pow(r, kd * alpha) * annulus_value(r));
      });
      // ||psi_k(2^j .)||_{FL^1} does not depend on j, so
      // ||phi_k|| <= sum_{j>=1} 2^{-k j alpha} ||psi_k^||_1.
      const double ratio = std::exp2(-kd * alpha);
      double scale = 0.0;
      double weight = 1.0;
      for (int j = 1; j <= J; ++j) {
        weight *= ratio;
        scale += weight;
      }
      const double tail = weight * ratio / (1.0 - ratio);
      term.phi_bound = (scale + tail) * term.psi_hat_l1;
    }
    const double increment = inverse_factorial_weight(term.phi_bound, k);
    partial += increment;
    term.partial_sum = partial;
    if (!report.cauchy_index && k > 0 && increment < kCauchyTolerance * partial) {
      report.cauchy_index = k;
    }
    report.per_k.push_back(term);
  }
  report.series_bound = partial;

  const NormReport direct = fl1_norm(sample(
      [&](std::span<const double> xi) {
        const double r = radius_of(xi);
        const double phase = std::pow(r, alpha);
        return complex(std::cos(phase), std::sin(phase)) * bump_value(r);
      },
      grid));
  report.direct_fl1 = direct.value;
  report.direct_refinement = direct.refinement_estimate;
  return report;
}

SinSingularReport verify_sin_singular_fl1(double alpha, double delta, const Grid& grid, int terms) {
  if (!(delta > 0.0) || !(delta <= alpha) || !(alpha <= 1.0)) {
    throw ParameterError("sin_singular FL^1 check needs 0 < delta <= alpha <= 1");
  }
  if (terms < 1) throw ParameterError("sin_singular FL^1 check needs at least one term");
  require_annulus_fits(grid);

  SinSingularReport report;
  report.alpha = alpha;
  report.delta = delta;
  const SinSingular descriptor{alpha, delta};
  const std::vector<double> origin(static_cast<std::size_t>(grid.dim()), 0.0);
  report.value_at_origin = evaluate(descriptor, origin).real();

  const NormReport direct = fl1_norm(sample(
      [&](std::span<const double> xi) { return evaluate(descriptor, xi) * bump_value(radius_of(xi)); },
      grid));
  report.direct_fl1 = direct.value;
  report.direct_refinement = direct.refinement_estimate;

  double partial = 0.0;
  for (int k = 0; k < terms; ++k) {
    const int order = 2 * k + 1;
    const double exponent = static_cast<double>(order) * alpha - delta;
    const double norm = fl1_of(grid, [&](std::span<const double> xi) {
      const double r = radius_of(xi);
      return complex(std::pow(r, exponent) * bump_value(r));
    });
    const double increment = inverse_factorial_weight(norm, order);
    partial += increment;
    report.partial_sums.push_back(partial);
    if (!report.cauchy_index && k > 0 && increment < kCauchyTolerance * partial) {
      report.cauchy_index = k;
    }
  }
  return report;
}

}  // namespace tfmult::verify
