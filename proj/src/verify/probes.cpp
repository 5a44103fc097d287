#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tfmult/verify.hpp"

namespace tfmult::verify {
namespace {

constexpr double kPi = std::numbers::pi;

double squared(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

std::string labelled(const char* kind, const char* parameter, double value) {
  std::ostringstream out;
  out << kind << "(" << parameter << "=" << value << ")";
  return out.str();
}

double lp_norm(const SampledField& f, double p) {
  std::vector<double> terms(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) terms[k] = std::pow(std::abs(f.values[k]), p);
  return std::pow(pairwise_sum(terms) * std::pow(f.grid.dx(), f.grid.dim()), 1.0 / p);
}

}  // namespace

std::vector<ProbeFunction> probe_family(const Grid& grid) {
  std::vector<ProbeFunction> family;
  for (double lambda : {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    family.push_back({labelled("dilated", "lambda", lambda),
                      sample([lambda](std::span<const double> x) {
                        return complex(std::exp(-kPi * lambda * squared(x)));
                      }, grid)});
  }
  for (double eta : {1.0, 3.0}) {
    family.push_back({labelled("modulated", "eta", eta),
                      sample([eta](std::span<const double> x) {
                        const double phase = 2.0 * kPi * eta * x[0];
                        return std::exp(-kPi * squared(x)) * complex(std::cos(phase), std::sin(phase));
                      }, grid)});
  }
  for (double u : {2.0, -3.0}) {
    family.push_back({labelled("translated", "u", u),
                      sample([u](std::span<const double> x) {
                        std::vector<double> y(x.begin(), x.end());
                        y[0] -= u;
                        return complex(std::exp(-kPi * squared(y)));
                      }, grid)});
  }
  for (double c : {1.0, 2.0}) {
    family.push_back({labelled("chirped", "c", c),
                      sample([c](std::span<const double> x) {
                        const double r2 = squared(x);
                        const double phase = kPi * c * r2;
                        return std::exp(-kPi * r2) * complex(std::cos(phase), std::sin(phase));
                      }, grid)});
  }
  return family;
}

std::vector<ProbeReport> operator_norm_probe(const Symbol& sigma,
                                             const std::vector<std::pair<double, double>>& pq,
                                             const std::vector<ProbeFunction>& family) {
  for (const auto& [p, q] : pq) {
    check_exponent(p, "p");
    check_exponent(q, "q");
  }
  const Window g = gaussian_window(sigma.grid);
  std::vector<ProbeReport> reports(pq.size());
  for (std::size_t i = 0; i < pq.size(); ++i) {
    reports[i].symbol = describe(sigma.descriptor);
    reports[i].p = pq[i].first;
    reports[i].q = pq[i].second;
    reports[i].grid = GridInfo{sigma.grid.dim(), sigma.grid.length(),
                               sigma.grid.samples_per_axis(), 1, 1.0};
  }
  for (const auto& member : family) {
    const SampledField out = apply_multiplier(sigma, member.field);
    const auto before = modulation_norms(member.field, g, pq);
    const auto after = modulation_norms(out, g, pq);
    for (std::size_t i = 0; i < pq.size(); ++i) {
      if (before[i] == 0.0) throw ParameterError("probe family member " + member.name + " is zero");
      reports[i].functions.push_back(member.name);
      reports[i].ratios.push_back(after[i] / before[i]);
    }
  }
  for (auto& r : reports) {
    r.max_ratio = r.ratios.empty() ? 0.0 : *std::max_element(r.ratios.begin(), r.ratios.end());
  }
  return reports;
}

double lp_ratio_oracle(double t, double lambda, double p) {
  // f = e^{-pi lambda x^2}, f^ = lambda^{-1/2} e^{-pi xi^2 / lambda}. With
  // a = pi/lambda - i t,  H f(x) = lambda^{-1/2} (pi/a)^{1/2} e^{-pi^2 x^2 / a},
  // so |H f| = A e^{-c x^2} with A = (pi/(lambda |a|))^{1/2}, c = pi^3/(lambda |a|^2).
  const double a2 = (kPi / lambda) * (kPi / lambda) + t * t;
  const double amplitude = std::sqrt(kPi / (lambda * std::sqrt(a2)));
  const double c = kPi * kPi * kPi / (lambda * a2);
  const double out = amplitude * std::pow(kPi / (p * c), 1.0 / (2.0 * p));
  const double in = std::pow(p * lambda, -1.0 / (2.0 * p));
  return out / in;
}

ContrastReport lp_contrast_probe(const Grid& grid, double t, double p,
                                 const std::vector<double>& lambdas) {
  if (grid.dim() != 1) throw ParameterError("lp_contrast_probe is one-dimensional");
  check_exponent(p, "p");
  if (std::isinf(p)) throw ParameterError("lp_contrast_probe needs finite p");
  ContrastReport report;
  report.t = t;
  report.p = p;
  const Symbol sigma = symbol_unimodular(grid, 2.0, t);
  const Window g = gaussian_window(grid);
  const NormOptions no_refine{{}, false};
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw ParameterError("dilation parameters must be positive");
    const SampledField f = sample(
        [lambda](std::span<const double> x) { return complex(std::exp(-kPi * lambda * x[0] * x[0])); },
        grid);
    const SampledField hf = apply_multiplier(sigma, f);
    ContrastRow row;
    row.lambda = lambda;
    row.lp_ratio = lp_norm(hf, p) / lp_norm(f, p);
    row.lp_oracle = lp_ratio_oracle(t, lambda, p);
    row.m11_ratio = modulation_norm(hf, g, 1.0, 1.0, no_refine).value /
                    modulation_norm(f, g, 1.0, 1.0, no_refine).value;
    report.rows.push_back(row);
  }
  report.lp_strictly_increasing = !report.rows.empty();
  double lo = kInf, hi = 0.0;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    lo = std::min(lo, report.rows[i].m11_ratio);
    hi = std::max(hi, report.rows[i].m11_ratio);
    if (i > 0) {
      report.lp_strictly_increasing =
          report.lp_strictly_increasing && report.rows[i].lp_ratio > report.rows[i - 1].lp_ratio;
    }
  }
  report.m11_spread = report.rows.empty() ? 0.0 : hi / lo;
  return report;
}

}  // namespace tfmult::verify
