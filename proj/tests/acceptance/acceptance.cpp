// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tfmult/verify.hpp"

using namespace tfmult;
using namespace tfmult::verify;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string sci(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", v);
  return buffer;
}

SampledField gaussian(const Grid& g, double lambda) {
  return sample(
      [lambda](std::span<const double> x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        return complex(std::exp(-kPi * lambda * r2));
      },
      g);
}

Outcome chirp_stft_closed_form() {
  double worst = 0.0;
  for (double t : {0.0, 0.5, 1.0, 2.0}) worst = std::max(worst, verify_chirp_stft(Grid(1, 32, 2048), t).max_abs_error);
  return {worst < 1e-6, "max |error| " + sci(worst) + " over t in {0, 0.5, 1, 2} (limit 1e-6)"};
}

Outcome amalgam_constant() {
  const std::vector<double> ts{0.5, 1.0, 2.0, 4.0};
  AmalgamOptions one_d;
  one_d.include_m1inf = false;
  double dev1 = 0.0;
  for (const auto& r : verify_amalgam_constants(Grid(1, 32, 2048), ts, one_d).rows) {
    dev1 = std::max(dev1, std::abs(r.w_measured / r.w_predicted - 1.0));
  }
  AmalgamOptions two_d;
  two_d.stft = StftOptions{8, 0.5};
  two_d.include_m1inf = false;
  two_d.tolerance = 0.05;
  double dev2 = 0.0;
  for (const auto& r : verify_amalgam_constants(Grid(2, 16, 256), ts, two_d).rows) {
    dev2 = std::max(dev2, std::abs(r.w_measured / r.w_predicted - 1.0));
  }
  return {dev1 <= 0.02 && dev2 <= 0.05,
          "max deviation d=1 " + sci(dev1) + " (limit 0.02), d=2 " + sci(dev2) +
              " (limit 0.05, L=16 N=256 stride 8)"};
}

Outcome m1inf_constant() {
  double dev = 0.0;
  bool present = true;
  for (const auto& r : verify_amalgam_constants(Grid(1, 32, 2048), {0.5, 1.0, 2.0, 4.0}).rows) {
    present = present && r.m1inf_measured.has_value();
    if (r.m1inf_measured) dev = std::max(dev, std::abs(*r.m1inf_measured / *r.m1inf_predicted - 1.0));
  }
  return {present && dev <= 0.02, "max deviation " + sci(dev) + " over t in {0.5, 1, 2, 4} (limit 0.02)"};
}

Outcome m_inf_1_divergence() {
  const DivergenceReport r = verify_m_inf_1_divergence(Grid(1, 16, 512), 1.0, 2);
  std::string values;
  for (const auto& row : r.rows) values += (values.empty() ? "" : ", ") + sci(row.value);
  return {r.strictly_increasing && r.min_growth >= 1.5,
          "values " + values + " for L = 16, 32, 64; min growth " + sci(r.min_growth) + " (limit 1.5)"};
}

Outcome dyadic_series() {
  bool ok = true;
  std::string detail;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const DyadicSeriesReport s = dyadic_fl1_series(alpha, 40, 20, Grid(1, 32, 2048));
    const bool row_ok = std::isfinite(s.series_bound) && s.series_bound >= s.direct_fl1 &&
                        s.cauchy_index && *s.cauchy_index <= 40 && s.direct_refinement &&
                        *s.direct_refinement < 0.01;
    ok = ok && row_ok;
    detail += "a=" + sci(alpha) + ": bound " + sci(s.series_bound) + " >= direct " + sci(s.direct_fl1) +
              ", Cauchy at k=" + (s.cauchy_index ? std::to_string(*s.cauchy_index) : "none") +
              ", refinement " + (s.direct_refinement ? sci(*s.direct_refinement) : "none") + (alpha < 2.0 ? "; " : "");
  }
  return {ok, detail};
}

Outcome linear_phase() {
  const auto trials = linear_phase_trials(Grid(1, 32, 1024), 50, kDefaultSeed);
  int failures = 0;
  double worst = 0.0;
  for (const auto& t : trials) {
    worst = std::max(worst, t.result.relative_difference);
    failures += t.result.relative_difference > 1e-12;
  }
  return {trials.size() == 50 && failures == 0,
          std::to_string(trials.size()) + " seeded cases, " + std::to_string(failures) +
              " failures, max relative difference " + sci(worst) + " (limit 1e-12)"};
}

Outcome boundedness_probes() {
  const std::vector<std::pair<double, double>> pq{{1, 1}, {2, 2}, {kInf, 1}, {1, kInf}};
  const Grid coarse(1, 32, 1024), fine(1, 32, 2048);
  const auto family_coarse = probe_family(coarse);
  const auto family_fine = probe_family(fine);
  double worst = 0.0, largest = 0.0;
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    const auto a = operator_norm_probe(symbol_unimodular(coarse, alpha, 1.0), pq, family_coarse);
    const auto b = operator_norm_probe(symbol_unimodular(fine, alpha, 1.0), pq, family_fine);
    for (std::size_t i = 0; i < pq.size(); ++i) {
      worst = std::max(worst, std::abs(b[i].max_ratio / a[i].max_ratio - 1.0));
      largest = std::max(largest, b[i].max_ratio);
    }
  }
  return {worst < 0.05 && std::isfinite(largest),
          "max N->2N change " + sci(worst) + " (limit 0.05), largest ratio " + sci(largest)};
}

Outcome lp_contrast() {
  const ContrastReport c = lp_contrast_probe(Grid(1, 32, 2048), 1.0, 1.0, {1.0, 2.0, 4.0, 8.0});
  std::string lp;
  for (const auto& r : c.rows) lp += (lp.empty() ? "" : ", ") + sci(r.lp_ratio);
  return {c.lp_strictly_increasing && c.m11_spread < 3.0,
          "L1 ratios " + lp + "; M^{1,1} max/min " + sci(c.m11_spread) + " (limit 3)"};
}

Outcome schrodinger() {
  const Grid g(1, 32, 1024);
  const std::vector<ProbeFunction> data{{"gaussian", gaussian(g, 1.0)}, {"dilated", gaussian(g, 2.0)}};
  const std::vector<double> ts{0.5, 1.0, 2.0, 4.0};
  bool ok = true;
  std::string detail;
  for (auto [p, q] : std::vector<std::pair<double, double>>{{1, kInf}, {1, 1}, {2, 2}}) {
    const SchrodingerTable t = schrodinger_conservation(data, gaussian_window(g), p, q, ts);
    bool bounded = true;
    double isometry = 0.0;
    for (const auto& r : t.rows) {
      bounded = bounded && r.ratio <= t.fitted_constant * std::pow(r.t * r.t + 4 * kPi * kPi, 0.25) * (1 + 1e-12);
      isometry = std::max(isometry, std::abs(r.ratio - 1.0));
    }
    ok = ok && bounded && t.variation <= 0.10;
    detail += "(" + sci(p) + "," + sci(q) + "): C " + sci(t.fitted_constant) + ", variation " + sci(t.variation);
    if (p == 2.0 && q == 2.0) {
      ok = ok && isometry <= 1e-10;
      detail += ", |ratio-1| " + sci(isometry);
    }
    detail += "; ";
  }
  return {ok, detail + "limits 0.10 and 1e-10"};
}

Outcome wave() {
  const Grid g(1, 32, 1024);
  bool ok = true;
  double worst_ref = 0.0, worst_drift = 0.0;
  for (auto [p, q] : std::vector<std::pair<double, double>>{{1, 1}, {2, 2}}) {
    const WaveTable t = wave_conservation(gaussian(g, 1.0), gaussian(g, 2.0), gaussian_window(g), p, q, {0.5, 1.0, 2.0});
    for (const auto& r : t.rows) {
      ok = ok && std::isfinite(r.constant) && r.constant_refinement.has_value();
      worst_ref = std::max(worst_ref, r.constant_refinement.value_or(kInf));
      worst_drift = std::max(worst_drift, r.energy_drift);
    }
  }
  ok = ok && worst_ref < 0.01 && worst_drift <= 1e-10;
  return {ok, "max C(t) refinement change " + sci(worst_ref) + " (limit 0.01), max energy drift " +
                  sci(worst_drift) + " (limit 1e-10)"};
}

// Seeded property suite for the operator laws.
Outcome algebra_laws() {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double a, double b) { return a + (b - a) * unit(rng); };

  auto random_grid = [&] {
    return unit(rng) < 0.7 ? Grid(1, 16, unit(rng) < 0.5 ? 128 : 256) : Grid(2, 8, 32);
  };
  auto random_field = [&](const Grid& g) {
    struct Packet {
      double c0, c1, width, freq, amp;
    };
    std::vector<Packet> packets;
    for (int i = 0; i < 3; ++i) {
      packets.push_back({uniform(-3, 3), uniform(-2, 2), uniform(0.5, 3.0), uniform(-2, 2), uniform(-1, 1)});
    }
    return sample(
        [packets](std::span<const double> x) {
          complex acc(0.0);
          for (const auto& p : packets) {
            double r2 = (x[0] - p.c0) * (x[0] - p.c0);
            if (x.size() > 1) r2 += (x[1] - p.c1) * (x[1] - p.c1);
            acc += p.amp * std::exp(-kPi * p.width * r2) * std::polar(1.0, 2.0 * kPi * p.freq * x[0]);
          }
          return acc;
        },
        g);
  };
  auto random_symbol = [&](const Grid& g, bool unimodular_only) -> Symbol {
    const int family = static_cast<int>(unit(rng) * (unimodular_only ? 3 : 4));
    switch (family) {
      case 0: return symbol_unimodular(g, uniform(0, 2), uniform(-3, 3), unit(rng) < 0.5 ? 1.0 : 2.0);
      case 1: return symbol_gaussian_chirp(g, uniform(-2, 2));
      case 2: return symbol_piecewise(g, std::vector<double>(static_cast<std::size_t>(g.dim()), uniform(0.3, 2)), random_signs(rng()));
      default: {
        const double alpha = uniform(0.2, 1.0);
        return symbol_sin_singular(g, alpha, alpha * uniform(0.1, 1.0));
      }
    }
  };
  auto relative_gap = [](const SampledField& a, const SampledField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      num = std::max(num, std::abs(a.values[k] - b.values[k]));
      den = std::max(den, std::abs(b.values[k]));
    }
    return den == 0.0 ? num : num / den;
  };

  constexpr int kPerLaw = 80;
  int cases = 0, failures = 0;
  double worst[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < kPerLaw; ++i) {
    const Grid g = random_grid();
    const SampledField f = random_field(g);
    const Symbol a = random_symbol(g, false);
    const Symbol b = random_symbol(g, false);
    const double composition = relative_gap(apply_multiplier(a, apply_multiplier(b, f)), apply_multiplier(a * b, f));

    const double s = uniform(-3, 3), t = uniform(-3, 3);
    const double group = relative_gap(schrodinger_propagate(schrodinger_propagate(f, s).u, t).u,
                                      schrodinger_propagate(f, s + t).u);

    const Symbol u = random_symbol(g, true);
    const double isometry = std::abs(l2_norm(apply_multiplier(u, f)) / l2_norm(f) - 1.0);

    const double gaps[3] = {composition, group, isometry};
    for (int k = 0; k < 3; ++k) {
      worst[k] = std::max(worst[k], gaps[k]);
      failures += gaps[k] > 1e-10;
      ++cases;
    }
  }
  return {cases >= 200 && failures == 0,
          std::to_string(cases) + " seeded cases, " + std::to_string(failures) + " failures; worst composition " +
              sci(worst[0]) + ", group law " + sci(worst[1]) + ", isometry " + sci(worst[2]) + " (limit 1e-10)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"chirp STFT closed form", chirp_stft_closed_form},
      {"exact W(FL1,linf) constant of the chirp", amalgam_constant},
      {"exact M^{1,inf} constant of the chirp", m1inf_constant},
      {"M^{inf,1} divergence of the chirp", m_inf_1_divergence},
      {"dyadic FL1 series machinery", dyadic_series},
      {"linear-phase invariance", linear_phase},
      {"boundedness probes under refinement", boundedness_probes},
      {"L^p versus M^{1,1} contrast", lp_contrast},
      {"Schrodinger conservation", schrodinger},
      {"wave conservation", wave},
      {"algebra and group laws", algebra_laws},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.passed;
    std::printf("%s %2zu %s: %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
