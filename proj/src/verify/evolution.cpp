#include <algorithm>
#include <cmath>
#include <numbers>

#include "tfmult/verify.hpp"

namespace tfmult::verify {
namespace {

double norm_of(const SampledField& f, const Window& g, double p, double q) {
  return modulation_norm(f, g, p, q, NormOptions{{}, false}).value;
}

Window coarse(const Window& g) { return Window{decimate(g.field), g.kind, g.params}; }

double relative(double fine, double rough) {
  return fine == 0.0 ? std::abs(rough) : std::abs(fine - rough) / std::abs(fine);
}

}  // namespace

SchrodingerTable schrodinger_conservation(const std::vector<ProbeFunction>& data, const Window& g,
                                          double p, double q, const std::vector<double>& t_list) {
  check_exponent(p, "p");
  check_exponent(q, "q");
  SchrodingerTable table;
  table.p = p;
  table.q = q;
  const Window g_coarse = coarse(g);
  double lo = kInf, hi = 0.0;
  for (const auto& datum : data) {
    const double dim = static_cast<double>(datum.field.grid.dim());
    const SampledField f_coarse = decimate(datum.field);
    const double base = norm_of(datum.field, g, p, q);
    const double base_coarse = norm_of(f_coarse, g_coarse, p, q);
    if (base == 0.0) throw ParameterError("initial datum " + datum.name + " is zero");
    for (double t : t_list) {
      SchrodingerRow row;
      row.datum = datum.name;
      row.t = t;
      row.ratio = norm_of(schrodinger_propagate(datum.field, t).u, g, p, q) / base;
      const double ratio_coarse =
          norm_of(schrodinger_propagate(f_coarse, t).u, g_coarse, p, q) / base_coarse;
      row.refinement = relative(row.ratio, ratio_coarse);
      row.constant =
          row.ratio / std::pow(t * t + 4.0 * std::numbers::pi * std::numbers::pi, dim / 4.0);
      lo = std::min(lo, row.constant);
      hi = std::max(hi, row.constant);
      table.rows.push_back(std::move(row));
    }
  }
  table.fitted_constant = hi;
  table.variation = table.rows.empty() ? 0.0 : hi / lo - 1.0;
  return table;
}

WaveTable wave_conservation(const SampledField& f, const SampledField& g, const Window& window,
                            double p, double q, const std::vector<double>& t_list) {
  check_exponent(p, "p");
  check_exponent(q, "q");
  WaveTable table;
  table.p = p;
  table.q = q;
  const Window w_coarse = coarse(window);
  const SampledField f_coarse = decimate(f);
  const SampledField g_coarse = decimate(g);
  const double data = norm_of(f, window, p, q) + norm_of(g, window, p, q);
  const double data_coarse = norm_of(f_coarse, w_coarse, p, q) + norm_of(g_coarse, w_coarse, p, q);
  const double energy0 = wave_energy(f, g);
  for (double t : t_list) {
    const PropagatorState state = wave_propagate(f, g, t);
    WaveRow row;
    row.t = t;
    row.solution_norm = norm_of(state.u, window, p, q);
    row.data_norm = data;
    row.constant = data == 0.0 ? 0.0 : row.solution_norm / data;
    if (data_coarse != 0.0) {
      const PropagatorState rough = wave_propagate(f_coarse, g_coarse, t);
      row.constant_refinement = relative(row.constant, norm_of(rough.u, w_coarse, p, q) / data_coarse);
    }
    const double energy = wave_energy(state.u, *state.v);
    row.energy_drift = relative(energy0, energy);
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace tfmult::verify
