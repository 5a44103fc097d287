#include "tfmult/tf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tfmult {
namespace {

constexpr double kPi = std::numbers::pi;

double smooth_step_h(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

double norm_of(std::span<const double> point) {
  double s = 0.0;
  for (double v : point) s += v * v;
  return std::sqrt(s);
}

Window radial_window(const Grid& grid, Domain domain, WindowKind kind, double (*profile)(double)) {
  auto field = sample([profile](std::span<const double> p) { return complex(profile(norm_of(p))); },
                      grid, domain);
  return Window{std::move(field), kind, {}};
}

void require_same_grid(const SampledField& a, const SampledField& b, const char* what) {
  if (!(a.grid == b.grid) || a.domain != b.domain) {
    throw GridMismatch(std::string(what) + ": operands live on different grids");
  }
}

double power(double v, double e) {
  if (e == 1.0) return v;
  if (e == 2.0) return v * v;
  return std::pow(v, e);
}

double root(double v, double e) {
  if (e == 1.0) return v;
  if (e == 2.0) return std::sqrt(v);
  return std::pow(v, 1.0 / e);
}

GridInfo info_of(const Grid& grid, const StftOptions& options) {
  return GridInfo{grid.dim(), grid.length(), grid.samples_per_axis(), options.stride,
                  options.interior};
}

StftOptions coarse_options(StftOptions options) {
  options.stride = std::max<std::size_t>(1, options.stride / 2);
  return options;
}

Window decimate_window(const Window& g) {
  return Window{decimate(g.field), g.kind, g.params};
}

double relative_change(double fine, double coarse) {
  if (fine == 0.0) return coarse == 0.0 ? 0.0 : kInf;
  return std::abs(fine - coarse) / std::abs(fine);
}

// Runs a streamed mixed norm of V_g f and, if requested, the same on
// decimated inputs.
NormReport streamed_norm(const SampledField& f, const Window& g, double p, double q,
                         NormOrder order, const NormOptions& options) {
  check_exponent(p, "p");
  check_exponent(q, "q");
  auto evaluate = [&](const SampledField& ff, const Window& gg, const StftOptions& so) {
    MixedNormAccumulator acc(ff.grid, p, q, order, so.stride);
    for_each_stft_row(ff, gg, so,
                      [&](std::size_t, std::size_t, std::span<const complex> row) { acc.add_row(row); });
    return acc.value();
  };

  NormReport report;
  report.p = p;
  report.q = q;
  report.order = order;
  report.grid = info_of(f.grid, options.stft);
  report.value = evaluate(f, g, options.stft);
  if (options.refinement) {
    if (f.grid.samples_per_axis() >= 16) {
      const double coarse =
          evaluate(decimate(f), decimate_window(g), coarse_options(options.stft));
      report.refinement_estimate = relative_change(report.value, coarse);
    } else {
      report.warnings.emplace_back("grid too small for a half-resolution recompute");
    }
  }
  return report;
}

}  // namespace

double bump_value(double radius) {
  const double r = std::abs(radius);
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double a = smooth_step_h(2.0 - r);
  const double b = smooth_step_h(r - 1.0);
  return a / (a + b);
}

double annulus_value(double radius) { return bump_value(radius / 2.0) - bump_value(radius); }

Window gaussian_window(const Grid& grid, Domain domain) {
  auto field = sample(
      [](std::span<const double> p) {
        double s = 0.0;
        for (double v : p) s += v * v;
        return complex(std::exp(-kPi * s));
      },
      grid, domain);
  return Window{std::move(field), WindowKind::gaussian, {}};
}

Window bump_chi(const Grid& grid, Domain domain) {
  return radial_window(grid, domain, WindowKind::bump_chi, &bump_value);
}

Window annulus_psi(const Grid& grid, Domain domain) {
  return radial_window(grid, domain, WindowKind::annulus_psi, &annulus_value);
}

Window custom_window(SampledField field) {
  bool nonzero = false;
  for (const auto& v : field.values) nonzero = nonzero || v != complex{};
  if (!nonzero) throw ParameterError("window must not vanish identically");
  return Window{std::move(field), WindowKind::custom, {}};
}

std::vector<std::size_t> stft_positions(const Grid& grid, const StftOptions& options) {
  if (options.stride == 0) throw ParameterError("stft stride must be positive");
  if (!(options.interior > 0.0) || options.interior > 1.0) {
    throw ParameterError("stft interior fraction must lie in (0, 1]");
  }
  const std::size_t n = grid.samples_per_axis();
  const auto half = static_cast<long long>(n / 2);
  const auto stride = static_cast<long long>(options.stride);
  std::vector<std::size_t> axis;
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    const long long offset = i - half;
    if (offset % stride != 0) continue;
    if (options.interior < 1.0 &&
        !(static_cast<double>(std::llabs(offset)) < options.interior * static_cast<double>(half))) {
      continue;
    }
    axis.push_back(static_cast<std::size_t>(i));
  }

  const auto dim = static_cast<std::size_t>(grid.dim());
  std::size_t count = 1;
  for (std::size_t a = 0; a < dim; ++a) count *= axis.size();
  std::vector<std::size_t> out;
  out.reserve(count);
  std::vector<std::size_t> digit(dim, 0), index(dim);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t a = 0; a < dim; ++a) index[a] = axis[digit[a]];
    out.push_back(grid.ravel(index));
    for (std::size_t a = dim; a-- > 0;) {
      if (++digit[a] < axis.size()) break;
      digit[a] = 0;
    }
  }
  return out;
}

void for_each_stft_row(const SampledField& f, const Window& g, const StftOptions& options,
                       const StftRowVisitor& visit) {
  require_same_grid(f, g.field, "stft");
  if (f.domain != Domain::position) throw GridMismatch("stft expects position-domain fields");

  const Grid& grid = f.grid;
  const std::size_t n = grid.samples_per_axis();
  const auto dim = static_cast<std::size_t>(grid.dim());
  const auto positions = stft_positions(grid, options);

  SampledField product(grid, Domain::position);
  std::vector<std::size_t> center(dim), index(dim);
  std::vector<complex> conj_g(g.field.values.size());
  std::transform(g.field.values.begin(), g.field.values.end(), conj_g.begin(),
                 [](complex v) { return std::conj(v); });

  for (std::size_t r = 0; r < positions.size(); ++r) {
    grid.unravel(positions[r], center);
    // (T_x g)(t_m) = g(t_m - x) = g at index (m - (j - N/2)) mod N per axis.
    if (dim == 1) {
      const std::size_t shift = (n + n / 2 - center[0]) % n;  // -(j - N/2) mod N
      for (std::size_t m = 0; m < n; ++m) {
        product.values[m] = f.values[m] * conj_g[(m + shift) % n];
      }
    } else {
      for (std::size_t k = 0; k < grid.size(); ++k) {
        grid.unravel(k, index);
        for (std::size_t a = 0; a < dim; ++a) index[a] = (index[a] + n + n / 2 - center[a]) % n;
        product.values[k] = f.values[k] * conj_g[grid.ravel(index)];
      }
    }
    const SampledField spectrum = forward_transform(product);
    visit(r, positions[r], spectrum.values);
  }
}

StftMatrix stft(const SampledField& f, const Window& g, const StftOptions& options) {
  StftMatrix out{f.grid, options, stft_positions(f.grid, options), {}};
  out.values.resize(out.rows() * out.cols());
  for_each_stft_row(f, g, options,
                    [&](std::size_t r, std::size_t, std::span<const complex> row) {
                      std::copy(row.begin(), row.end(),
                                out.values.begin() + static_cast<std::ptrdiff_t>(r * out.cols()));
                    });
  return out;
}

void check_exponent(double e, const char* name) {
  if (!(e >= 1.0)) {
    throw ParameterError(std::string("exponent ") + name + " must lie in [1, inf]");
  }
}

MixedNormAccumulator::MixedNormAccumulator(const Grid& grid, double p, double q,
                                           NormOrder order, std::size_t stride)
    : p_(p),
      q_(q),
      order_(order),
      position_weight_(std::pow(static_cast<double>(stride) * grid.dx(), grid.dim())),
      frequency_weight_(std::pow(grid.dxi(), grid.dim())),
      width_(grid.size()),
      scratch_(grid.size()) {
  check_exponent(p, "p");
  check_exponent(q, "q");
  if (order_ == NormOrder::positions_inner) {
    if (std::isinf(p_)) {
      column_max_.assign(width_, 0.0);
    } else {
      column_sums_.emplace(width_);
    }
  }
}

void MixedNormAccumulator::add_row(std::span<const complex> row) {
  if (row.size() != width_) throw ParameterError("stft row width mismatch");
  if (order_ == NormOrder::positions_inner) {
    if (std::isinf(p_)) {
      for (std::size_t k = 0; k < width_; ++k) column_max_[k] = std::max(column_max_[k], std::abs(row[k]));
    } else {
      for (std::size_t k = 0; k < width_; ++k) scratch_[k] = power(std::abs(row[k]), p_);
      column_sums_->add(scratch_);
    }
    return;
  }
  double inner = 0.0;
  if (std::isinf(q_)) {
    for (const auto& v : row) inner = std::max(inner, std::abs(v));
  } else {
    for (std::size_t k = 0; k < width_; ++k) scratch_[k] = power(std::abs(row[k]), q_);
    inner = root(pairwise_sum(scratch_) * frequency_weight_, q_);
  }
  row_values_.push_back(inner);
}

double MixedNormAccumulator::value() const {
  if (order_ == NormOrder::positions_inner) {
    std::vector<double> inner;
    if (std::isinf(p_)) {
      inner = column_max_;
    } else {
      inner = column_sums_->total();
      for (auto& v : inner) v = root(v * position_weight_, p_);
    }
    if (std::isinf(q_)) return inner.empty() ? 0.0 : *std::max_element(inner.begin(), inner.end());
    for (auto& v : inner) v = power(v, q_);
    return root(pairwise_sum(inner) * frequency_weight_, q_);
  }
  if (row_values_.empty()) return 0.0;
  if (std::isinf(p_)) return *std::max_element(row_values_.begin(), row_values_.end());
  std::vector<double> outer(row_values_.size());
  for (std::size_t r = 0; r < outer.size(); ++r) outer[r] = power(row_values_[r], p_);
  return root(pairwise_sum(outer) * position_weight_, p_);
}

NormReport mixed_norm(const StftMatrix& v, double p, double q, NormOrder order) {
  MixedNormAccumulator acc(v.grid, p, q, order, v.options.stride);
  for (std::size_t r = 0; r < v.rows(); ++r) acc.add_row(v.row(r));
  NormReport report;
  report.value = acc.value();
  report.p = p;
  report.q = q;
  report.order = order;
  report.grid = info_of(v.grid, v.options);
  return report;
}

NormReport modulation_norm(const SampledField& f, const Window& g, double p, double q,
                           const NormOptions& options) {
  return streamed_norm(f, g, p, q, NormOrder::positions_inner, options);
}

std::vector<double> modulation_norms(const SampledField& f, const Window& g,
                                     std::span<const std::pair<double, double>> pq,
                                     const StftOptions& options) {
  std::vector<MixedNormAccumulator> accs;
  accs.reserve(pq.size());
  for (const auto& [p, q] : pq) {
    accs.emplace_back(f.grid, p, q, NormOrder::positions_inner, options.stride);
  }
  for_each_stft_row(f, g, options, [&](std::size_t, std::size_t, std::span<const complex> row) {
    for (auto& acc : accs) acc.add_row(row);
  });
  std::vector<double> out;
  out.reserve(accs.size());
  for (const auto& acc : accs) out.push_back(acc.value());
  return out;
}

NormReport amalgam_norm_wfl1(const SampledField& sigma, const Window& g,
                             const NormOptions& options) {
  return streamed_norm(sigma, g, kInf, 1.0, NormOrder::frequencies_inner, options);
}

NormReport m_inf_1_norm(const SampledField& sigma, const Window& g, const NormOptions& options) {
  return streamed_norm(sigma, g, kInf, 1.0, NormOrder::positions_inner, options);
}

NormReport m_1_inf_norm(const SampledField& sigma, const Window& g, const NormOptions& options) {
  return streamed_norm(sigma, g, 1.0, kInf, NormOrder::positions_inner, options);
}

NormReport fl1_norm(const SampledField& sigma, bool refinement) {
  auto evaluate = [](const SampledField& s) {
    const SampledField spectrum = forward_transform(s);
    std::vector<double> mags(spectrum.size());
    for (std::size_t k = 0; k < mags.size(); ++k) mags[k] = std::abs(spectrum.values[k]);
    return pairwise_sum(mags) * std::pow(s.grid.dxi(), s.grid.dim());
  };
  NormReport report;
  report.p = 1.0;
  report.q = 1.0;
  report.grid = info_of(sigma.grid, {});
  report.value = evaluate(sigma);
  if (refinement) {
    if (sigma.grid.samples_per_axis() >= 16) {
      report.refinement_estimate = relative_change(report.value, evaluate(decimate(sigma)));
    } else {
      report.warnings.emplace_back("grid too small for a half-resolution recompute");
    }
  }
  return report;
}

SampledField translate(const SampledField& f, std::span<const long long> shift) {
  const Grid& grid = f.grid;
  const auto dim = static_cast<std::size_t>(grid.dim());
  if (shift.size() != dim) throw ParameterError("translate: shift has wrong dimension");
  const auto n = static_cast<long long>(grid.samples_per_axis());
  SampledField out(grid, f.domain);
  std::vector<std::size_t> index(dim);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid.unravel(k, index);
    for (std::size_t a = 0; a < dim; ++a) {
      const long long src = ((static_cast<long long>(index[a]) - shift[a]) % n + n) % n;
      index[a] = static_cast<std::size_t>(src);
    }
    out.values[k] = f.values[grid.ravel(index)];
  }
  return out;
}

SampledField modulate(const SampledField& f, std::span<const long long> m) {
  const Grid& grid = f.grid;
  const auto dim = static_cast<std::size_t>(grid.dim());
  if (m.size() != dim) throw ParameterError("modulate: frequency shift has wrong dimension");
  const auto n = static_cast<long long>(grid.samples_per_axis());
  SampledField out(grid, f.domain);
  std::vector<std::size_t> index(dim);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid.unravel(k, index);
    // x_i * m dxi = (i - N/2) m / N; reduce the numerator mod N first.
    long long numerator = 0;
    for (std::size_t a = 0; a < dim; ++a) {
      numerator += ((static_cast<long long>(index[a]) - n / 2) % n) * (m[a] % n);
      numerator %= n;
    }
    numerator = (numerator + n) % n;
    const double angle = 2.0 * kPi * static_cast<double>(numerator) / static_cast<double>(n);
    out.values[k] = f.values[k] * complex(std::cos(angle), std::sin(angle));
  }
  return out;
}

}  // namespace tfmult
