#include "tfmult/mult.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tfmult {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double squared_norm(std::span<const double> xi) {
  double s = 0.0;
  for (double v : xi) s += v * v;
  return s;
}

complex unit(double phase) { return {std::cos(phase), std::sin(phase)}; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void require_match(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b)) throw GridMismatch(std::string(what) + ": grid mismatch");
}

// Largest |d phase / d|xi|| of the oscillating factor at radius `radius`,
// or 0 for symbols without an oscillating phase.
double phase_slope(const SymbolDescriptor& d, double radius) {
  return std::visit(
      Overloaded{
          [&](const Unimodular& s) {
            if (s.alpha == 0.0) return 0.0;
            return std::abs(s.t) * s.alpha * std::pow(radius, s.alpha - 1.0);
          },
          [&](const SinSingular& s) { return s.alpha * std::pow(radius, s.alpha - 1.0); },
          [&](const GaussianChirp& s) { return 2.0 * kPi * std::abs(s.t) * radius; },
          [](const Piecewise&) { return 0.0; },
          [](const CustomSymbol&) { return 0.0; },
      },
      d);
}

}  // namespace

std::string describe(const SymbolDescriptor& d) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const Unimodular& s) {
                   out << "unimodular(alpha=" << s.alpha << ", t=" << s.t << ", r=" << s.r << ")";
                 },
                 [&](const SinSingular& s) {
                   out << "sin_singular(alpha=" << s.alpha << ", delta=" << s.delta << ")";
                 },
                 [&](const Piecewise& s) {
                   out << "piecewise(b=";
                   for (std::size_t j = 0; j < s.b.size(); ++j) out << (j ? "x" : "") << s.b[j];
                   out << ")";
                 },
                 [&](const GaussianChirp& s) { out << "gaussian_chirp(t=" << s.t << ")"; },
                 [&](const CustomSymbol& s) { out << "custom(" << s.label << ")"; },
             },
             d);
  return out.str();
}

void validate(const SymbolDescriptor& d, int dim) {
  std::visit(Overloaded{
                 [](const Unimodular& s) {
                   if (!(s.alpha >= 0.0 && s.alpha <= 2.0)) {
                     throw ParameterError("unimodular symbol needs alpha in [0, 2]");
                   }
                   if (!(s.r >= 1.0) || !std::isfinite(s.r)) {
                     throw ParameterError("unimodular symbol needs r >= 1");
                   }
                   if (!std::isfinite(s.t)) throw ParameterError("unimodular symbol needs finite t");
                 },
                 [](const SinSingular& s) {
                   if (!(s.delta > 0.0)) throw ParameterError("sin_singular needs delta > 0");
                   if (!(s.delta <= s.alpha)) {
                     throw ParameterError("sin_singular needs delta <= alpha (unbounded otherwise)");
                   }
                 },
                 [dim](const Piecewise& s) {
                   if (s.b.size() != static_cast<std::size_t>(dim)) {
                     throw ParameterError("piecewise symbol needs one cell side per axis");
                   }
                   for (double b : s.b) {
                     if (!(b > 0.0) || !std::isfinite(b)) {
                       throw ParameterError("piecewise cell sides must be positive");
                     }
                   }
                   if (!s.c) throw ParameterError("piecewise symbol needs coefficients");
                 },
                 [](const GaussianChirp& s) {
                   if (!std::isfinite(s.t)) throw ParameterError("chirp needs finite t");
                 },
                 [](const CustomSymbol&) {},
             },
             d);
}

double r_norm(std::span<const double> xi, double r) {
  if (r == 1.0) return std::sqrt(squared_norm(xi));
  double s = 0.0;
  for (double v : xi) s += std::pow(std::abs(v), 2.0 * r);
  return std::pow(s, 1.0 / (2.0 * r));
}

std::int64_t piecewise_cell(double xi, double b) {
  return static_cast<std::int64_t>(std::ceil(xi / b)) - 1;
}

Coefficients random_signs(std::uint64_t seed) {
  return [seed](std::span<const std::int64_t> n) {
    std::uint64_t h = splitmix64(seed);
    for (auto v : n) h = splitmix64(h ^ static_cast<std::uint64_t>(v));
    return complex((h >> 63) != 0 ? -1.0 : 1.0);
  };
}

complex evaluate(const SymbolDescriptor& d, std::span<const double> xi) {
  return std::visit(
      Overloaded{
          [&](const Unimodular& s) {
            if (s.alpha == 2.0 && s.r == 1.0) return unit(s.t * squared_norm(xi));
            return unit(s.t * std::pow(r_norm(xi, s.r), s.alpha));
          },
          [&](const SinSingular& s) {
            const double u = std::sqrt(squared_norm(xi));
            if (u == 0.0) return complex(s.delta == s.alpha ? 1.0 : 0.0);
            return complex(std::sin(std::pow(u, s.alpha)) / std::pow(u, s.delta));
          },
          [&](const Piecewise& s) {
            std::vector<std::int64_t> n(xi.size());
            for (std::size_t j = 0; j < xi.size(); ++j) n[j] = piecewise_cell(xi[j], s.b[j]);
            return s.c(n);
          },
          [&](const GaussianChirp& s) { return unit((kPi * s.t) * squared_norm(xi)); },
          [](const CustomSymbol&) -> complex {
            throw ParameterError("custom symbols have no pointwise formula");
          },
      },
      d);
}

std::optional<std::string> aliasing_warning(const Grid& grid, const SymbolDescriptor& d,
                                            Domain domain) {
  const double spacing = domain == Domain::frequency ? grid.dxi() : grid.dx();
  const double edge = domain == Domain::frequency
                          ? 0.5 * static_cast<double>(grid.samples_per_axis()) * grid.dxi()
                          : 0.5 * grid.length();
  const double radius = edge * std::sqrt(static_cast<double>(grid.dim()));
  const double increment = phase_slope(d, radius) * spacing;
  if (increment < kPi) return std::nullopt;
  std::ostringstream msg;
  msg << "resolution: phase of " << describe(d) << " changes by " << increment
      << " rad between adjacent " << (domain == Domain::frequency ? "frequency" : "position")
      << " samples at the lattice edge (limit pi)";
  return msg.str();
}

Symbol make_symbol(const Grid& grid, const SymbolDescriptor& d) {
  validate(d, grid.dim());
  SampledField field = sample([&](std::span<const double> xi) { return evaluate(d, xi); }, grid,
                              Domain::frequency);
  Symbol out{grid, std::move(field.values), d, {}};
  if (auto w = aliasing_warning(grid, d, Domain::frequency)) out.warnings.push_back(*w);
  return out;
}

Symbol symbol_unimodular(const Grid& grid, double alpha, double t, double r) {
  return make_symbol(grid, Unimodular{alpha, t, r});
}

Symbol symbol_sin_singular(const Grid& grid, double alpha, double delta) {
  return make_symbol(grid, SinSingular{alpha, delta});
}

Symbol symbol_piecewise(const Grid& grid, std::vector<double> b, Coefficients c) {
  return make_symbol(grid, Piecewise{std::move(b), std::move(c)});
}

Symbol symbol_gaussian_chirp(const Grid& grid, double t) {
  return make_symbol(grid, GaussianChirp{t});
}

Symbol symbol_custom(const Grid& grid, std::vector<complex> values, std::string label) {
  if (values.size() != grid.size()) throw ParameterError("custom symbol has wrong size");
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ParameterError("custom symbol has non-finite values");
    }
  }
  return Symbol{grid, std::move(values), CustomSymbol{std::move(label)}, {}};
}

SampledField symbol_field(const Grid& grid, const SymbolDescriptor& d) {
  validate(d, grid.dim());
  return sample([&](std::span<const double> xi) { return evaluate(d, xi); }, grid,
                Domain::position);
}

Symbol operator*(const Symbol& a, const Symbol& b) {
  require_match(a.grid, b.grid, "symbol product");
  std::vector<complex> values(a.values.size());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = a.values[k] * b.values[k];
  return Symbol{a.grid, std::move(values),
                CustomSymbol{"(" + describe(a.descriptor) + ")*(" + describe(b.descriptor) + ")"},
                {}};
}

SampledField apply_multiplier(const Symbol& sigma, const SampledField& f) {
  require_match(sigma.grid, f.grid, "apply_multiplier");
  SampledField spectrum = forward_transform(f);
  for (std::size_t k = 0; k < spectrum.size(); ++k) spectrum.values[k] *= sigma.values[k];
  return inverse_transform(spectrum);
}

std::pair<Symbol, Symbol> split_sing_osc(const Symbol& sigma, const Window& chi) {
  require_match(sigma.grid, chi.field.grid, "split_sing_osc");
  if (chi.field.domain != Domain::frequency) {
    throw GridMismatch("split_sing_osc needs the cutoff sampled on the frequency lattice");
  }
  Symbol sing{sigma.grid, sigma.values, CustomSymbol{"sing:" + describe(sigma.descriptor)}, {}};
  Symbol osc{sigma.grid, sigma.values, CustomSymbol{"osc:" + describe(sigma.descriptor)}, {}};
  for (std::size_t k = 0; k < sigma.values.size(); ++k) {
    const double c = chi.field.values[k].real();
    sing.values[k] = sigma.values[k] * c;
    osc.values[k] = sigma.values[k] * (1.0 - c);
  }
  return {std::move(sing), std::move(osc)};
}

PropagatorState schrodinger_propagate(const SampledField& f, double t) {
  const Symbol sigma = symbol_unimodular(f.grid, 2.0, t);
  return PropagatorState{f.grid, apply_multiplier(sigma, f), std::nullopt, t, Equation::schrodinger};
}

PropagatorState wave_propagate(const SampledField& f, const SampledField& g, double t) {
  if (!(f.grid == g.grid) || f.domain != g.domain) {
    throw GridMismatch("wave_propagate: initial data live on different grids");
  }
  const Grid& grid = f.grid;
  const SampledField fh = forward_transform(f);
  const SampledField gh = forward_transform(g);
  SampledField uh(grid, Domain::frequency);
  SampledField vh(grid, Domain::frequency);
  std::vector<double> xi(static_cast<std::size_t>(grid.dim()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid.frequency_of(k, xi);
    const double r = std::sqrt(squared_norm(xi));
    const double c = std::cos(t * r);
    const double s = std::sin(t * r);
    const double sinc = r == 0.0 ? t : s / r;
    uh.values[k] = c * fh.values[k] + sinc * gh.values[k];
    vh.values[k] = -r * s * fh.values[k] + c * gh.values[k];
  }
  return PropagatorState{grid, inverse_transform(uh), inverse_transform(vh), t, Equation::wave};
}

double wave_energy(const SampledField& u, const SampledField& v) {
  if (!(u.grid == v.grid)) throw GridMismatch("wave_energy: grid mismatch");
  const Grid& grid = u.grid;
  const SampledField uh = forward_transform(u);
  const SampledField vh = forward_transform(v);
  std::vector<double> density(grid.size());
  std::vector<double> xi(static_cast<std::size_t>(grid.dim()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid.frequency_of(k, xi);
    density[k] = squared_norm(xi) * std::norm(uh.values[k]) + std::norm(vh.values[k]);
  }
  return pairwise_sum(density) * std::pow(grid.dxi(), grid.dim());
}

}  // namespace tfmult
