#pragma once

// Fourier multiplier symbols, their application by FFT, and the free
// Schrodinger and wave propagators built from them.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tfmult/core.hpp"
#include "tfmult/tf.hpp"

namespace tfmult {

/// e^{i t |xi|_{2r}^alpha}, alpha in [0, 2], r >= 1.
struct Unimodular {
  double alpha = 1.0;
  double t = 1.0;
  double r = 1.0;
};

/// sin(|xi|^alpha) / |xi|^delta with 0 < delta <= alpha.
struct SinSingular {
  double alpha = 1.0;
  double delta = 1.0;
};

/// Integer-indexed coefficients c_n, n in Z^d.
using Coefficients = std::function<complex(std::span<const std::int64_t>)>;

/// sum_n c_n 1_{cell_n}, cell_n = prod_j (n_j b_j, (n_j + 1) b_j). A point on
/// a face takes the coefficient of the adjacent lower cell.
struct Piecewise {
  std::vector<double> b;
  Coefficients c;
};

/// e^{i pi t |xi|^2}.
struct GaussianChirp {
  double t = 1.0;
};

struct CustomSymbol {
  std::string label;
};

using SymbolDescriptor = std::variant<Unimodular, SinSingular, Piecewise, GaussianChirp, CustomSymbol>;

std::string describe(const SymbolDescriptor& d);

/// Throws ParameterError when the descriptor parameters fall outside the
/// supported ranges. Custom symbols always pass.
void validate(const SymbolDescriptor& d, int dim);

/// Pointwise value of a parametric symbol. Throws for CustomSymbol.
complex evaluate(const SymbolDescriptor& d, std::span<const double> xi);

/// |xi|_{2r} = (sum |xi_j|^{2r})^{1/(2r)}.
double r_norm(std::span<const double> xi, double r);

/// Index of the piecewise cell containing xi along one axis.
std::int64_t piecewise_cell(double xi, double b);

/// Coefficients drawn uniformly from {-1, +1}, a fixed function of (seed, n).
Coefficients random_signs(std::uint64_t seed);

/// Samples of a multiplier on the frequency lattice.
struct Symbol {
  Grid grid;
  std::vector<complex> values;
  SymbolDescriptor descriptor;
  std::vector<std::string> warnings;
};

Symbol make_symbol(const Grid& grid, const SymbolDescriptor& d);
Symbol symbol_unimodular(const Grid& grid, double alpha, double t, double r = 1.0);
Symbol symbol_sin_singular(const Grid& grid, double alpha, double delta);
Symbol symbol_piecewise(const Grid& grid, std::vector<double> b, Coefficients c);
Symbol symbol_gaussian_chirp(const Grid& grid, double t);
Symbol symbol_custom(const Grid& grid, std::vector<complex> values, std::string label);

/// The symbol as a function sampled on the position lattice, the form the
/// STFT norm estimators take.
SampledField symbol_field(const Grid& grid, const SymbolDescriptor& d);

/// Resolution check for oscillating phases: the phase change between
/// adjacent samples at the outermost sample of `domain` must stay below pi.
std::optional<std::string> aliasing_warning(const Grid& grid, const SymbolDescriptor& d,
                                            Domain domain);

/// Pointwise product; the result is a custom symbol.
Symbol operator*(const Symbol& a, const Symbol& b);

/// H_sigma f = (sigma f^)^v.
SampledField apply_multiplier(const Symbol& sigma, const SampledField& f);

/// (sigma chi, sigma (1 - chi)) for a frequency-domain cutoff chi.
std::pair<Symbol, Symbol> split_sing_osc(const Symbol& sigma, const Window& chi);

enum class Equation { schrodinger, wave };

struct PropagatorState {
  Grid grid;
  SampledField u;
  std::optional<SampledField> v;  // du/dt, wave only
  double t = 0.0;
  Equation equation = Equation::schrodinger;
};

/// u(t) = H_{e^{i t |xi|^2}} f.
PropagatorState schrodinger_propagate(const SampledField& f, double t);

/// u^ = cos(t|xi|) f^ + sin(t|xi|)/|xi| g^,  v^ = -|xi| sin(t|xi|) f^ + cos(t|xi|) g^,
/// with sin(t|xi|)/|xi| = t at xi = 0.
PropagatorState wave_propagate(const SampledField& f, const SampledField& g, double t);

/// dxi^d sum (|xi|^2 |u^|^2 + |v^|^2).
double wave_energy(const SampledField& u, const SampledField& v);

}  // namespace tfmult
