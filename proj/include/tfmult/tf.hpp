#pragma once

// Short-time Fourier transform and the mixed-norm functionals built on it:
// modulation norms M^{p,q}, the Wiener amalgam W(FL^1, l^inf), M^{inf,1},
// M^{1,inf} and the Fourier algebra norm FL^1.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tfmult/core.hpp"

namespace tfmult {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class WindowKind { gaussian, bump_chi, annulus_psi, custom };

struct Window {
  SampledField field;
  WindowKind kind = WindowKind::custom;
  std::vector<double> params;
};

/// chi(r) for r = |xi|: 1 on r <= 1, 0 on r >= 2, smooth and monotone in
/// between, built from h(s) = e^{-1/s}.
double bump_value(double radius);

/// psi(r) = chi(r/2) - chi(r), supported in 1 <= r <= 4.
double annulus_value(double radius);

/// e^{-pi |x|^2}.
Window gaussian_window(const Grid& grid, Domain domain = Domain::position);
Window bump_chi(const Grid& grid, Domain domain = Domain::position);
Window annulus_psi(const Grid& grid, Domain domain = Domain::position);
Window custom_window(SampledField field);

/// Which lattice positions x_j an STFT is evaluated at.
///
/// `interior` keeps positions with |x_i| < interior * L/2 on every axis;
/// 0.5 is the central half of the box. Non-decaying inputs (chirps) are
/// periodized by the grid, and only interior positions see the function
/// rather than the wrap-around seam. `stride` keeps every stride-th
/// position per axis (counted from the origin).
struct StftOptions {
  std::size_t stride = 1;
  double interior = 1.0;
};

/// V_g f(x_j, xi_k) for the selected positions x_j (rows) and every
/// frequency xi_k of the grid (columns).
struct StftMatrix {
  Grid grid;
  StftOptions options;
  std::vector<std::size_t> positions;  // flat position-lattice indices, one per row
  std::vector<complex> values;         // rows() * cols(), row-major

  std::size_t rows() const noexcept { return positions.size(); }
  std::size_t cols() const noexcept { return grid.size(); }
  std::span<const complex> row(std::size_t r) const {
    return std::span<const complex>(values).subspan(r * cols(), cols());
  }
  complex at(std::size_t r, std::size_t k) const { return values[r * cols() + k]; }
};

/// Flat indices of the positions selected by `options`.
std::vector<std::size_t> stft_positions(const Grid& grid, const StftOptions& options);

using StftRowVisitor =
    std::function<void(std::size_t row, std::size_t position, std::span<const complex> values)>;

/// Streams rows of V_g f without materializing the matrix. Row r is the
/// transform of f * conj(T_{x_r} g) with circular translation on the grid.
void for_each_stft_row(const SampledField& f, const Window& g, const StftOptions& options,
                       const StftRowVisitor& visit);

StftMatrix stft(const SampledField& f, const Window& g, const StftOptions& options = {});

/// Which variable the inner integral runs over.
enum class NormOrder {
  positions_inner,    // (int (int |V|^p dx)^{q/p} dxi)^{1/q}
  frequencies_inner,  // (int (int |V|^q dxi)^{p/q} dx)^{1/p}
};

struct GridInfo {
  int dim = 1;
  double length = 0.0;
  std::size_t samples_per_axis = 0;
  std::size_t stride = 1;
  double interior = 1.0;
};

struct NormReport {
  double value = 0.0;
  double p = 2.0;  // exponent over positions
  double q = 2.0;  // exponent over frequencies
  NormOrder order = NormOrder::positions_inner;
  GridInfo grid;
  /// |value - value_at_N/2| / value, when a half-resolution recompute was run.
  std::optional<double> refinement_estimate;
  std::vector<std::string> warnings;
};

/// Incremental mixed-norm evaluation over STFT rows. Rows must be added in
/// a fixed order for reproducible results.
class MixedNormAccumulator {
 public:
  MixedNormAccumulator(const Grid& grid, double p, double q, NormOrder order,
                       std::size_t stride);

  void add_row(std::span<const complex> row);
  double value() const;

 private:
  double p_, q_;
  NormOrder order_;
  double position_weight_;
  double frequency_weight_;
  std::size_t width_;
  // positions_inner: column-wise sums of |V|^p (or maxima when p = inf).
  std::optional<PairwiseRowAccumulator> column_sums_;
  std::vector<double> column_max_;
  // frequencies_inner: one reduced value per row.
  std::vector<double> row_values_;
  std::vector<double> scratch_;
};

/// Throws ParameterError unless 1 <= e <= inf.
void check_exponent(double e, const char* name);

NormReport mixed_norm(const StftMatrix& v, double p, double q,
                      NormOrder order = NormOrder::positions_inner);

struct NormOptions {
  StftOptions stft;
  /// Recompute on N/2 (decimated inputs) and report the relative change.
  bool refinement = true;
};

/// ||V_g f||_{L^{p,q}}, positions inner.
NormReport modulation_norm(const SampledField& f, const Window& g, double p, double q,
                           const NormOptions& options = {});

/// Several M^{p,q} norms (positions inner) from one pass over the STFT rows.
/// No refinement estimate.
std::vector<double> modulation_norms(const SampledField& f, const Window& g,
                                     std::span<const std::pair<double, double>> pq,
                                     const StftOptions& options = {});

/// sup_x sum_xi |V_g sigma(x, xi)| dxi.
NormReport amalgam_norm_wfl1(const SampledField& sigma, const Window& g,
                             const NormOptions& options = {});

/// sum_xi (sup_x |V_g sigma(x, xi)|) dxi.
NormReport m_inf_1_norm(const SampledField& sigma, const Window& g,
                        const NormOptions& options = {});

/// sup_xi sum_x |V_g sigma(x, xi)| dx.
NormReport m_1_inf_norm(const SampledField& sigma, const Window& g,
                        const NormOptions& options = {});

/// sum_xi |sigma^(xi)| dxi. The caller truncates non-decaying symbols first.
NormReport fl1_norm(const SampledField& sigma, bool refinement = true);

/// Exact circular translation by a lattice vector (in samples per axis).
SampledField translate(const SampledField& f, std::span<const long long> shift);

/// Multiplication by e^{2 pi i x.(m dxi)}, m integer per axis, with the phase
/// reduced modulo the lattice period so that it is exact up to cos/sin rounding.
SampledField modulate(const SampledField& f, std::span<const long long> m);

}  // namespace tfmult
