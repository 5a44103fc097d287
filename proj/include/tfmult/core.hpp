#pragma once

// Uniform grids on a centered cube, sampled fields, and the centered
// Fourier transform  f^(xi) = \int f(x) e^{-2 pi i x.xi} dx  evaluated by
// Riemann sums on the dual lattice.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfmult {

using complex = std::complex<double>;

/// Invalid parameter passed to a public operation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sampled function produced NaN or Inf.
class SamplingError : public std::runtime_error {
 public:
  SamplingError(const std::string& what, std::vector<double> coordinate)
      : std::runtime_error(what), coordinate_(std::move(coordinate)) {}
  const std::vector<double>& coordinate() const noexcept { return coordinate_; }

 private:
  std::vector<double> coordinate_;
};

/// Two operands live on different grids (or domains).
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform sampling of [-L/2, L/2)^d with N points per axis, together with
/// the dual frequency lattice xi_k = k/L, k in {-N/2, ..., N/2-1}^d.
///
/// Both lattices are stored in row-major order with the first axis slowest.
/// Along each axis index i maps to x_i = -L/2 + i*dx and xi_i = (i - N/2)/L,
/// so both are monotone increasing and index N/2 is the origin.
class Grid {
 public:
  Grid(int dim, double length, std::size_t samples_per_axis);

  int dim() const noexcept { return dim_; }
  double length() const noexcept { return length_; }
  std::size_t samples_per_axis() const noexcept { return n_; }
  /// Total number of lattice points, N^d.
  std::size_t size() const noexcept { return size_; }
  double dx() const noexcept { return length_ / static_cast<double>(n_); }
  double dxi() const noexcept { return 1.0 / length_; }

  double position(std::size_t axis_index) const noexcept {
    return -0.5 * length_ + static_cast<double>(axis_index) * dx();
  }
  double frequency(std::size_t axis_index) const noexcept {
    return (static_cast<double>(axis_index) - 0.5 * static_cast<double>(n_)) / length_;
  }

  void unravel(std::size_t flat, std::span<std::size_t> index) const;
  std::size_t ravel(std::span<const std::size_t> index) const;

  void position_of(std::size_t flat, std::span<double> out) const;
  void frequency_of(std::size_t flat, std::span<double> out) const;

  /// Same box, N/2 samples per axis. Throws ParameterError below N = 8.
  Grid coarsened() const;
  /// Same box, 2N samples per axis.
  Grid refined() const;

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.dim_ == b.dim_ && a.length_ == b.length_ && a.n_ == b.n_;
  }

 private:
  int dim_;
  double length_;
  std::size_t n_;
  std::size_t size_;
};

Grid make_grid(int dim, double length, std::size_t samples_per_axis);

enum class Domain { position, frequency };

/// Complex samples on one of the two lattices of a grid.
struct SampledField {
  Grid grid;
  Domain domain = Domain::position;
  std::vector<complex> values;

  SampledField(Grid g, Domain dom, std::vector<complex> v);
  /// Zero field.
  SampledField(Grid g, Domain dom = Domain::position);

  std::size_t size() const noexcept { return values.size(); }
};

using PointFunction = std::function<complex(std::span<const double>)>;

/// Samples fn at every lattice point of the requested domain. Throws
/// SamplingError carrying the offending coordinate on a non-finite value.
SampledField sample(const PointFunction& fn, const Grid& grid,
                    Domain domain = Domain::position);

/// Riemann approximation of the Fourier transform on the frequency lattice.
SampledField forward_transform(const SampledField& f);

/// Inverse of forward_transform (kernel e^{+2 pi i x.xi}, weight dxi^d).
SampledField inverse_transform(const SampledField& F);

/// Keeps every other sample per axis: the same function on grid.coarsened().
SampledField decimate(const SampledField& f);

/// dx^d sum |f|^2 (position) or dxi^d sum |F|^2 (frequency), square-rooted.
double l2_norm(const SampledField& f);

/// Pairwise (cascade) summation with a fixed reduction tree.
double pairwise_sum(std::span<const double> values);

/// Column-wise pairwise summation of a stream of equal-length rows. The
/// reduction tree depends only on the number of rows, so results are
/// reproducible bit for bit.
class PairwiseRowAccumulator {
 public:
  explicit PairwiseRowAccumulator(std::size_t width) : width_(width) {}

  void add(std::span<const double> row);
  std::vector<double> total() const;
  std::size_t rows() const noexcept { return count_; }

 private:
  std::size_t width_;
  std::size_t count_ = 0;
  // levels_[k] holds the sum of a block of 2^k rows when occupied_[k].
  std::vector<std::vector<double>> levels_;
  std::vector<bool> occupied_;
};

}  // namespace tfmult
