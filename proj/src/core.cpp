#include "tfmult/core.hpp"

#include <cmath>
#include <sstream>

#include "fft.hpp"

namespace tfmult {
namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// (-1)^(i_1 + ... + i_d) for the flat index k. Row-major with N even, so
// the parity of the digit sum is tracked through the digits.
bool odd_digit_sum(std::size_t flat, std::size_t n, int dim) {
  std::size_t parity = 0;
  for (int a = 0; a < dim; ++a) {
    parity ^= (flat % n) & 1U;
    flat /= n;
  }
  return parity != 0;
}

void alternate_signs(std::vector<complex>& values, const Grid& grid) {
  const std::size_t n = grid.samples_per_axis();
  const int dim = grid.dim();
  if (dim == 1) {
    for (std::size_t k = 1; k < values.size(); k += 2) values[k] = -values[k];
    return;
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (odd_digit_sum(k, n, dim)) values[k] = -values[k];
  }
}

// Shared body of forward/inverse. With x_j = -L/2 + j dx and
// xi_k = (k - N/2)/L the kernel factorizes per axis as
//   e^{-+2 pi i x_j xi_k} = (-1)^j (-1)^k e^{-+2 pi i jk/N}
// (N/2 even), so the centering is two exact sign flips around a plain DFT.
std::vector<complex> centered_dft(const SampledField& in, detail::FftSign sign,
                                  double weight) {
  std::vector<complex> out = in.values;
  alternate_signs(out, in.grid);
  detail::fft_inplace(out, in.grid.dim(), in.grid.samples_per_axis(), sign);
  alternate_signs(out, in.grid);
  for (auto& v : out) v *= weight;
  return out;
}

}  // namespace

Grid::Grid(int dim, double length, std::size_t samples_per_axis)
    : dim_(dim), length_(length), n_(samples_per_axis), size_(1) {
  if (dim < 1 || dim > 3) {
    throw ParameterError("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw ParameterError("grid side length must be positive and finite");
  }
  if (!is_power_of_two(samples_per_axis) || samples_per_axis < 8) {
    throw ParameterError("samples per axis must be a power of two >= 8, got " +
                         std::to_string(samples_per_axis));
  }
  for (int a = 0; a < dim; ++a) size_ *= n_;
}

void Grid::unravel(std::size_t flat, std::span<std::size_t> index) const {
  for (int a = dim_ - 1; a >= 0; --a) {
    index[static_cast<std::size_t>(a)] = flat % n_;
    flat /= n_;
  }
}

std::size_t Grid::ravel(std::span<const std::size_t> index) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim_; ++a) flat = flat * n_ + index[static_cast<std::size_t>(a)];
  return flat;
}

void Grid::position_of(std::size_t flat, std::span<double> out) const {
  for (int a = dim_ - 1; a >= 0; --a) {
    out[static_cast<std::size_t>(a)] = position(flat % n_);
    flat /= n_;
  }
}

void Grid::frequency_of(std::size_t flat, std::span<double> out) const {
  for (int a = dim_ - 1; a >= 0; --a) {
    out[static_cast<std::size_t>(a)] = frequency(flat % n_);
    flat /= n_;
  }
}

Grid Grid::coarsened() const { return Grid(dim_, length_, n_ / 2); }

Grid Grid::refined() const { return Grid(dim_, length_, n_ * 2); }

Grid make_grid(int dim, double length, std::size_t samples_per_axis) {
  return Grid(dim, length, samples_per_axis);
}

SampledField::SampledField(Grid g, Domain dom, std::vector<complex> v)
    : grid(g), domain(dom), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw ParameterError("field has " + std::to_string(values.size()) +
                         " values, grid expects " + std::to_string(grid.size()));
  }
}

SampledField::SampledField(Grid g, Domain dom)
    : grid(g), domain(dom), values(g.size(), complex{}) {}

SampledField sample(const PointFunction& fn, const Grid& grid, Domain domain) {
  std::vector<complex> values(grid.size());
  std::vector<double> point(static_cast<std::size_t>(grid.dim()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (domain == Domain::position) {
      grid.position_of(k, point);
    } else {
      grid.frequency_of(k, point);
    }
    const complex v = fn(point);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream msg;
      msg << "non-finite sample at (";
      for (std::size_t a = 0; a < point.size(); ++a) msg << (a ? ", " : "") << point[a];
      msg << ")";
      throw SamplingError(msg.str(), point);
    }
    values[k] = v;
  }
  return SampledField(grid, domain, std::move(values));
}

SampledField forward_transform(const SampledField& f) {
  if (f.domain != Domain::position) {
    throw GridMismatch("forward_transform expects a position-domain field");
  }
  const double weight = std::pow(f.grid.dx(), f.grid.dim());
  return SampledField(f.grid, Domain::frequency,
                      centered_dft(f, detail::FftSign::forward, weight));
}

SampledField inverse_transform(const SampledField& F) {
  if (F.domain != Domain::frequency) {
    throw GridMismatch("inverse_transform expects a frequency-domain field");
  }
  const double weight = std::pow(F.grid.dxi(), F.grid.dim());
  return SampledField(F.grid, Domain::position,
                      centered_dft(F, detail::FftSign::backward, weight));
}

SampledField decimate(const SampledField& f) {
  const Grid coarse = f.grid.coarsened();
  std::vector<complex> values(coarse.size());
  const auto dim = static_cast<std::size_t>(f.grid.dim());
  std::vector<std::size_t> index(dim);
  for (std::size_t k = 0; k < coarse.size(); ++k) {
    coarse.unravel(k, index);
    // Position index i on the coarse grid sits at fine index 2i. On the
    // frequency lattice the origin is at N/2, so i maps to i + N/4.
    for (auto& i : index) {
      i = f.domain == Domain::position ? 2 * i : i + coarse.samples_per_axis() / 2;
    }
    values[k] = f.values[f.grid.ravel(index)];
  }
  return SampledField(coarse, f.domain, std::move(values));
}

double l2_norm(const SampledField& f) {
  std::vector<double> sq(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) sq[k] = std::norm(f.values[k]);
  const double h = f.domain == Domain::position ? f.grid.dx() : f.grid.dxi();
  return std::sqrt(pairwise_sum(sq) * std::pow(h, f.grid.dim()));
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 8;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

void PairwiseRowAccumulator::add(std::span<const double> row) {
  if (row.size() != width_) throw ParameterError("row width mismatch in accumulator");
  std::vector<double> carry(row.begin(), row.end());
  std::size_t level = 0;
  while (level < occupied_.size() && occupied_[level]) {
    auto& stored = levels_[level];
    for (std::size_t i = 0; i < width_; ++i) carry[i] = stored[i] + carry[i];
    occupied_[level] = false;
    ++level;
  }
  if (level == occupied_.size()) {
    levels_.emplace_back();
    occupied_.push_back(false);
  }
  levels_[level] = std::move(carry);
  occupied_[level] = true;
  ++count_;
}

std::vector<double> PairwiseRowAccumulator::total() const {
  std::vector<double> sum(width_, 0.0);
  for (std::size_t level = 0; level < occupied_.size(); ++level) {
    if (!occupied_[level]) continue;
    for (std::size_t i = 0; i < width_; ++i) sum[i] += levels_[level][i];
  }
  return sum;
}

}  // namespace tfmult
