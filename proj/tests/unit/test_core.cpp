#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <vector>

#include "tfmult/core.hpp"

using namespace tfmult;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

complex gaussian(std::span<const double> x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return std::exp(-kPi * r2);
}

double max_abs_diff(const SampledField& a, const SampledField& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

}  // namespace

TEST_CASE("grid spacing follows L/N and 1/L") {
  const Grid g(1, 16, 256);
  CHECK(g.dx() == 0.0625);
  CHECK(g.dxi() == 0.0625);
  CHECK(g.size() == 256);
  CHECK_THAT(g.dx() * g.dxi() * 256.0, WithinAbs(1.0, 1e-15));
}

TEST_CASE("grid counts N^d lattice points") {
  CHECK(Grid(2, 8, 64).size() == 4096);
  CHECK(Grid(3, 4, 8).size() == 512);
}

TEST_CASE("grid rejects invalid shapes") {
  CHECK_THROWS_AS(Grid(1, 16, 255), ParameterError);
  CHECK_THROWS_AS(Grid(1, 16, 4), ParameterError);
  CHECK_THROWS_AS(Grid(0, 16, 64), ParameterError);
  CHECK_THROWS_AS(Grid(4, 16, 64), ParameterError);
  CHECK_THROWS_AS(Grid(1, -1.0, 64), ParameterError);
  CHECK_THROWS_AS(Grid(1, std::numeric_limits<double>::infinity(), 64), ParameterError);
  try {
    Grid(1, 16, 255);
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("power of two") != std::string::npos);
  }
}

TEST_CASE("both lattices are centred with the origin at index N/2") {
  const Grid g(1, 16, 256);
  CHECK(g.position(128) == 0.0);
  CHECK(g.frequency(128) == 0.0);
  CHECK(g.position(0) == -8.0);
  CHECK(g.frequency(0) == -8.0);
  CHECK(g.position(255) < 8.0);
}

TEST_CASE("ravel and unravel are inverse") {
  const Grid g(3, 4, 8);
  std::vector<std::size_t> index(3);
  for (std::size_t k = 0; k < g.size(); k += 37) {
    g.unravel(k, index);
    CHECK(g.ravel(index) == k);
  }
  g.unravel(g.ravel(std::vector<std::size_t>{1, 2, 3}), index);
  CHECK(index == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("coarsened and refined grids keep the box") {
  const Grid g(2, 8, 64);
  CHECK(g.coarsened() == Grid(2, 8, 32));
  CHECK(g.refined() == Grid(2, 8, 128));
  CHECK_THROWS_AS(Grid(1, 8, 8).coarsened(), ParameterError);
}

TEST_CASE("sampling") {
  const Grid g(1, 16, 256);
  SECTION("constant one gives an all-ones field") {
    const auto f = sample([](std::span<const double>) { return complex(1.0); }, g);
    for (const auto& v : f.values) CHECK(v == complex(1.0));
  }
  SECTION("the Gaussian is one at the origin") {
    const auto f = sample(gaussian, g);
    CHECK(f.values[128] == complex(1.0));
  }
  SECTION("a non-finite value raises SamplingError with its coordinate") {
    try {
      sample([](std::span<const double> x) { return complex(1.0 / x[0]); }, g);
      FAIL("expected SamplingError");
    } catch (const SamplingError& e) {
      CHECK(e.coordinate() == std::vector<double>{0.0});
    }
  }
  SECTION("size mismatch is rejected") {
    CHECK_THROWS_AS(SampledField(g, Domain::position, std::vector<complex>(10)), ParameterError);
  }
}

TEST_CASE("the Gaussian is its own Fourier transform") {
  for (int dim : {1, 2}) {
    const Grid g = dim == 1 ? Grid(1, 16, 256) : Grid(2, 16, 128);
    const auto f = sample(gaussian, g);
    const auto F = forward_transform(f);
    CHECK(F.domain == Domain::frequency);
    const auto exact = sample(gaussian, g, Domain::frequency);
    CHECK(max_abs_diff(F, exact) < 1e-12);
  }
}

TEST_CASE("transforms of zero vanish") {
  const Grid g(1, 16, 64);
  const SampledField zero(g);
  for (const auto& v : forward_transform(zero).values) CHECK(v == complex(0.0));
  for (const auto& v : inverse_transform(SampledField(g, Domain::frequency)).values) {
    CHECK(v == complex(0.0));
  }
}

TEST_CASE("forward and inverse transforms round-trip") {
  const Grid g(1, 16, 256);
  const auto f = sample(
      [](std::span<const double> x) {
        return complex(std::exp(-kPi * x[0] * x[0]) * std::cos(3.0 * x[0]), std::sin(x[0]) / (1.0 + x[0] * x[0]));
      },
      g);
  const auto back = inverse_transform(forward_transform(f));
  CHECK(back.domain == Domain::position);
  CHECK(max_abs_diff(back, f) < 1e-12 * l2_norm(f) * 4.0);

  const auto G = forward_transform(sample(gaussian, g));
  CHECK(max_abs_diff(inverse_transform(G), sample(gaussian, g)) < 1e-12);
}

TEST_CASE("Plancherel holds with the lattice weights") {
  const Grid g(2, 8, 32);
  const auto f = sample(
      [](std::span<const double> x) { return complex(std::exp(-x[0] * x[0]) * x[1], std::exp(-x[1] * x[1])); },
      g);
  const auto F = forward_transform(f);
  CHECK_THAT(l2_norm(F), WithinRel(l2_norm(f), 1e-12));
  CHECK_THAT(l2_norm(inverse_transform(F)), WithinRel(l2_norm(F), 1e-12));
}

TEST_CASE("transforms reject the wrong domain") {
  const Grid g(1, 16, 64);
  CHECK_THROWS_AS(forward_transform(SampledField(g, Domain::frequency)), GridMismatch);
  CHECK_THROWS_AS(inverse_transform(SampledField(g, Domain::position)), GridMismatch);
}

TEST_CASE("decimation keeps the same function on the coarse grid") {
  const Grid g(2, 8, 64);
  for (Domain d : {Domain::position, Domain::frequency}) {
    const auto fine = sample(gaussian, g, d);
    const auto coarse = decimate(fine);
    CHECK(coarse.grid == g.coarsened());
    CHECK(max_abs_diff(coarse, sample(gaussian, g.coarsened(), d)) == 0.0);
  }
}

TEST_CASE("L2 norm of the Gaussian") {
  const Grid g(1, 16, 256);
  CHECK_THAT(l2_norm(sample(gaussian, g)), WithinRel(std::pow(2.0, -0.25), 1e-13));
}

TEST_CASE("pairwise summation is exact on representable sums and order-fixed") {
  std::vector<double> ones(1000, 1.0);
  CHECK(pairwise_sum(ones) == 1000.0);
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  std::vector<double> mixed;
  for (int i = 0; i < 777; ++i) mixed.push_back(1.0 / (1.0 + i));
  CHECK(pairwise_sum(mixed) == pairwise_sum(mixed));
  CHECK_THAT(pairwise_sum(mixed), WithinRel(std::accumulate(mixed.begin(), mixed.end(), 0.0), 1e-14));
}

TEST_CASE("row accumulator sums columns") {
  PairwiseRowAccumulator acc(3);
  for (int r = 0; r < 11; ++r) acc.add(std::vector<double>{1.0, double(r), -1.0});
  const auto total = acc.total();
  CHECK(acc.rows() == 11);
  CHECK(total == std::vector<double>{11.0, 55.0, -11.0});
  CHECK_THROWS(acc.add(std::vector<double>{1.0}));
}
