#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tfmult/verify.hpp"

namespace py = pybind11;
using namespace tfmult;

namespace {

using ComplexArray = py::array_t<complex, py::array::c_style | py::array::forcecast>;

std::vector<py::ssize_t> lattice_shape(const Grid& g) {
  return std::vector<py::ssize_t>(static_cast<std::size_t>(g.dim()),
                                  static_cast<py::ssize_t>(g.samples_per_axis()));
}

SampledField to_field(const Grid& g, const ComplexArray& a, Domain domain) {
  if (static_cast<std::size_t>(a.size()) != g.size()) {
    throw ParameterError("array has " + std::to_string(a.size()) + " entries, grid needs " +
                         std::to_string(g.size()));
  }
  return SampledField(g, domain, std::vector<complex>(a.data(), a.data() + a.size()));
}

ComplexArray to_array(const Grid& g, const std::vector<complex>& values) {
  ComplexArray out(lattice_shape(g));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

ComplexArray to_array(const SampledField& f) { return to_array(f.grid, f.values); }

py::dict report_dict(const NormReport& r) {
  py::dict d;
  d["value"] = r.value;
  d["p"] = r.p;
  d["q"] = r.q;
  d["refinement_estimate"] = r.refinement_estimate;
  d["warnings"] = r.warnings;
  return d;
}

NormOptions norm_options(std::size_t stride, double interior, bool refinement) {
  return NormOptions{StftOptions{stride, interior}, refinement};
}

Window window_from(const Grid& g, const std::optional<ComplexArray>& window) {
  return window ? custom_window(to_field(g, *window, Domain::position)) : gaussian_window(g);
}

Symbol symbol_from(const Grid& g, const ComplexArray& values) {
  return symbol_custom(g, std::vector<complex>(values.data(), values.data() + values.size()), "array");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Short-time Fourier transforms, modulation-space norms and Fourier multipliers";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<GridMismatch>(m, "GridMismatch", PyExc_ValueError);

  py::class_<Grid>(m, "Grid")
      .def(py::init<int, double, std::size_t>(), py::arg("d"), py::arg("L"), py::arg("N"))
      .def_property_readonly("dim", &Grid::dim)
      .def_property_readonly("length", &Grid::length)
      .def_property_readonly("samples_per_axis", &Grid::samples_per_axis)
      .def_property_readonly("size", &Grid::size)
      .def_property_readonly("dx", &Grid::dx)
      .def_property_readonly("dxi", &Grid::dxi)
      .def("positions", [](const Grid& g) {
        py::array_t<double> out(static_cast<py::ssize_t>(g.samples_per_axis()));
        for (std::size_t i = 0; i < g.samples_per_axis(); ++i) out.mutable_at(i) = g.position(i);
        return out;
      }, "Position lattice along one axis.")
      .def("frequencies", [](const Grid& g) {
        py::array_t<double> out(static_cast<py::ssize_t>(g.samples_per_axis()));
        for (std::size_t i = 0; i < g.samples_per_axis(); ++i) out.mutable_at(i) = g.frequency(i);
        return out;
      }, "Frequency lattice along one axis.")
      .def("__eq__", [](const Grid& a, const Grid& b) { return a == b; })
      .def("__repr__", [](const Grid& g) {
        return "Grid(d=" + std::to_string(g.dim()) + ", L=" + py::str(py::float_(g.length())).cast<std::string>() +
               ", N=" + std::to_string(g.samples_per_axis()) + ")";
      });

  m.def("forward_transform",
        [](const Grid& g, const ComplexArray& f) { return to_array(forward_transform(to_field(g, f, Domain::position))); },
        py::arg("grid"), py::arg("f"));
  m.def("inverse_transform",
        [](const Grid& g, const ComplexArray& F) { return to_array(inverse_transform(to_field(g, F, Domain::frequency))); },
        py::arg("grid"), py::arg("F"));
  m.def("gaussian_window", [](const Grid& g) { return to_array(gaussian_window(g).field); }, py::arg("grid"));
  m.def("bump_chi", [](const Grid& g) { return to_array(bump_chi(g).field); }, py::arg("grid"));
  m.def("annulus_psi", [](const Grid& g) { return to_array(annulus_psi(g).field); }, py::arg("grid"));

  m.def("stft",
        [](const Grid& g, const ComplexArray& f, std::optional<ComplexArray> window, std::size_t stride, double interior) {
          const StftMatrix v = stft(to_field(g, f, Domain::position), window_from(g, window), StftOptions{stride, interior});
          ComplexArray values({static_cast<py::ssize_t>(v.rows()), static_cast<py::ssize_t>(v.cols())});
          std::copy(v.values.begin(), v.values.end(), values.mutable_data());
          return py::make_tuple(v.positions, values);
        },
        py::arg("grid"), py::arg("f"), py::arg("window") = py::none(), py::arg("stride") = 1,
        py::arg("interior") = 1.0,
        "Returns (flat position indices, matrix with one row per position).");

  m.def("modulation_norm",
        [](const Grid& g, const ComplexArray& f, double p, double q, std::optional<ComplexArray> window,
           std::size_t stride, double interior, bool refinement) {
          return report_dict(modulation_norm(to_field(g, f, Domain::position), window_from(g, window), p, q,
                                             norm_options(stride, interior, refinement)));
        },
        py::arg("grid"), py::arg("f"), py::arg("p"), py::arg("q"), py::arg("window") = py::none(),
        py::arg("stride") = 1, py::arg("interior") = 1.0, py::arg("refinement") = true);

  auto bind_norm = [&m](const char* name, NormReport (*fn)(const SampledField&, const Window&, const NormOptions&)) {
    m.def(name,
          [fn](const Grid& g, const ComplexArray& sigma, std::optional<ComplexArray> window, std::size_t stride,
               double interior, bool refinement) {
            return report_dict(fn(to_field(g, sigma, Domain::position), window_from(g, window),
                                  norm_options(stride, interior, refinement)));
          },
          py::arg("grid"), py::arg("sigma"), py::arg("window") = py::none(), py::arg("stride") = 1,
          py::arg("interior") = 1.0, py::arg("refinement") = true);
  };
  bind_norm("amalgam_norm_wfl1", &amalgam_norm_wfl1);
  bind_norm("m_inf_1_norm", &m_inf_1_norm);
  bind_norm("m_1_inf_norm", &m_1_inf_norm);

  m.def("fl1_norm",
        [](const Grid& g, const ComplexArray& sigma, bool refinement) {
          return report_dict(fl1_norm(to_field(g, sigma, Domain::position), refinement));
        },
        py::arg("grid"), py::arg("sigma"), py::arg("refinement") = true);

  m.def("symbol_unimodular",
        [](const Grid& g, double alpha, double t, double r) { return to_array(g, symbol_unimodular(g, alpha, t, r).values); },
        py::arg("grid"), py::arg("alpha"), py::arg("t"), py::arg("r") = 1.0);
  m.def("symbol_sin_singular",
        [](const Grid& g, double alpha, double delta) { return to_array(g, symbol_sin_singular(g, alpha, delta).values); },
        py::arg("grid"), py::arg("alpha"), py::arg("delta"));
  m.def("symbol_gaussian_chirp",
        [](const Grid& g, double t) { return to_array(g, symbol_gaussian_chirp(g, t).values); },
        py::arg("grid"), py::arg("t"));
  m.def("symbol_piecewise",
        [](const Grid& g, double b, std::uint64_t seed) {
          return to_array(g, symbol_piecewise(g, std::vector<double>(static_cast<std::size_t>(g.dim()), b),
                                              random_signs(seed)).values);
        },
        py::arg("grid"), py::arg("b"), py::arg("seed") = verify::kDefaultSeed,
        "Piecewise-constant symbol with random +-1 coefficients on cells of side b.");

  m.def("apply_multiplier",
        [](const Grid& g, const ComplexArray& sigma, const ComplexArray& f) {
          return to_array(apply_multiplier(symbol_from(g, sigma), to_field(g, f, Domain::position)));
        },
        py::arg("grid"), py::arg("sigma"), py::arg("f"));
  m.def("schrodinger_propagate",
        [](const Grid& g, const ComplexArray& f, double t) {
          return to_array(schrodinger_propagate(to_field(g, f, Domain::position), t).u);
        },
        py::arg("grid"), py::arg("f"), py::arg("t"));
  m.def("wave_propagate",
        [](const Grid& g, const ComplexArray& f, const ComplexArray& h, double t) {
          const PropagatorState s = wave_propagate(to_field(g, f, Domain::position), to_field(g, h, Domain::position), t);
          return py::make_tuple(to_array(s.u), to_array(*s.v));
        },
        py::arg("grid"), py::arg("f"), py::arg("g"), py::arg("t"), "Returns (u, du/dt) at time t.");
  m.def("wave_energy",
        [](const Grid& g, const ComplexArray& u, const ComplexArray& v) {
          return wave_energy(to_field(g, u, Domain::position), to_field(g, v, Domain::position));
        },
        py::arg("grid"), py::arg("u"), py::arg("v"));

  m.def("chirp_stft_oracle", &verify::chirp_stft_oracle, py::arg("x"), py::arg("omega"), py::arg("t"));
  m.def("verify_chirp_stft",
        [](const Grid& g, double t, std::size_t stride) {
          const auto r = verify::verify_chirp_stft(g, t, stride);
          py::dict d;
          d["t"] = r.t;
          d["max_abs_error"] = r.max_abs_error;
          d["points_checked"] = r.points_checked;
          d["warnings"] = r.warnings;
          return d;
        },
        py::arg("grid"), py::arg("t"), py::arg("stride") = 1);
  m.def("verify_amalgam_constants",
        [](const Grid& g, const std::vector<double>& t_list, std::size_t stride, double tolerance) {
          verify::AmalgamOptions options;
          options.stft.stride = stride;
          options.tolerance = tolerance;
          options.include_m1inf = g.dim() == 1;
          py::list rows;
          for (const auto& r : verify::verify_amalgam_constants(g, t_list, options).rows) {
            py::dict d;
            d["t"] = r.t;
            d["samples_per_axis"] = r.grid.samples_per_axis;
            d["w_measured"] = r.w_measured;
            d["w_predicted"] = r.w_predicted;
            d["m1inf_measured"] = r.m1inf_measured;
            d["m1inf_predicted"] = r.m1inf_predicted;
            d["passed"] = r.passed;
            rows.append(d);
          }
          return rows;
        },
        py::arg("grid"), py::arg("t_list"), py::arg("stride") = 1, py::arg("tolerance") = 0.02);
}
