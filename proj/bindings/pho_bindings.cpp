#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pho/classical.hpp"
#include "pho/errors.hpp"
#include "pho/measures.hpp"
#include "pho/oracle.hpp"
#include "pho/quantum.hpp"
#include "pho/special_functions.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace cl = pho::classical;
namespace qm = pho::quantum;
namespace ms = pho::measures;

PYBIND11_MODULE(_pho1d, m) {
    m.doc() = "1D pseudoharmonic oscillator: spectra, waveforms and "
              "quantum-information measures (compiled core)";

    py::register_exception<pho::below_threshold_error>(m, "BelowThresholdError",
                                                       PyExc_ValueError);
    py::register_exception<pho::near_threshold_error>(m, "NearThresholdError",
                                                      PyExc_RuntimeError);

    m.attr("X_OMEGA") = cl::kXOmega;
    m.attr("X_2OMEGA") = cl::kX2Omega;
    m.attr("D_OMEGA") = cl::kDOmega;

    py::class_<cl::PhoModel>(m, "PhoModel", "oscillator configuration")
        .def(py::init<double>(), "a"_a)
        .def_readonly("a", &cl::PhoModel::a)
        .def_readonly("eta", &cl::PhoModel::eta)
        .def_readonly("x_z", &cl::PhoModel::x_z)
        .def("__repr__", [](const cl::PhoModel& mdl) {
            return "PhoModel(a=" + std::to_string(mdl.a) + ")";
        });

    m.def("potential",
          [](const cl::PhoModel& mdl, double x) { return cl::potential(mdl, x); },
          "model"_a, "x"_a, "V(x) in units of D_omega");
    m.def("turning_points",
          [](const cl::PhoModel& mdl, double e) {
              return cl::turning_points({mdl, e});
          },
          "model"_a, "energy_d"_a);
    m.def("symmetry_ratio",
          [](const cl::PhoModel& mdl, double e) {
              return cl::symmetry_ratio({mdl, e});
          },
          "model"_a, "energy_d"_a);
    m.def("period", [](const cl::PhoModel& mdl) { return cl::period(mdl); },
          "model"_a);
    m.def("average_speed",
          [](const cl::PhoModel& mdl, double e) {
              return cl::average_speed({mdl, e});
          },
          "model"_a, "energy_d"_a);

    py::class_<qm::Orbital>(m, "Orbital")
        .def(py::init<cl::PhoModel, int>(), "model"_a, "n"_a)
        .def_readonly("model", &qm::Orbital::model)
        .def_readonly("n", &qm::Orbital::n);

    m.def("energy", &qm::energy, "orbital"_a, "E_n in units of hbar*omega");
    m.def("psi", &qm::psi, "orbital"_a, "x"_a);
    m.def("rho", &qm::rho, "orbital"_a, "x"_a);
    m.def("phi",
          [](const qm::Orbital& orb, double k) {
              auto v = qm::phi(orb, k);
              return std::make_pair(v.re, v.im);
          },
          "orbital"_a, "k"_a, "momentum waveform (re, im)");
    m.def("gamma_density", &qm::gamma_density, "orbital"_a, "k"_a);

    py::class_<ms::MeasureReport>(m, "MeasureReport")
        .def_readonly("a", &ms::MeasureReport::a)
        .def_readonly("n", &ms::MeasureReport::n)
        .def_readonly("mean_x", &ms::MeasureReport::mean_x)
        .def_readonly("sigma_x", &ms::MeasureReport::sigma_x)
        .def_readonly("sigma_k", &ms::MeasureReport::sigma_k)
        .def_readonly("heisenberg_product", &ms::MeasureReport::heisenberg_product)
        .def_readonly("shannon_x", &ms::MeasureReport::shannon_x)
        .def_readonly("shannon_k", &ms::MeasureReport::shannon_k)
        .def_readonly("shannon_sum", &ms::MeasureReport::shannon_sum)
        .def_readonly("fisher_x", &ms::MeasureReport::fisher_x)
        .def_readonly("fisher_k", &ms::MeasureReport::fisher_k)
        .def_readonly("onicescu_x", &ms::MeasureReport::onicescu_x)
        .def_readonly("onicescu_k", &ms::MeasureReport::onicescu_k)
        .def_readonly("ng_x", &ms::MeasureReport::ng_x)
        .def_readonly("ng_k", &ms::MeasureReport::ng_k)
        .def_readonly("ng_q", &ms::MeasureReport::ng_q);

    m.def("measure_report",
          [](const qm::Orbital& orb) { return ms::measure_report(orb); },
          "orbital"_a);
    m.def("alpha_threshold", &ms::alpha_threshold, "model"_a);
    m.def("conjugate_beta", &ms::conjugate_beta, "alpha"_a);
    m.def("renyi_x",
          [](const qm::Orbital& orb, double alpha) { return ms::renyi_x(orb, alpha); },
          "orbital"_a, "alpha"_a);
    m.def("renyi_k",
          [](const qm::Orbital& orb, double alpha) { return ms::renyi_k(orb, alpha); },
          "orbital"_a, "alpha"_a);
    m.def("renyi_k_sup", &ms::renyi_k_sup, "orbital"_a,
          "beta -> infinity endpoint via the density maximum");
    m.def("tsallis_x",
          [](const qm::Orbital& orb, double alpha) { return ms::tsallis_x(orb, alpha); },
          "orbital"_a, "alpha"_a);
    m.def("tsallis_k",
          [](const qm::Orbital& orb, double alpha) { return ms::tsallis_k(orb, alpha); },
          "orbital"_a, "alpha"_a);
    m.def("shannon_x",
          [](const qm::Orbital& orb) { return ms::shannon_x(orb); }, "orbital"_a);
    m.def("shannon_k",
          [](const qm::Orbital& orb) { return ms::shannon_k(orb); }, "orbital"_a);
    m.def("uncertainty_gaps",
          [](const qm::Orbital& orb, double alpha) {
              auto g = ms::uncertainty_gaps(orb, alpha);
              return std::make_pair(g.delta_renyi, g.delta_tsallis);
          },
          "orbital"_a, "alpha"_a, "(delta_renyi, delta_tsallis)");

    m.def("fd_energies",
          [](const cl::PhoModel& mdl, int n_max, int points) {
              auto grid = pho::oracle::GridSpec::standard(mdl, n_max, points);
              return pho::oracle::fd_energies_richardson(mdl, n_max, grid);
          },
          "model"_a, "n_max"_a, "points"_a = 4096,
          "finite-difference oracle energies (hbar*omega units)");
}
