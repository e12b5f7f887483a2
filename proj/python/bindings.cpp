#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symwork/dicke.hpp"
#include "symwork/errors.hpp"
#include "symwork/measurement.hpp"
#include "symwork/regime.hpp"
#include "symwork/thermal.hpp"
#include "symwork/work.hpp"

namespace py = pybind11;
using namespace symwork;

PYBIND11_MODULE(_core, m) {
  m.doc() = "symwork C++ core";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvariantError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::enum_<Outcome>(m, "Outcome").value("ground", Outcome::ground).value("excited", Outcome::excited);
  py::enum_<Regime>(m, "Regime")
      .value("collective", Regime::collective)
      .value("individual", Regime::individual);

  py::class_<DickeKet>(m, "DickeKet")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("n"), py::arg("k"))
      .def_property_readonly("n_particles", &DickeKet::n_particles)
      .def_property_readonly("excitations", &DickeKet::excitations);

  py::class_<ParticleSplit>(m, "ParticleSplit")
      .def_readonly("c_ground", &ParticleSplit::c_ground)
      .def_readonly("c_excited", &ParticleSplit::c_excited);

  m.def("make_dicke", &make_dicke, py::arg("n"), py::arg("k"));
  m.def("split_one_particle", &split_one_particle, py::arg("state"));
  m.def("embed_full", &embed_full, py::arg("state"), py::arg("cap") = kDefaultOracleCap);

  py::class_<ThermalParams>(m, "ThermalParams")
      .def(py::init([](double beta_tilde, double omega_eg, int k_max) {
             ThermalParams p{beta_tilde, omega_eg, k_max};
             p.validate();
             return p;
           }),
           py::arg("beta_tilde"), py::arg("omega_eg") = 1.0, py::arg("k_max") = 1)
      .def_readonly("beta_tilde", &ThermalParams::beta_tilde)
      .def_readonly("omega_eg", &ThermalParams::omega_eg)
      .def_readonly("k_max", &ThermalParams::k_max);

  py::class_<SymmetricDensity>(m, "SymmetricDensity")
      .def(py::init<std::int64_t, std::vector<double>>(), py::arg("n"), py::arg("weights"))
      .def_property_readonly("n_particles", &SymmetricDensity::n_particles)
      .def_property_readonly("weights", [](const SymmetricDensity& r) {
        return std::vector<double>(r.weights().begin(), r.weights().end());
      })
      .def("mean_excitation", &SymmetricDensity::mean_excitation);

  m.def("occupation_x", [](const ThermalParams& p) {
    const auto o = occupation_x(p);
    return py::make_tuple(o.x, o.p_tot);
  });
  m.def("thermal_state", &thermal_state, py::arg("n"), py::arg("params"));
  m.def("mean_energy", &mean_energy, py::arg("rho"), py::arg("params"));
  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
  m.def("entropy_lowT_approx", &entropy_lowT_approx, py::arg("x"), py::arg("beta_tilde"));
  m.def("photon_nbar", &photon_nbar, py::arg("beta_tilde"));

  py::class_<MeasurementResult>(m, "MeasurementResult")
      .def_readonly("outcome", &MeasurementResult::outcome)
      .def_readonly("probability", &MeasurementResult::probability)
      .def_readonly("conditional_state", &MeasurementResult::conditional_state);

  m.def("measure_one_boson", [](const SymmetricDensity& rho) {
    auto b = measure_one_boson(rho);
    return py::make_tuple(b.ground, b.excited);
  }, py::arg("rho"), "Returns (ground, excited) branches.");
  m.def("sample_outcomes", [](const SymmetricDensity& rho, std::uint64_t trials, std::uint64_t seed) {
    const auto c = sample_outcomes(rho, trials, seed);
    py::dict d;
    d["g"] = c.ground;
    d["e"] = c.excited;
    return d;
  }, py::arg("rho"), py::arg("trials"), py::arg("seed"));

  py::class_<EIWEParams>(m, "EIWEParams")
      .def(py::init([](double xi, double nbar, double omega_a) {
             EIWEParams p{xi, nbar, omega_a};
             p.validate();
             return p;
           }),
           py::arg("xi"), py::arg("nbar"), py::arg("omega_a") = 1.0);

  m.def("rethermalize", &rethermalize, py::arg("n"), py::arg("params"));
  m.def("extract_work", &extract_work, py::arg("s_ther"), py::arg("s_meas"), py::arg("params"));
  m.def("eiwe_work", &eiwe_work, py::arg("p"));
  m.def("two_mode_bell_work", &two_mode_bell_work, py::arg("params"));
  m.def("condensate_work", &condensate_work, py::arg("n"), py::arg("params"));
  m.def("run_cycles", [](std::int64_t n0, const ThermalParams& params, int n_cycles, std::uint64_t seed,
                         bool post_select_e) {
    const WorkLedger ledger = run_cycles(n0, params, n_cycles, seed, post_select_e);
    py::list rows;
    for (const auto& e : ledger.entries) {
      py::dict d;
      d["cycle"] = e.index;
      d["n_before"] = e.n_before;
      d["n_after"] = e.n_after;
      d["outcome"] = std::string(to_string(e.outcome));
      d["outcome_probability"] = e.outcome_probability;
      d["s_meas"] = e.s_meas;
      d["s_ther"] = e.s_ther;
      d["work_extracted"] = e.work_extracted;
      d["heat_from_bath"] = e.heat_from_bath;
      d["internal_energy_change"] = e.internal_energy_change;
      d["energy_removed_by_recoil"] = e.energy_removed_by_recoil;
      d["finite_size_correction"] = e.finite_size_correction;
      rows.append(d);
    }
    return rows;
  }, py::arg("n0"), py::arg("params"), py::arg("n_cycles"), py::arg("seed") = 0,
     py::arg("post_select_e") = true);

  py::class_<DensityGrid>(m, "DensityGrid")
      .def(py::init<int, std::vector<double>, std::vector<double>>(), py::arg("dims"),
           py::arg("spacings"), py::arg("values"))
      .def_property_readonly("dims", &DensityGrid::dims)
      .def("integral", &DensityGrid::integral);

  py::class_<RegimeVerdict>(m, "RegimeVerdict")
      .def_readonly("regime", &RegimeVerdict::regime)
      .def_readonly("omega_r", &RegimeVerdict::omega_r)
      .def_readonly("u_int", &RegimeVerdict::u_int);

  m.def("u_int_from_density", &u_int_from_density, py::arg("grid"), py::arg("n_particles"),
        py::arg("coupling") = 1.0, py::arg("norm_tolerance") = DensityGrid::kDefaultNormTolerance);
  m.def("recoil_gate", &recoil_gate, py::arg("omega_r"), py::arg("u_int"));
  m.def("phonon_dispersion", &phonon_dispersion, py::arg("c_spring"), py::arg("mass"),
        py::arg("k_momentum"), py::arg("a_lattice"));
}
