// Copyright 2026 The entdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entdist/cli.hpp"
#include "entdist/errors.hpp"
#include "entdist/protocols.hpp"

namespace py = pybind11;
using namespace entdist;

namespace {

// States cross the boundary as (matrix, dims) pairs.
DensityMatrix dm(const CMatrix& m, const std::vector<int>& dims) {
  return DensityMatrix(m, SystemShape(dims));
}

py::dict report_dict(const OptimizerReport& r) {
  py::dict d;
  d["value"] = r.value;
  d["iterations"] = r.iterations;
  d["converged"] = r.converged;
  d["residual"] = r.residual;
  d["threshold"] = r.threshold;
  d["method"] = r.method;
  d["point"] = r.point;
  d["params"] = r.params;
  return d;
}

py::dict ineq_dict(const IneqResult& r) {
  py::dict d;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["slack"] = r.slack;
  d["holds"] = r.holds;
  return d;
}

OptimizerConfig make_cfg(int max_iters, double tol) {
  OptimizerConfig c;
  c.max_iters = max_iters;
  c.tol = tol;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement distribution through noisy channels";

  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<IndexError>(m, "IndexError", PyExc_IndexError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

  // linear algebra
  m.def("tensor", py::overload_cast<const CMatrix&, const CMatrix&>(&entdist::tensor));
  m.def("partial_trace",
        [](const CMatrix& x, const std::vector<int>& dims, const std::vector<int>& keep) {
          return partial_trace(x, SystemShape(dims), keep);
        },
        py::arg("m"), py::arg("dims"), py::arg("keep"));
  m.def("partial_transpose",
        [](const CMatrix& x, const std::vector<int>& dims, const std::vector<int>& flip) {
          return partial_transpose(x, SystemShape(dims), flip);
        },
        py::arg("m"), py::arg("dims"), py::arg("flip"));
  m.def("eigvalsh", [](const CMatrix& x) { return herm_eig(x).values; });
  m.def("schatten_norm", &schatten_norm, py::arg("m"), py::arg("p"));
  m.def("rel_entropy", &rel_entropy, py::arg("rho"), py::arg("sigma"));
  m.def("von_neumann_entropy", &von_neumann_entropy);
  m.def("binary_entropy", &binary_entropy);

  // states
  m.def("max_entangled", [](int d) { return max_entangled(d).vec(); });
  m.def("alpha_state", [](double a) { return alpha_state(a).vec(); });
  m.def("ef_squared_witness_state", [] { return ef_squared_witness_state().vec(); });
  m.def("random_mixed",
        [](const std::vector<int>& dims, std::uint64_t seed) {
          return random_mixed(SystemShape(dims), {seed, Ensemble::ginibre_mixed}).mat();
        },
        py::arg("dims"), py::arg("seed"));
  m.def("random_pure",
        [](const std::vector<int>& dims, std::uint64_t seed) {
          return random_pure(SystemShape(dims), {seed, Ensemble::haar_pure}).vec();
        },
        py::arg("dims"), py::arg("seed"));

  // channels
  py::class_<KrausChannel>(m, "KrausChannel")
      .def(py::init<std::vector<CMatrix>>(), py::arg("kraus"))
      .def_property_readonly("dim", &KrausChannel::dim)
      .def_property_readonly("kraus", &KrausChannel::kraus)
      .def("__call__", &KrausChannel::operator())
      .def("choi", &KrausChannel::choi);
  m.def("identity_channel", &identity_channel);
  m.def("amplitude_damping", &amplitude_damping, py::arg("gamma"));
  m.def("phase_damping", &phase_damping, py::arg("p"));
  m.def("pauli_channel",
        [](const std::array<double, 4>& p) { return pauli_channel(PauliSpec{p}); },
        py::arg("p"));
  m.def("weyl_channel",
        [](int d, const std::vector<double>& p) { return weyl_channel(d, p); });
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("random_channel", &random_channel, py::arg("d"), py::arg("n_kraus"), py::arg("seed"));
  m.def("channels_equal", &channels_equal, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10);
  m.def("apply_on",
        [](const KrausChannel& ch, const CMatrix& rho, const std::vector<int>& dims, int target) {
          return apply_on(ch, dm(rho, dims), target).mat();
        },
        py::arg("channel"), py::arg("rho"), py::arg("dims"), py::arg("target"));

  // measures
  auto cut_fn = [&m](const char* name, double (*f)(const DensityMatrix&, const Bipartition&)) {
    m.def(name,
          [f](const CMatrix& rho, const std::vector<int>& dims, const std::vector<int>& left,
              const std::vector<int>& right) { return f(dm(rho, dims), {left, right}); },
          py::arg("rho"), py::arg("dims"), py::arg("left"), py::arg("right"));
  };
  cut_fn("log_negativity", &log_negativity);
  cut_fn("negativity", &negativity);
  cut_fn("eof", static_cast<double (*)(const DensityMatrix&, const Bipartition&)>(&eof));
  m.def("concurrence", [](const CMatrix& rho) { return concurrence(dm(rho, {2, 2})); });
  m.def("ree",
        [](const CMatrix& rho, const std::vector<int>& dims, const std::vector<int>& left,
           const std::vector<int>& right, int max_iters, double tol) {
          return report_dict(ree_ppt(dm(rho, dims), {left, right}, make_cfg(max_iters, tol)));
        },
        py::arg("rho"), py::arg("dims"), py::arg("left"), py::arg("right"),
        py::arg("max_iters") = 5000, py::arg("tol") = 1e-9);
  m.def("ep_distance",
        [](const CMatrix& rho, const std::vector<int>& dims, const std::vector<int>& left,
           const std::vector<int>& right, int p) {
          return report_dict(ep_distance(dm(rho, dims), {left, right}, p));
        },
        py::arg("rho"), py::arg("dims"), py::arg("left"), py::arg("right"), py::arg("p"));
  m.def("discord",
        [](const CMatrix& rho, const std::vector<int>& dims, int measured,
           const std::vector<int>& rest, const std::string& distance) {
          return report_dict(
              discord(dm(rho, dims), measured, rest, parse_discord_distance(distance)));
        },
        py::arg("rho"), py::arg("dims"), py::arg("measured"), py::arg("rest"),
        py::arg("distance") = "relative_entropy");

  // protocols
  m.def("distributed_entanglement",
        [](const CMatrix& rho, const std::vector<int>& dims, const KrausChannel& ch,
           const std::string& measure) {
          const auto d = distributed_entanglement(
              {dm(rho, dims), ch, parse_quantifier(measure)});
          return py::make_tuple(d.initial, d.final, d.difference);
        },
        py::arg("rho"), py::arg("dims"), py::arg("channel"), py::arg("measure") = "ree");
  m.def("check_main_inequality",
        [](const CMatrix& rho, const std::vector<int>& dims, const std::string& measure,
           const std::string& distance) {
          return ineq_dict(check_main_inequality(dm(rho, dims), parse_quantifier(measure),
                                                 parse_discord_distance(distance)));
        },
        py::arg("rho"), py::arg("dims"), py::arg("measure") = "ree",
        py::arg("distance") = "relative_entropy");
  m.def("alpha_max", &alpha_max, py::arg("gamma"));
  m.def("ad_log_negativity", &ad_log_negativity, py::arg("gamma"), py::arg("alpha"));
  m.def("little_entanglement_witness", [](double eps) {
    const auto w = little_entanglement_witness(eps);
    py::dict d;
    d["alpha"] = w.alpha;
    d["gamma"] = w.gamma;
    d["en_state"] = w.en_state;
    d["advantage"] = ineq_dict(w.advantage);
    return d;
  });
  m.def("teleport_through",
        [](const CMatrix& resource, const std::vector<int>& rdims, const CMatrix& rho,
           const std::vector<int>& dims, const std::vector<CMatrix>& corrections) {
          return teleport_through(dm(resource, rdims), dm(rho, dims), corrections).mat();
        },
        py::arg("resource"), py::arg("resource_dims"), py::arg("rho"), py::arg("dims"),
        py::arg("corrections"));
  m.def("suite_names", &suite_names);
  m.def("run_suite_json",
        [](const std::string& name, std::uint64_t seed, int trials, bool reversed) {
          SuiteOptions o;
          o.seed = seed;
          o.trials = trials;
          o.inject_reversed_time = reversed;
          py::gil_scoped_release release;
          return to_json(run_suite(name, o));
        },
        py::arg("name"), py::arg("seed") = 2026, py::arg("trials") = -1,
        py::arg("inject_reversed_time") = false);

  // figure tables as CSV text
  m.def("table_csv",
        [](const std::string& command, const std::vector<double>& gamma,
           const std::vector<double>& alpha, const std::vector<double>& p) {
          auto cfg = cli::default_config(cli::parse_command(command));
          if (!gamma.empty()) cfg.gamma_grid = gamma;
          if (!alpha.empty()) cfg.alpha_grid = alpha;
          if (!p.empty()) cfg.p_grid = p;
          switch (cfg.command) {
            case cli::Command::fig_ad:
              return cli::cmd_fig_ad(cfg).csv();
            case cli::Command::crossover:
              return cli::cmd_crossover(cfg).csv();
            case cli::Command::phase_damping:
              return cli::cmd_phase_damping(cfg).csv();
            case cli::Command::check:
              break;
          }
          throw ContractError("table_csv: use run_suite_json for checks");
        },
        py::arg("command"), py::arg("gamma_grid") = std::vector<double>{},
        py::arg("alpha_grid") = std::vector<double>{}, py::arg("p_grid") = std::vector<double>{});
}
