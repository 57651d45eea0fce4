#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "qforma/cli.hpp"
#include "qforma/errors.hpp"
#include "qforma/serialize.hpp"

namespace py = pybind11;

namespace {

using namespace qforma;

RootSystem make_rs(const std::string& type) {
  return RootSystem(CartanType::parse(type));
}

std::string root_system_doc(const std::string& type) {
  return root_system_json(make_rs(type)).dump();
}

std::string chevalley_verify_doc(const std::string& type, bool exhaustive,
                                 unsigned long long seed, int samples) {
  const RootSystem rs = make_rs(type);
  const ChevalleySystem cs(rs);
  return structure_report_json(
             rs.type(),
             cs.verify_structure_constants(exhaustive, seed, samples))
      .dump();
}

std::string constants_tsv(const std::string& type) {
  return structure_constants_tsv(ChevalleySystem(make_rs(type)));
}

std::string weight_report_doc(const std::string& type,
                              const std::vector<long long>& weight) {
  const RootSystem rs = make_rs(type);
  return weight_report_json(weight_report(rs, weight)).dump();
}

std::string rep_build_doc(const std::string& type,
                          const std::vector<long long>& weight,
                          long long dim_cap, bool with_matrices) {
  const RootSystem rs = make_rs(type);
  const ChevalleySystem cs(rs);
  const HighestWeightModule m(cs, weight, dim_cap);
  return (with_matrices ? module_matrices_json(m) : module_summary_json(m))
      .dump();
}

std::string rationality_check_doc(const std::string& type,
                                  const std::vector<long long>& weight,
                                  const std::string& form,
                                  long long dim_cap) {
  const RootSystem rs = make_rs(type);
  QFormSpec qf;
  if (form == "standard") {
    qf.kind = QFormSpec::STANDARD;
  } else if (form.rfind("twisted:", 0) == 0) {
    qf.kind = QFormSpec::TWISTED;
    qf.twist_index = std::stoi(form.substr(8));
    if (qf.twist_index < 0 || qf.twist_index >= rs.rank()) {
      throw std::invalid_argument("twist index out of range");
    }
  } else {
    throw std::invalid_argument("form must be 'standard' or 'twisted:K'");
  }
  const QFormDecision d = has_q_form_verdict(rs, weight, qf, dim_cap);
  return qform_decision_json(rs.type(), weight, qf, d).dump();
}

std::string classification_doc(int max_rank, int jobs, int su_max,
                               int so_max) {
  return classification_json(max_rank, classification_table(max_rank, jobs),
                             su_table(su_max), so_table(so_max))
      .dump();
}

std::string direct_sum_doc() {
  return direct_sum_example_json(direct_sum_example()).dump();
}

std::string quat_ramify_doc(const std::string& a, const std::string& b) {
  const BigRational ra(a);
  const BigRational rb(b);
  if (ra == 0 || rb == 0) {
    throw hypothesis_error("quaternion parameters must be nonzero");
  }
  return ramification_json(ra, rb, quaternion_ramification(ra, rb)).dump();
}

py::tuple run_cli_py(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("qforma");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact decision procedures for rational forms of compact Lie algebra "
      "modules";

  py::register_exception<qforma::cap_exceeded>(m, "CapExceeded");
  py::register_exception<qforma::hypothesis_error>(m, "HypothesisError");

  m.def("root_system", &root_system_doc, py::arg("type"),
        "canonical JSON record of a root system, e.g. root_system('B3')");
  m.def("chevalley_verify", &chevalley_verify_doc, py::arg("type"),
        py::arg("exhaustive") = false, py::arg("seed") = 0,
        py::arg("samples") = 500,
        "JSON report of the bracket-table checks");
  m.def("structure_constants_tsv", &constants_tsv, py::arg("type"),
        "TSV rows (alpha, beta, N) of the integral structure constants");
  m.def("weight_report", &weight_report_doc, py::arg("type"),
        py::arg("weight"),
        "self-duality, coefficient sum, and root-lattice membership of a "
        "dominant weight (JSON)");
  m.def("rep_build", &rep_build_doc, py::arg("type"), py::arg("weight"),
        py::arg("dim_cap") = qforma::kDefaultDimCap,
        py::arg("with_matrices") = false,
        "build the irreducible module and return its summary (JSON)");
  m.def("rationality_check", &rationality_check_doc, py::arg("type"),
        py::arg("weight"), py::arg("form") = "standard",
        py::arg("dim_cap") = qforma::kDefaultDimCap,
        "decide whether the real module has a rational form (JSON verdict "
        "with certificate)");
  m.def("classification_table", &classification_doc, py::arg("max_rank") = 8,
        py::arg("jobs") = 1, py::arg("su_max") = 17, py::arg("so_max") = 17,
        "obstruction table over simple types plus su/so relabeling (JSON)");
  m.def("direct_sum_example", &direct_sum_doc,
        "two clean odd-orthogonal factors whose pair weight passes all "
        "three obstruction hypotheses (JSON)");
  m.def("quaternion_ramification", &quat_ramify_doc, py::arg("a"),
        py::arg("b"),
        "ramified places of the rational quaternion algebra (a, b) (JSON)");
  m.def("run_cli", &run_cli_py, py::arg("args"),
        "run the command line front end; returns (exit_code, stdout, "
        "stderr)");
}
