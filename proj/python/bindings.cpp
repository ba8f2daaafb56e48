#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aqfock/coxeter_b.hpp"
#include "aqfock/errors.hpp"
#include "aqfock/operators.hpp"
#include "aqfock/orthopoly.hpp"
#include "aqfock/partitions.hpp"
#include "aqfock/run_config.hpp"
#include "aqfock/verify.hpp"

namespace py = pybind11;
using namespace aqfock;

namespace {

std::vector<Vector> as_vectors(const std::vector<Eigen::VectorXcd>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerics for the (alpha,q)-Fock space of type B";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<DeformParams>(m, "DeformParams")
      .def(py::init([](double alpha, double q) {
             DeformParams p{alpha, q};
             p.validate();
             return p;
           }),
           py::arg("alpha"), py::arg("q"))
      .def_readonly("alpha", &DeformParams::alpha)
      .def_readonly("q", &DeformParams::q);

  py::class_<InvolutiveSpace>(m, "InvolutiveSpace")
      .def(py::init([](const std::string& spec, std::size_t d) { return parse_involution(spec, d); }),
           py::arg("spec") = "identity", py::arg("dim") = 2)
      .def(py::init<RealMatrix>(), py::arg("involution"))
      .def_property_readonly("dim", &InvolutiveSpace::dim)
      .def_property_readonly("involution", &InvolutiveSpace::involution)
      .def("involute", &InvolutiveSpace::involute);

  m.def("length_stats", [](const std::vector<int>& window) {
    const auto s = coxeter_b::length_stats(coxeter_b::SignedPermutation(window));
    return std::make_pair(s.l1, s.l2);
  }, py::arg("window"), "(l1, l2) of the signed permutation with this window");
  m.def("group_order", &coxeter_b::group_order);

  m.def("p_operator", [](int n, const DeformParams& p, const InvolutiveSpace& s) {
    return p_operator_recursive(n, p, s);
  }, py::arg("n"), py::arg("params"), py::arg("space"));
  m.def("p_operator_direct", [](int n, const DeformParams& p, const InvolutiveSpace& s) {
    return p_operator_direct(n, p, s);
  }, py::arg("n"), py::arg("params"), py::arg("space"));
  m.def("tensor_power_norm", &tensor_power_norm, py::arg("x"), py::arg("n"), py::arg("params"), py::arg("space"));

  m.def("vacuum_moment", [](const std::vector<Eigen::VectorXcd>& xs, const DeformParams& p, const InvolutiveSpace& s) {
    const FockModel model(s, p);
    return ops::vacuum_moment(as_vectors(xs), model);
  }, py::arg("vectors"), py::arg("params"), py::arg("space"), "<Omega, G(x_k)...G(x_1) Omega>, vectors[0] acting first");
  m.def("creation_norm", [](const Eigen::VectorXcd& x, int trunc, const DeformParams& p, const InvolutiveSpace& s) {
    const FockModel model(s, p);
    return ops::creation_norm(x, trunc, model);
  }, py::arg("x"), py::arg("trunc"), py::arg("params"), py::arg("space"));
  m.def("norm_bounds", [](const Eigen::VectorXcd& x, const DeformParams& p, const InvolutiveSpace& s) {
    const auto b = ops::norm_bounds(x, p, s);
    py::dict d;
    d["case"] = static_cast<int>(b.which);
    d["lower"] = b.lower;
    d["upper"] = b.upper;
    d["strict_lower"] = b.strict_lower;
    d["exact"] = b.exact;
    return d;
  }, py::arg("x"), py::arg("params"), py::arg("space"));
  m.def("trace_defect", [](const DeformParams& p, int s, int t) {
    const auto td = ops::trace_defect(p, s, t);
    py::dict d;
    d["measured"] = td.measured;
    d["witness"] = td.witness;
    d["printed_formula"] = td.printed_formula;
    d["unit_formula"] = td.unit_formula;
    return d;
  }, py::arg("params"), py::arg("s"), py::arg("t"));

  m.def("moment_pair_sum", [](const std::vector<Eigen::VectorXcd>& xs, const DeformParams& p, const InvolutiveSpace& s) {
    const auto sums = partitions::moment_pair_sum(as_vectors(xs), p, s);
    return std::make_pair(sums.colored, sums.uncolored);
  }, py::arg("vectors"), py::arg("params"), py::arg("space"), "(colored, uncolored) partition sums");
  m.def("pair_partitions", [](int n) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& pi : partitions::enumerate_pair_partitions(n)) out.push_back(pi.blocks);
    return out;
  }, py::arg("n"));

  m.def("jacobi_moments", &orthopoly::qmp_moments, py::arg("alpha"), py::arg("q"), py::arg("c") = 1.0,
        py::arg("k_max") = 8);
  m.def("density", [](double t, double alpha, double q) { return orthopoly::density(t, {alpha, q}); },
        py::arg("t"), py::arg("alpha"), py::arg("q"));
  m.def("quadrature_moments", [](double alpha, double q, int k_max) {
    return orthopoly::quadrature_moments({alpha, q}, k_max);
  }, py::arg("alpha"), py::arg("q"), py::arg("k_max") = 8);
  m.def("cauchy_transform", &orthopoly::qmp_cauchy_transform, py::arg("z"), py::arg("alpha"), py::arg("q"),
        py::arg("c") = 1.0, py::arg("depth") = 200, py::arg("terminate") = true);

  m.def("verify", [](const std::string& suite, double alpha, double q, std::size_t dim, const std::string& involution) {
    RunConfig config;
    config.alpha = alpha;
    config.q = q;
    config.dim = dim;
    config.involution = involution;
    const auto report = verify::run_suite(suite, config);
    py::list rows;
    for (const auto& c : report.checks) {
      py::dict d;
      d["suite"] = c.suite;
      d["name"] = c.name;
      d["residual"] = c.residual;
      d["bound"] = c.bound;
      d["passed"] = c.passed;
      d["note"] = c.note;
      rows.append(d);
    }
    return rows;
  }, py::arg("suite") = "all", py::arg("alpha") = 0.0, py::arg("q") = 0.0, py::arg("dim") = 2,
     py::arg("involution") = "identity");
}
