#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwire/boundary.hpp"
#include "qwire/gates.hpp"
#include "qwire/io.hpp"
#include "qwire/linalg.hpp"
#include "qwire/phase_recovery.hpp"
#include "qwire/smatrix.hpp"
#include "qwire/star_product.hpp"
#include "qwire/von_neumann.hpp"

namespace py = pybind11;

namespace {

using ComplexArray = py::array_t<qwire::Complex, py::array::c_style | py::array::forcecast>;

qwire::ComplexMatrix to_matrix(const ComplexArray& array) {
  if (array.ndim() != 2) throw qwire::ShapeError("expected a 2-d array");
  const auto rows = static_cast<std::size_t>(array.shape(0));
  const auto cols = static_cast<std::size_t>(array.shape(1));
  std::vector<qwire::Complex> entries(array.data(), array.data() + rows * cols);
  return qwire::ComplexMatrix(rows, cols, std::move(entries));
}

ComplexArray to_array(const qwire::ComplexMatrix& m) {
  ComplexArray out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto entries = m.entries();
  std::copy(entries.begin(), entries.end(), out.mutable_data());
  return out;
}

qwire::BoundaryCondition to_bc(const ComplexArray& a, const ComplexArray& b) {
  return {to_matrix(a), to_matrix(b)};
}

py::tuple from_bc(const qwire::BoundaryCondition& bc) {
  return py::make_tuple(to_array(bc.a()), to_array(bc.b()));
}

qwire::ScatteringMatrix to_smatrix(const ComplexArray& s, double energy) {
  return {to_matrix(s), qwire::Energy{energy}};
}

}  // namespace

PYBIND11_MODULE(_qwire, m) {
  m.doc() = "Single-vertex quantum wire scattering: boundary conditions, S-matrices, "
            "inverse design, phase recovery and von Neumann parameters.";

  auto error = py::register_exception<qwire::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<qwire::ShapeError>(m, "ShapeError", error.ptr());
  py::register_exception<qwire::ArgumentError>(m, "ArgumentError", error.ptr());
  py::register_exception<qwire::SingularMatrixError>(m, "SingularMatrixError", error.ptr());
  py::register_exception<qwire::UnitarityError>(m, "UnitarityError", error.ptr());
  py::register_exception<qwire::ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<qwire::ResonanceError>(m, "ResonanceError", error.ptr());
  py::register_exception<qwire::ZeroReflectionError>(m, "ZeroReflectionError", error.ptr());
  py::register_exception<qwire::FormatError>(m, "FormatError", error.ptr());

  m.def("haar_random_unitary", [](std::size_t n, std::uint64_t seed) {
    return to_array(qwire::haar_random_unitary(n, seed));
  }, py::arg("n"), py::arg("seed"));

  m.def("numeric_rank", [](const ComplexArray& a, double tol) {
    return qwire::numeric_rank(to_matrix(a), tol);
  }, py::arg("m"), py::arg("tol") = qwire::kRankTolerance);

  m.def("validate", [](const ComplexArray& a, const ComplexArray& b) {
    const auto r = qwire::validate(to_bc(a, b));
    py::dict d;
    d["rank_ok"] = r.rank_ok;
    d["hermiticity_ok"] = r.hermiticity_ok;
    d["rank_found"] = r.rank_found;
    d["hermiticity_residual"] = r.hermiticity_residual;
    d["valid"] = r.valid();
    return d;
  }, py::arg("a"), py::arg("b"));

  m.def("canonicalize", [](const ComplexArray& a, const ComplexArray& b, double e0) {
    return from_bc(qwire::canonicalize(to_bc(a, b), qwire::Energy{e0}));
  }, py::arg("a"), py::arg("b"), py::arg("e0"));

  m.def("equivalent", [](const ComplexArray& a1, const ComplexArray& b1,
                         const ComplexArray& a2, const ComplexArray& b2) {
    return qwire::equivalent(to_bc(a1, b1), to_bc(a2, b2));
  });

  m.def("scatter", [](const ComplexArray& a, const ComplexArray& b, double e) {
    return to_array(qwire::scatter(to_bc(a, b), qwire::Energy{e}).matrix());
  }, py::arg("a"), py::arg("b"), py::arg("energy"));

  m.def("design", [](const ComplexArray& s, double e0) {
    return from_bc(qwire::design(to_matrix(s), qwire::Energy{e0}));
  }, py::arg("s"), py::arg("e0"));

  m.def("propagate", [](const ComplexArray& s, double e0, double e) {
    return to_array(qwire::propagate(to_smatrix(s, e0), qwire::Energy{e}).matrix());
  }, py::arg("s"), py::arg("e0"), py::arg("energy"));

  m.def("robin_smatrix", [](const std::vector<double>& phis, double e) {
    return to_array(qwire::robin_smatrix(phis, qwire::Energy{e}).matrix());
  }, py::arg("phis"), py::arg("energy"));

  m.def("block_decompose", [](const ComplexArray& a, const ComplexArray& b,
                              const std::vector<double>& samples, double tol) {
    return qwire::block_decompose(to_bc(a, b), samples, tol).blocks;
  }, py::arg("a"), py::arg("b"), py::arg("samples"), py::arg("tol") = qwire::kBlockTolerance);

  m.def("family_consistency", [](const std::vector<ComplexArray>& family,
                                 const std::vector<double>& energies) {
    if (family.size() != energies.size()) {
      throw qwire::ArgumentError("one energy per matrix required");
    }
    std::vector<qwire::ScatteringMatrix> members;
    for (std::size_t k = 0; k < family.size(); ++k) {
      members.push_back(to_smatrix(family[k], energies[k]));
    }
    const auto r = qwire::family_consistency(members);
    return py::make_tuple(r.max_residual, r.consistent);
  }, py::arg("family"), py::arg("energies"));

  m.def("u2_from_params", [](double rho, double chi, double tau, double kappa) {
    return to_array(qwire::u2_from_params({rho, chi, tau, kappa}));
  }, py::arg("rho"), py::arg("chi") = 0.0, py::arg("tau") = 0.0, py::arg("kappa") = 0.0);

  m.def("dress_with_line", [](const ComplexArray& s_aux, double a, double e) {
    return to_array(qwire::dress_with_line(to_matrix(s_aux), a, qwire::Energy{e}));
  }, py::arg("s_aux"), py::arg("distance"), py::arg("energy"));

  m.def("insert_reflection", [](qwire::Complex s_ii, const ComplexArray& u) {
    return qwire::insert_reflection(s_ii, to_matrix(u));
  }, py::arg("s_ii"), py::arg("u"));

  m.def("insert_transmission", [](qwire::Complex s_ij, qwire::Complex s_ii,
                                  const ComplexArray& u) {
    return qwire::insert_transmission(s_ij, s_ii, to_matrix(u));
  }, py::arg("s_ij"), py::arg("s_ii"), py::arg("u"));

  m.def("recover_full", [](const ComplexArray& hidden, double energy) {
    const auto truth = to_smatrix(hidden, energy);
    qwire::AmplitudeOracle oracle(truth);
    auto report = qwire::recover_full(oracle);
    qwire::score_against(report, truth);
    const auto n = report.recovered.rows();
    std::vector<std::vector<std::string>> methods(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        methods[i][j] = std::string(qwire::to_string(report.method(i, j)));
      }
    }
    py::dict d;
    d["recovered"] = to_array(report.recovered);
    d["oracle_calls"] = report.oracle_calls;
    d["methods"] = methods;
    d["unitarity_residual"] = report.unitarity_residual;
    d["max_entry_error"] = *report.max_entry_error;
    return d;
  }, py::arg("hidden"), py::arg("energy"),
     "Runs the magnitude-only recovery against a simulated oracle hiding `hidden`.");

  m.def("w_from_bc", [](const ComplexArray& a, const ComplexArray& b) {
    return to_array(qwire::w_from_bc(to_bc(a, b)).matrix());
  }, py::arg("a"), py::arg("b"));

  m.def("bc_from_w", [](const ComplexArray& w) {
    return from_bc(qwire::bc_from_w(qwire::VonNeumannParam(to_matrix(w))));
  }, py::arg("w"));

  m.def("s_from_w", [](const ComplexArray& w, double e) {
    return to_array(
        qwire::s_from_w(qwire::VonNeumannParam(to_matrix(w)), qwire::Energy{e}).matrix());
  }, py::arg("w"), py::arg("energy"));

  m.def("w_from_s", [](const ComplexArray& s, double e) {
    return to_array(qwire::w_from_s(to_smatrix(s, e)).matrix());
  }, py::arg("s"), py::arg("energy"));

  m.def("gate", [](const std::string& name, double e0) {
    return from_bc(qwire::gate_by_name(name, qwire::Energy{e0}));
  }, py::arg("name"), py::arg("e0"));

  m.def("read_matrix_file", [](const std::string& path) {
    const auto file = qwire::read_matrix_file(path);
    py::dict d;
    d["kind"] = std::string(qwire::to_string(file.kind));
    py::list matrices;
    for (const auto& mat : file.matrices) matrices.append(to_array(mat));
    d["matrices"] = matrices;
    d["energy"] = file.energy ? py::cast(*file.energy) : py::none();
    return d;
  }, py::arg("path"));
}
