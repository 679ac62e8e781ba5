#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cstarinv/equations.hpp"
#include "cstarinv/problem.hpp"
#include "cstarinv/properties.hpp"
#include "cstarinv/spectral.hpp"

namespace py = pybind11;
using namespace cstarinv;

namespace {

std::vector<CMatrix> collect_blocks(const py::list& mats) {
    std::vector<CMatrix> blocks;
    for (const auto& m : mats) blocks.push_back(m.cast<CMatrix>());
    return blocks;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hilbert C*-module operators, invariant submodules and generalized inverses";

    py::register_exception<ShapeMismatch>(m, "ShapeMismatchError");
    py::register_exception<NotSolvable>(m, "NotSolvableError");
    py::register_exception<NotInvariant>(m, "NotInvariantError");
    py::register_exception<PreconditionFailed>(m, "PreconditionFailedError");
    py::register_exception<NotSpectral>(m, "NotSpectralError");
    py::register_exception<NotUnitary>(m, "NotUnitaryError");
    py::register_exception<ScalarOperator>(m, "ScalarOperatorError");
    py::register_exception<ZeroOperator>(m, "ZeroOperatorError");
    py::register_exception<ValidationError>(m, "ValidationError");

    py::class_<ToleranceConfig>(m, "ToleranceConfig")
        .def(py::init<>())
        .def_readwrite("atol", &ToleranceConfig::atol)
        .def_readwrite("rtol", &ToleranceConfig::rtol)
        .def_readwrite("seed", &ToleranceConfig::seed)
        .def_readwrite("search_budget", &ToleranceConfig::search_budget);

    py::class_<AlgebraShape>(m, "AlgebraShape")
        .def(py::init<std::vector<int>>())
        .def_property_readonly("block_dims",
                               [](const AlgebraShape& s) { return s.block_dims; })
        .def("total_dim", &AlgebraShape::total_dim)
        .def("__eq__", [](const AlgebraShape& a, const AlgebraShape& b) { return a == b; });

    py::class_<AlgebraElement>(m, "AlgebraElement")
        .def(py::init([](const AlgebraShape& shape, const py::list& blocks) {
                 return AlgebraElement(shape, collect_blocks(blocks));
             }),
             py::arg("shape"), py::arg("blocks"))
        .def_static("zero", &AlgebraElement::zero)
        .def_static("identity", &AlgebraElement::identity)
        .def_property_readonly("shape", &AlgebraElement::shape)
        .def("block", [](const AlgebraElement& a, int i) { return a.block(i); })
        .def("__add__", &AlgebraElement::operator+)
        .def("__sub__", &AlgebraElement::operator-)
        .def("__mul__", [](const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); });

    py::class_<ModuleVector>(m, "ModuleVector")
        .def(py::init(&ModuleVector::from_entries), py::arg("entries"))
        .def_static("zero", &ModuleVector::zero)
        .def_static("basis", &ModuleVector::basis)
        .def_property_readonly("rank", &ModuleVector::rank)
        .def_property_readonly("shape", &ModuleVector::shape)
        .def("entry", &ModuleVector::entry)
        .def("block", [](const ModuleVector& x, int i) { return x.block(i); })
        .def("__add__", &ModuleVector::operator+)
        .def("__sub__", &ModuleVector::operator-);

    py::class_<Operator>(m, "Operator")
        .def(py::init([](const AlgebraShape& shape, int rank, const py::list& blocks) {
                 return Operator(shape, rank, collect_blocks(blocks));
             }),
             py::arg("shape"), py::arg("rank"), py::arg("blocks"))
        .def_static("from_grid", &Operator::from_grid)
        .def_static("identity", &Operator::identity)
        .def_static("zero", &Operator::zero)
        .def_property_readonly("rank", &Operator::rank)
        .def_property_readonly("shape", &Operator::shape)
        .def("block", [](const Operator& T, int i) { return T.block(i); })
        .def("grid_entry", &Operator::grid_entry)
        .def("__add__", &Operator::operator+)
        .def("__sub__", &Operator::operator-);

    py::class_<Submodule>(m, "Submodule")
        .def(py::init<Operator, std::optional<std::vector<ModuleVector>>>(),
             py::arg("projection"), py::arg("generators") = std::nullopt)
        .def_static("full", &Submodule::full)
        .def_property_readonly("projection", &Submodule::projection)
        .def("nontrivial", &Submodule::nontrivial)
        .def("validate", &Submodule::validate);

    // cstar_algebra
    m.def("star", &star);
    m.def("mul", &mul);
    m.def("norm", &norm);
    m.def("is_positive", &is_positive, py::arg("a"), py::arg("tol") = ToleranceConfig{});
    m.def("identity", py::overload_cast<const AlgebraShape&>(&identity));

    // hilbert_module
    m.def("inner_product", &inner_product);
    m.def("vector_norm", &vector_norm);
    m.def("right_action", &right_action);
    m.def("rank_one", &rank_one);

    // operator_calculus
    m.def("apply", &apply);
    m.def("compose", &compose);
    m.def("adjoint", &adjoint);
    m.def("operator_norm", &operator_norm);
    m.def("moore_penrose", &moore_penrose);
    m.def("canonical_projections", &canonical_projections);
    m.def("is_partial_isometry", &is_partial_isometry, py::arg("V"),
          py::arg("tol") = ToleranceConfig{});

    // submodule_geometry
    m.def("submodule_from_generators", &submodule_from_generators);
    m.def("complement", &complement);
    m.def("is_invariant", &is_invariant, py::arg("T"), py::arg("W"),
          py::arg("tol") = ToleranceConfig{});
    m.def("is_reducing", &is_reducing, py::arg("T"), py::arg("W"),
          py::arg("tol") = ToleranceConfig{});
    m.def("block_decompose", &block_decompose);
    m.def("assemble_from_blocks", &assemble_from_blocks, py::arg("A"), py::arg("B"), py::arg("C"),
          py::arg("D"), py::arg("W"), py::arg("tol") = ToleranceConfig{});

    // operator_equations
    m.def("douglas_solution", &douglas_solution, py::arg("T"), py::arg("S"), py::arg("Z"),
          py::arg("tol") = ToleranceConfig{});
    m.def("sts_solution", &sts_solution, py::arg("T"), py::arg("W"), py::arg("Z"),
          py::arg("tol") = ToleranceConfig{});
    m.def(
        "verify_sts",
        [](const Operator& S, const Operator& T, const ToleranceConfig& tol) {
            StsReport rep = verify_sts(S, T, tol);
            py::dict d;
            d["residual"] = rep.residual;
            d["threshold"] = rep.threshold;
            d["passes"] = rep.passes;
            d["s_nonzero"] = rep.s_nonzero;
            d["s_not_identity"] = rep.s_not_identity;
            if (rep.invariant_submodule) d["invariant_submodule"] = *rep.invariant_submodule;
            return d;
        },
        py::arg("S"), py::arg("T"), py::arg("tol") = ToleranceConfig{});
    m.def(
        "kernel_tower_invariance",
        [](const Operator& T, const Operator& S, int n_max, const ToleranceConfig& tol) {
            KernelTowerReport rep = kernel_tower_invariance(T, S, n_max, tol);
            py::list levels;
            for (const auto& level : rep.levels) {
                py::dict d;
                d["n"] = level.n;
                d["residual"] = level.residual;
                d["threshold"] = level.threshold;
                d["passes"] = level.passes;
                levels.append(d);
            }
            py::dict out;
            out["levels"] = levels;
            out["all_pass"] = rep.all_pass;
            return out;
        },
        py::arg("T"), py::arg("S"), py::arg("n_max"), py::arg("tol") = ToleranceConfig{});
    m.def("kernel_projection", &kernel_projection);

    // spectral_invariants
    m.def("spectrum", [](const Operator& K) {
        SpectrumReport rep = spectrum(K);
        py::list evs;
        for (const auto& pt : rep.eigenvalues)
            evs.append(py::make_tuple(pt.value, pt.multiplicity));
        py::dict d;
        d["eigenvalues"] = evs;
        d["contains_zero"] = rep.contains_zero;
        return d;
    });
    m.def("eigen_submodule", &eigen_submodule, py::arg("K"), py::arg("lam"),
          py::arg("tol") = ToleranceConfig{});
    m.def(
        "zero_exclusion_certificate",
        [](const Operator& T, const ToleranceConfig& tol) {
            NumRangeCertificate cert = zero_exclusion_certificate(T, tol);
            py::dict d;
            d["kind"] = cert.kind == CertificateKind::ExcludedByHermitianBound
                            ? "excluded_by_hermitian_bound"
                            : (cert.kind == CertificateKind::WitnessFound ? "witness_found"
                                                                          : "inconclusive");
            d["bound"] = cert.bound;
            if (cert.witness) d["witness"] = *cert.witness;
            return d;
        },
        py::arg("T"), py::arg("tol") = ToleranceConfig{});
    m.def("zero_witness_search", &zero_witness_search, py::arg("T"), py::arg("budget"),
          py::arg("seed"), py::arg("tol") = ToleranceConfig{});
    m.def(
        "mp_reducing_verify",
        [](const Operator& T, const Submodule& W, const ToleranceConfig& tol) {
            MpReducingReport rep = mp_reducing_verify(T, W, tol);
            py::dict d;
            d["commutator_residual"] = rep.commutator_residual;
            d["threshold"] = rep.threshold;
            d["passes"] = rep.passes;
            d["invertible"] = rep.invertible;
            d["inverse_residual"] = rep.inverse_residual;
            return d;
        },
        py::arg("T"), py::arg("W"), py::arg("tol") = ToleranceConfig{});
    m.def("commutant_basis", &commutant_basis, py::arg("K"), py::arg("tol") = ToleranceConfig{});
    m.def(
        "find_hyperinvariant",
        [](const Operator& K, const ToleranceConfig& tol) {
            HyperinvariantResult result = find_hyperinvariant(K, tol);
            py::dict d;
            d["submodule"] = result.submodule;
            d["kind"] = result.kind == HyperinvariantKind::Eigenspace ? "eigenspace" : "kernel";
            d["eigenvalue"] = result.eigenvalue;
            return d;
        },
        py::arg("K"), py::arg("tol") = ToleranceConfig{});
    m.def("transport_by_unitary", &transport_by_unitary, py::arg("W"), py::arg("U"),
          py::arg("tol") = ToleranceConfig{});

    // property suites
    m.def(
        "check_properties",
        [](std::uint64_t seed, int cases) {
            SuiteOptions opt;
            opt.seed = seed;
            opt.cases = cases;
            opt.tol.seed = seed;
            Report report = run_property_suites(opt);
            py::list checks;
            for (const auto& c : report.checks) {
                py::dict d;
                d["name"] = c.name;
                d["residual"] = c.residual;
                d["threshold"] = c.threshold;
                d["verdict"] = c.verdict();
                checks.append(d);
            }
            py::dict out;
            out["checks"] = checks;
            out["all_pass"] = report.all_pass();
            return out;
        },
        py::arg("seed") = 7, py::arg("cases") = 100);
}
