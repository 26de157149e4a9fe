#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xstates/orbit.hpp"
#include "xstates/sampler.hpp"
#include "xstates/separability.hpp"
#include "xstates/su4.hpp"
#include "xstates/xstate.hpp"

namespace py = pybind11;
using namespace xstates;

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-qubit X-state orbit classification and separability toolkit";

    py::register_exception<XStateError>(m, "XStateError");
    py::register_exception<LinalgError>(m, "LinalgError");

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def(py::init([](double structural, double spectral, double band) {
                 return Tolerances{structural, spectral, band};
             }),
             py::arg("structural") = Tolerances{}.structural,
             py::arg("spectral") = Tolerances{}.spectral,
             py::arg("band") = Tolerances{}.band)
        .def_readwrite("structural", &Tolerances::structural)
        .def_readwrite("spectral", &Tolerances::spectral)
        .def_readwrite("band", &Tolerances::band);

    // --- linalg ---------------------------------------------------------
    py::class_<HermitianMatrix2>(m, "HermitianMatrix2")
        .def(py::init([](double a, double c, Complex b) {
                 return HermitianMatrix2{a, c, b};
             }),
             py::arg("a"), py::arg("c"), py::arg("b") = Complex(0, 0))
        .def_readwrite("a", &HermitianMatrix2::a)
        .def_readwrite("c", &HermitianMatrix2::c)
        .def_readwrite("b", &HermitianMatrix2::b)
        .def("dense", &HermitianMatrix2::dense);

    py::class_<Eig2Result>(m, "Eig2Result")
        .def_readonly("e_plus", &Eig2Result::e_plus)
        .def_readonly("e_minus", &Eig2Result::e_minus)
        .def_readonly("u", &Eig2Result::u)
        .def_readonly("phi", &Eig2Result::phi)
        .def_readonly("psi", &Eig2Result::psi);

    m.def("eig2", &eig2);
    m.def("eig4", &eig4, py::arg("m"), py::arg("hermiticity_tol") = Tolerances{}.structural);
    m.def("kron2", &kron2);
    m.def("commutator", &commutator);
    m.def("su2_from_angles", &su2_from_angles, py::arg("phi"), py::arg("psi"));

    // --- su4 basis --------------------------------------------------------
    m.def("lambda_matrix", [](int k) { return lambda(k); }, py::arg("k"));
    m.def("p_pi", [] { return p_pi(); });
    m.def("alpha_order", [] { return kAlphaOrder; });
    m.def("alpha_sign", &alpha_sign, py::arg("k"));
    m.def("expected_commutator", &expected_commutator, py::arg("row"), py::arg("col"));

    py::class_<CommutatorTableReport>(m, "CommutatorTableReport")
        .def_readonly("pass_", &CommutatorTableReport::pass)
        .def_readonly("checked", &CommutatorTableReport::checked)
        .def_readonly("matched", &CommutatorTableReport::matched)
        .def_readonly("max_deviation", &CommutatorTableReport::max_deviation);
    m.def("verify_commutator_table", &verify_commutator_table, py::arg("tol") = 1e-12);

    py::class_<CartanReport>(m, "CartanReport")
        .def_readonly("pass_", &CartanReport::pass)
        .def_readonly("max_residual", &CartanReport::max_residual);
    m.def("verify_cartan_split", &verify_cartan_split, py::arg("tol") = 1e-12);

    py::class_<PseudospinReport>(m, "PseudospinReport")
        .def_readonly("pass_", &PseudospinReport::pass)
        .def_readonly("max_residual", &PseudospinReport::max_residual)
        .def_readonly("failures", &PseudospinReport::failures);
    m.def("verify_pseudospin", &verify_pseudospin, py::arg("tol") = 1e-12);

    py::class_<PpiConjugationReport>(m, "PpiConjugationReport")
        .def_readonly("pass_", &PpiConjugationReport::pass)
        .def_readonly("max_deviation", &PpiConjugationReport::max_deviation);
    m.def("ppi_conjugation_table", &ppi_conjugation_table, py::arg("tol") = 1e-15);

    py::class_<GxCoefficients>(m, "GxCoefficients")
        .def(py::init([](double v3, double v6, double v7, double v8, double v10, double v11,
                         double v15) {
                 return GxCoefficients{v3, v6, v7, v8, v10, v11, v15};
             }),
             py::arg("v3") = 0.0, py::arg("v6") = 0.0, py::arg("v7") = 0.0,
             py::arg("v8") = 0.0, py::arg("v10") = 0.0, py::arg("v11") = 0.0,
             py::arg("v15") = 0.0)
        .def_readwrite("v3", &GxCoefficients::v3)
        .def_readwrite("v6", &GxCoefficients::v6)
        .def_readwrite("v7", &GxCoefficients::v7)
        .def_readwrite("v8", &GxCoefficients::v8)
        .def_readwrite("v10", &GxCoefficients::v10)
        .def_readwrite("v11", &GxCoefficients::v11)
        .def_readwrite("v15", &GxCoefficients::v15);
    m.def("exp_gx", &exp_gx);
    m.def("local_group_element", &local_group_element, py::arg("phi1"), py::arg("phi2"));
    m.def("local_group_factors", &local_group_factors, py::arg("phi1"), py::arg("phi2"));
    m.def("from_blocks", &from_blocks);

    // --- xstate ------------------------------------------------------------
    py::class_<XState>(m, "XState")
        .def_static("make", &XState::make, py::arg("d"), py::arg("c14"), py::arg("c23"),
                    py::arg("tol") = Tolerances{})
        .def_static("unchecked", &XState::unchecked, py::arg("d"), py::arg("c14"),
                    py::arg("c23"))
        .def_readonly("d", &XState::d)
        .def_readonly("c14", &XState::c14)
        .def_readonly("c23", &XState::c23)
        .def("dense", &XState::dense)
        .def("to_json", [](const XState& x) { return xstate_to_json(x); })
        .def("to_csv_row", [](const XState& x) { return xstate_to_csv_row(x); })
        .def("__repr__", [](const XState& x) {
            return "XState(" + xstate_to_json(x) + ")";
        });
    m.def("from_dense", &from_dense, py::arg("m"), py::arg("tol") = Tolerances{});
    m.def("xstate_from_json",
          [](const std::string& s, const Tolerances& t) { return xstate_from_json(s, t); },
          py::arg("text"), py::arg("tol") = Tolerances{});
    m.def("xstate_from_csv_row",
          [](const std::string& s, const Tolerances& t) { return xstate_from_csv_row(s, t); },
          py::arg("line"), py::arg("tol") = Tolerances{});
    m.def("block_form", &block_form);

    py::class_<HVector>(m, "HVector")
        .def(py::init([](double h3, double h6, double h7, double h8, double h10, double h11,
                         double h15) {
                 return HVector{h3, h6, h7, h8, h10, h11, h15};
             }),
             py::arg("h3") = 0.0, py::arg("h6") = 0.0, py::arg("h7") = 0.0,
             py::arg("h8") = 0.0, py::arg("h10") = 0.0, py::arg("h11") = 0.0,
             py::arg("h15") = 0.0)
        .def_readwrite("h3", &HVector::h3)
        .def_readwrite("h6", &HVector::h6)
        .def_readwrite("h7", &HVector::h7)
        .def_readwrite("h8", &HVector::h8)
        .def_readwrite("h10", &HVector::h10)
        .def_readwrite("h11", &HVector::h11)
        .def_readwrite("h15", &HVector::h15)
        .def("as_array", &HVector::as_array);
    m.def("h_coefficients", &h_coefficients);
    m.def("h_to_xstate", &h_to_xstate, py::arg("h"), py::arg("tol") = Tolerances{});

    // --- orbits -------------------------------------------------------------
    py::class_<OrderedSpectrum>(m, "OrderedSpectrum")
        .def(py::init([](double r1, double r2, double r3, double r4) {
                 return make_spectrum(r1, r2, r3, r4);
             }),
             py::arg("r1"), py::arg("r2"), py::arg("r3"), py::arg("r4"))
        .def_readonly("r1", &OrderedSpectrum::r1)
        .def_readonly("r2", &OrderedSpectrum::r2)
        .def_readonly("r3", &OrderedSpectrum::r3)
        .def_readonly("r4", &OrderedSpectrum::r4)
        .def("as_array", &OrderedSpectrum::as_array);
    m.def("in_partially_ordered_simplex", &in_partially_ordered_simplex, py::arg("r"),
          py::arg("tol") = Tolerances{}.structural);

    py::class_<DiagonalizingFrame>(m, "DiagonalizingFrame")
        .def(py::init([](double phi1, double psi1, double phi2, double psi2, double omega) {
                 return DiagonalizingFrame{phi1, psi1, phi2, psi2, omega};
             }),
             py::arg("phi1") = 0.0, py::arg("psi1") = 0.0, py::arg("phi2") = 0.0,
             py::arg("psi2") = 0.0, py::arg("omega") = 0.0)
        .def_readwrite("phi1", &DiagonalizingFrame::phi1)
        .def_readwrite("psi1", &DiagonalizingFrame::psi1)
        .def_readwrite("phi2", &DiagonalizingFrame::phi2)
        .def_readwrite("psi2", &DiagonalizingFrame::psi2)
        .def_readwrite("omega", &DiagonalizingFrame::omega);

    py::enum_<OrbitKind>(m, "OrbitKind")
        .value("Generic4D", OrbitKind::Generic4D)
        .value("DegenerateUpper2D", OrbitKind::DegenerateUpper2D)
        .value("DegenerateLower2D", OrbitKind::DegenerateLower2D)
        .value("MaximallyMixed0D", OrbitKind::MaximallyMixed0D);

    py::class_<OrbitClass>(m, "OrbitClass")
        .def_readonly("kind", &OrbitClass::kind)
        .def_readonly("isotropy_dim", &OrbitClass::isotropy_dim)
        .def_readonly("marginal", &OrbitClass::marginal)
        .def_property_readonly("orbit_dim",
                               [](const OrbitClass& c) { return orbit_dimension(c); });

    m.def("tangent_vectors", &tangent_vectors);
    m.def("gram", &gram);
    m.def("gram_spectrum", &gram_spectrum);
    m.def("mu_values", &mu_values);
    m.def("classify_orbit", &classify_orbit, py::arg("x"), py::arg("tol") = Tolerances{});

    py::class_<Diagonalization>(m, "Diagonalization")
        .def_readonly("spectrum", &Diagonalization::spectrum)
        .def_readonly("frame", &Diagonalization::frame);
    m.def("diagonalize", &diagonalize);
    m.def("frame_unitary", &frame_unitary);
    m.def("reconstruct", &reconstruct, py::arg("r"), py::arg("frame"),
          py::arg("tol") = Tolerances{});

    // --- separability ---------------------------------------------------------
    py::enum_<BindingInequality>(m, "BindingInequality")
        .value("Ineq31", BindingInequality::Ineq31)
        .value("Ineq32", BindingInequality::Ineq32)
        .value("Both", BindingInequality::Both)
        .value("None_", BindingInequality::None);

    py::class_<SeparabilityVerdict>(m, "SeparabilityVerdict")
        .def_readonly("separable", &SeparabilityVerdict::separable)
        .def_readonly("margin", &SeparabilityVerdict::margin)
        .def_readonly("binding", &SeparabilityVerdict::binding)
        .def_readonly("marginal", &SeparabilityVerdict::marginal);

    py::class_<AbsSepVerdict>(m, "AbsSepVerdict")
        .def_readonly("abs_separable", &AbsSepVerdict::abs_separable)
        .def_readonly("slack1", &AbsSepVerdict::slack1)
        .def_readonly("slack2", &AbsSepVerdict::slack2);

    py::class_<PptOracleResult>(m, "PptOracleResult")
        .def_readonly("min_eigenvalue", &PptOracleResult::min_eigenvalue)
        .def_readonly("separable", &PptOracleResult::separable);

    m.def("ppt_oracle", &ppt_oracle, py::arg("x"), py::arg("tol") = Tolerances{});
    m.def("ppt_elementwise", &ppt_elementwise, py::arg("x"), py::arg("tol") = Tolerances{});
    m.def("ineq_spectrum_angles", &ineq_spectrum_angles, py::arg("r"), py::arg("phi1"),
          py::arg("phi2"), py::arg("tol") = Tolerances{});
    m.def("angle_independence_check", &angle_independence_check, py::arg("r"), py::arg("phi1"),
          py::arg("phi2"), py::arg("psi1") = 0.0, py::arg("psi2") = 0.0, py::arg("grid") = 8,
          py::arg("tol") = Tolerances{});
    m.def("absolutely_separable", &absolutely_separable, py::arg("r"),
          py::arg("tol") = Tolerances{});

    py::class_<DegenerateBound>(m, "DegenerateBound")
        .def_readonly("max_cos2_phi2", &DegenerateBound::max_cos2_phi2)
        .def_readonly("unconstrained", &DegenerateBound::unconstrained);
    m.def("degenerate_criterion", &degenerate_criterion, py::arg("zeta"));
    m.attr("ZETA_CRITICAL") = kZetaCritical;

    py::class_<DegenerateCrossCheckRow>(m, "DegenerateCrossCheckRow")
        .def_readonly("zeta", &DegenerateCrossCheckRow::zeta)
        .def_readonly("phi2", &DegenerateCrossCheckRow::phi2)
        .def_readonly("r1", &DegenerateCrossCheckRow::r1)
        .def_readonly("criterion_separable", &DegenerateCrossCheckRow::criterion_separable)
        .def_readonly("oracle_separable", &DegenerateCrossCheckRow::oracle_separable)
        .def_readonly("oracle_margin", &DegenerateCrossCheckRow::oracle_margin)
        .def_readonly("agree", &DegenerateCrossCheckRow::agree);
    py::class_<DegenerateCrossCheckReport>(m, "DegenerateCrossCheckReport")
        .def_readonly("rows", &DegenerateCrossCheckReport::rows)
        .def_readonly("agreements", &DegenerateCrossCheckReport::agreements)
        .def_readonly("disagreements", &DegenerateCrossCheckReport::disagreements)
        .def_readonly("agreement_rate", &DegenerateCrossCheckReport::agreement_rate);
    m.def("degenerate_cross_check", &degenerate_cross_check, py::arg("r1eq"), py::arg("r3"),
          py::arg("r4"), py::arg("phi_steps") = 64, py::arg("tol") = Tolerances{});

    m.def("werner_state", &werner_state, py::arg("p"));
    m.def("bell_phi_plus", &bell_phi_plus);
    m.def("werner_threshold", &werner_threshold, py::arg("bisect_tol") = 1e-10);

    // --- sampling / geometry -------------------------------------------------
    py::enum_<Measure>(m, "Measure")
        .value("SpectrumUniform", Measure::SpectrumUniform)
        .value("ParamUniformRejection", Measure::ParamUniformRejection);

    py::class_<SamplerConfig>(m, "SamplerConfig")
        .def(py::init([](Measure measure, std::uint64_t seed, int count) {
                 return SamplerConfig{measure, seed, count};
             }),
             py::arg("measure") = Measure::SpectrumUniform, py::arg("seed") = 0,
             py::arg("count") = 1)
        .def_readwrite("measure", &SamplerConfig::measure)
        .def_readwrite("seed", &SamplerConfig::seed)
        .def_readwrite("count", &SamplerConfig::count);

    py::class_<XStateSampler>(m, "XStateSampler")
        .def(py::init<const SamplerConfig&>())
        .def("next", &XStateSampler::next)
        .def("next_spectrum", &XStateSampler::next_spectrum);

    m.def("sample_spectra", &sample_spectra);
    m.def("sample_xstates", &sample_xstates);
    m.def("barycentric_weights", &barycentric_weights);

    py::class_<SimplexPoint>(m, "SimplexPoint")
        .def_readonly("r", &SimplexPoint::r)
        .def_readonly("xyz", &SimplexPoint::xyz);
    m.def("embed", &embed);

    py::class_<RegionRecord>(m, "RegionRecord")
        .def_readonly("r", &RegionRecord::r)
        .def_readonly("xyz", &RegionRecord::xyz)
        .def_readonly("abs_separable", &RegionRecord::abs_separable)
        .def_readonly("full_order", &RegionRecord::full_order);
    m.def("region_export", &region_export, py::arg("resolution"),
          py::arg("tol") = Tolerances{});

#ifdef XSTATES_VERSION
    m.attr("__version__") = XSTATES_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
