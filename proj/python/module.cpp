// Python bindings for the main operations: enumeration, operator
// constructors, spectra and estimators, the Segal-Bargmann checks, the
// triple harness, the Berezin tower and the symbol calculus.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toespec/berezin.hpp"
#include "toespec/clifford.hpp"
#include "toespec/operators.hpp"
#include "toespec/segal_bargmann.hpp"
#include "toespec/spectral.hpp"
#include "toespec/symbols.hpp"
#include "toespec/triples.hpp"

namespace py = pybind11;
using namespace toespec;

namespace {

MultiIndex to_multiindex(const std::vector<int>& e) { return MultiIndex(e); }

HeisenbergElement parse_element(const std::string& kind, int j) {
  if (kind == "Q") return {HeisenbergKind::Q, j};
  if (kind == "P") return {HeisenbergKind::P, j};
  if (kind == "T") return {HeisenbergKind::T, j};
  if (kind == "a") return {HeisenbergKind::Lower, j};
  if (kind == "a+") return {HeisenbergKind::Raise, j};
  if (kind == "N") return {HeisenbergKind::Number, j};
  throw std::invalid_argument("unknown Heisenberg element: " + kind);
}

std::vector<std::pair<double, std::int64_t>> stream_levels(const SpectrumStream& s,
                                                           std::int64_t count) {
  std::vector<std::pair<double, std::int64_t>> out;
  std::int64_t top = s.finite() ? std::min(count, s.level_count()) : count;
  out.reserve(static_cast<size_t>(top));
  for (std::int64_t k = 0; k < top; ++k) out.emplace_back(s.value(k), s.multiplicity(k));
  return out;
}

}  // namespace

PYBIND11_MODULE(toespec, m) {
  m.doc() = "finite-truncation Toeplitz/Bergman spectral laboratory";

  py::class_<BasisEnumeration, std::shared_ptr<BasisEnumeration>>(m, "BasisEnumeration")
      .def(py::init<int, int>(), py::arg("n"), py::arg("cutoff"))
      .def_property_readonly("dimension", &BasisEnumeration::dimension)
      .def_property_readonly("n", &BasisEnumeration::complex_dimension)
      .def_property_readonly("cutoff", &BasisEnumeration::cutoff)
      .def("index", [](const BasisEnumeration& e, int i) { return e[i].entries(); })
      .def("degree", &BasisEnumeration::degree)
      .def("lookup",
           [](const BasisEnumeration& e, const std::vector<int>& a) {
             return e.lookup(to_multiindex(a));
           })
      .def("count_up_to_degree", &BasisEnumeration::count_up_to_degree);

  py::class_<TruncatedOperator>(m, "TruncatedOperator")
      .def_property_readonly("matrix",
                             [](const TruncatedOperator& t) { return t.matrix(); })
      .def_property_readonly("degree_shift", &TruncatedOperator::degree_shift)
      .def_property_readonly("interior_degree", &TruncatedOperator::interior_degree)
      .def_property_readonly("spinor_dim", &TruncatedOperator::spinor_dim)
      .def_property_readonly("tag", &TruncatedOperator::tag)
      .def("interior_block", &TruncatedOperator::interior_block);

  m.def("degree_multiplicity", &degree_multiplicity, py::arg("n"), py::arg("k"));
  m.def("binomial", &binomial);
  m.def("factorial_ratio",
        [](const std::vector<int>& num, const std::vector<int>& den) {
          return factorial_ratio(to_multiindex(num), to_multiindex(den));
        });
  m.def("monomial_coupling", [](const std::vector<int>& a, const std::vector<int>& b) {
    return monomial_coupling(to_multiindex(a), to_multiindex(b));
  });

  m.def("ball_volume", &ball_volume);
  m.def("quadrature_radial",
        [](const std::function<double(double)>& f, double tol) {
          return quadrature_radial(f, tol);
        },
        py::arg("f"), py::arg("tol") = 1e-12);
  m.def("bergman_constant",
        [](const std::vector<int>& alpha, double m_w) {
          return bergman_constant(to_multiindex(alpha), RadialWeight::power(m_w));
        },
        py::arg("alpha"), py::arg("m_w") = 0.0);
  m.def("fock_constant", [](const std::vector<int>& alpha, double t) {
    return fock_constant(to_multiindex(alpha), t);
  });
  m.def("hermite_eval", [](const std::vector<int>& alpha, double t, const std::vector<double>& x) {
    return hermite_eval(to_multiindex(alpha), t, x);
  });

  m.def("enumeration",
        [](int n, int cutoff) { return std::make_shared<BasisEnumeration>(n, cutoff); });
  m.def("toeplitz_monomial", [](const std::vector<int>& a, const EnumPtr& e) {
    return toeplitz_monomial(to_multiindex(a), e);
  });
  m.def("toeplitz_derivative", [](const std::vector<int>& a, const EnumPtr& e) {
    return toeplitz_derivative(to_multiindex(a), e);
  });
  m.def("toeplitz_radial",
        [](const std::function<double(double)>& f, const EnumPtr& e, double m_w) {
          return toeplitz_radial(f, e, RadialWeight::power(m_w));
        },
        py::arg("f"), py::arg("enumeration"), py::arg("m_w") = 0.0);
  m.def("toeplitz_radial_poly",
        [](const std::vector<double>& coeffs, const EnumPtr& e, double m_w) {
          return toeplitz_radial_poly(RadialPoly(coeffs), e, m_w);
        },
        py::arg("coefficients_in_r"), py::arg("enumeration"), py::arg("m_w") = 0.0);
  m.def("radial_eigenvalue_beta", [](const std::vector<double>& coeffs, double m, int n, int k) {
    return radial_eigenvalue_beta(RadialPoly(coeffs), m, n, k);
  });
  m.def("euler_operator", &euler_operator);
  m.def("heisenberg_rep",
        [](const std::string& kind, int j, double t, const EnumPtr& e) {
          return heisenberg_rep(parse_element(kind, j), t, e);
        },
        py::arg("kind"), py::arg("j"), py::arg("t"), py::arg("enumeration"));
  m.def("tau_P_via_R", &tau_P_via_R);
  m.def("multiply", &multiply);
  m.def("add", &add);
  m.def("subtract", &subtract);
  m.def("adjoint", &adjoint);
  m.def("commutator", &commutator);
  m.def("scale", [](std::complex<double> c, const TruncatedOperator& a) { return scale(c, a); });
  m.def("operator_norm",
        [](const TruncatedOperator& a, bool interior) {
          return operator_norm(a, interior).value;
        },
        py::arg("operator"), py::arg("interior") = true);
  m.def("hermiticity_residual", &hermiticity_residual, py::arg("operator"),
        py::arg("interior") = true);

  m.def("gamma_matrices", [](int n) {
    CliffordRep rep = gamma_matrices(n);
    return rep.gamma;
  });
  m.def("dirac_bergman", &dirac_bergman, py::arg("t"), py::arg("enumeration"));

  m.def("spectrum_levels",
        [](const TruncatedOperator& op) {
          SpectrumStream s = spectrum_of(op);
          return stream_levels(s, s.level_count());
        },
        "interior-block spectrum as (value, multiplicity) levels");
  m.def("tr_inverse_levels",
        [](int n, std::int64_t count) {
          SpectrumStream s = SpectrumStream::analytic(
              [n](std::int64_t k) { return static_cast<double>(n + k + 1); },
              [n](std::int64_t k) { return degree_multiplicity(n, static_cast<int>(k)); });
          return stream_levels(s, count);
        },
        py::arg("n"), py::arg("count") = 100);
  m.def("weyl_exponent", [](int n, std::int64_t levels) {
    SpectrumStream s = SpectrumStream::analytic(
        [n](std::int64_t k) { return static_cast<double>(n + k + 1); },
        [n](std::int64_t k) { return degree_multiplicity(n, static_cast<int>(k)); });
    return spectral_dimension(s, levels);
  });
  m.def("dixmier_log_average_tr", [](int n, std::int64_t N) {
    SpectrumStream s = SpectrumStream::analytic(
        [n](std::int64_t k) { return static_cast<double>(n + k + 1); },
        [n](std::int64_t k) { return degree_multiplicity(n, static_cast<int>(k)); });
    return dixmier_log_average(s, n, N);
  });
  m.def("dixmier_closed_form_ball", &dixmier_closed_form_ball);
  m.def("sphere_contact_volume", &sphere_contact_volume);

  m.def("sb_basis_mapping_error", &sb_basis_mapping_error, py::arg("n"), py::arg("t"),
        py::arg("max_degree"), py::arg("node_count") = 64);
  m.def("sb_gram_residual", &sb_gram_residual, py::arg("n"), py::arg("t"), py::arg("max_degree"),
        py::arg("node_count") = 64);
  m.def("sb_intertwining_residual", [](int n, double t, int max_degree) {
    return intertwining_check(n, t, max_degree).max_residual();
  });

  m.def("polar_unitary", [](const std::vector<std::complex<double>>& taylor, const EnumPtr& e) {
    return polar_unitary(taylor, e);
  });
  m.def("doubled_triple_report", [](const TruncatedOperator& d, const TruncatedOperator& u) {
    DoubledReport rep = verify_doubled(build_doubled(d, u));
    py::dict out;
    out["unitarity_residual"] = rep.unitarity_residual;
    out["hermiticity_residual"] = rep.hermiticity_residual;
    out["square_offdiag"] = rep.square_offdiag;
    out["block_spectra_gap"] = rep.block_spectra_gap;
    out["dimension_base"] = rep.dimension_base;
    out["dimension_doubled"] = rep.dimension_doubled;
    return out;
  });
  m.def("commutator_sweep",
        [](int n, const std::vector<int>& cutoffs) {
          TripleSpec spec = bergman_tr_triple(n, cutoffs);
          auto reports = commutator_boundedness(spec);
          py::list out;
          for (const auto& rep : reports) {
            py::dict d;
            d["generator"] = rep.generator;
            d["stabilizing"] = rep.stabilizing;
            d["last_variation"] = rep.last_variation;
            py::list rows;
            for (const auto& row : rep.rows) rows.append(py::make_tuple(row.cutoff, row.norm));
            d["rows"] = rows;
            out.append(d);
          }
          return out;
        },
        py::arg("n"), py::arg("cutoffs"));

  m.def("tower_eigenvalue", [](double m, int n, int k) {
    return radial_eigenvalue_beta(RadialPoly::defining_function(), m, n, k);
  });
  m.def("expansion_decay",
        [](int n, const std::vector<int>& levels, int k_max) {
          StarSeries ss = expansion_check(RadialPoly::defining_function(),
                                          RadialPoly::defining_function(), n, levels, k_max, 4);
          py::dict out;
          out["fitted_exponent"] = ss.fitted_exponent;
          out["fitted_constant"] = ss.fitted_constant;
          py::list rows;
          for (const auto& row : ss.rows) rows.append(py::make_tuple(row.m, row.norm_e));
          out["rows"] = rows;
          out["c1_estimates"] = ss.c1_estimates;
          return out;
        },
        py::arg("n"), py::arg("levels"), py::arg("k_max"));
  m.def("number_operator", &number_operator, py::arg("levels"), py::arg("n"));
  m.def("metric_factor_modulus", &metric_factor_modulus);

  py::class_<GtoSymbol>(m, "GtoSymbol")
      .def_property_readonly("order", [](const GtoSymbol& s) { return s.order; })
      .def("coeff", [](const GtoSymbol& s, const std::vector<std::complex<double>>& x) {
        return s.coeff(x);
      });
  m.def("symbol_constant", &GtoSymbol::constant, py::arg("order"), py::arg("coefficient"));
  m.def("symbol_mul", &mul);
  m.def("symbol_parametrix", [](const GtoSymbol& a, int n) {
    return parametrix(a, SphereContext{n});
  });
  m.def("lambda_symbol", [](double m_w) { return lambda_symbol(RadialWeight::power(m_w)); });
  m.def("dirac_component_symbol", &dirac_component_symbol, py::arg("j"), py::arg("t"));
  m.def("psi_symbol_order", [](int jvan) {
    return psi_Tf_symbol(jvan, [](const SpherePoint&) { return std::complex<double>(1.0); }, 0.0)
        .order;
  });
}
