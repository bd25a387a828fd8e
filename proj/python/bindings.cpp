// pybind11 bindings exposing the core operations: function construction and
// evaluation, disk quadrature, the projection/adjoint operators, the norm
// functionals, the verification suite, and the extremal search.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergman/diskquad.hpp"
#include "bergman/extremal.hpp"
#include "bergman/funcspace.hpp"
#include "bergman/norms.hpp"
#include "bergman/operators.hpp"
#include "bergman/verify.hpp"

namespace py = pybind11;
using namespace bergman;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical toolkit for the adjoint of the Bergman projection";

  py::enum_<FnKind>(m, "FnKind")
      .value("polynomial", FnKind::polynomial)
      .value("mobius", FnKind::mobius)
      .value("log_extremal", FnKind::log_extremal)
      .value("gzn", FnKind::gzn)
      .value("combo", FnKind::combo);

  py::class_<AnalyticFn>(m, "AnalyticFn")
      .def_static("polynomial", &AnalyticFn::polynomial, py::arg("coeffs"))
      .def_static("mobius", &AnalyticFn::mobius, py::arg("lambda_"))
      .def_static("log_extremal", &AnalyticFn::log_extremal)
      .def_static("gzn", &AnalyticFn::gzn, py::arg("n"), py::arg("base"))
      .def_static("combo", &AnalyticFn::combo, py::arg("terms"))
      .def("kind", &AnalyticFn::kind)
      .def("eval", &AnalyticFn::eval, py::arg("z"))
      .def("deriv", &AnalyticFn::deriv, py::arg("z"))
      .def("deriv2", &AnalyticFn::deriv2, py::arg("z"))
      .def("pderiv", &AnalyticFn::pderiv, py::arg("z"))
      .def("coefficients", &AnalyticFn::coefficients)
      .def("degree", &AnalyticFn::degree);

  m.def("gzn_build", &gzn_build, py::arg("n"), py::arg("base"));
  m.def("gzn_constant", &gzn_constant, py::arg("n"));
  m.def("geom_partial_closed", &geom_partial_closed, py::arg("n"), py::arg("s"));

  py::class_<MeasureSpec>(m, "MeasureSpec")
      .def(py::init<>())
      .def_readwrite("alpha", &MeasureSpec::alpha);

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("radial_nodes", &QuadratureSpec::radial_nodes)
      .def_readwrite("angular_nodes", &QuadratureSpec::angular_nodes)
      .def_readwrite("outer_radius", &QuadratureSpec::outer_radius)
      .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
      .def_readwrite("max_refinements", &QuadratureSpec::max_refinements);

  py::class_<IntegralResult>(m, "IntegralResult")
      .def_readonly("value", &IntegralResult::value)
      .def_readonly("error_estimate", &IntegralResult::error_estimate)
      .def_readonly("refinements_used", &IntegralResult::refinements_used)
      .def_readonly("converged", &IntegralResult::converged);

  m.def(
      "integrate_disk",
      [](const std::function<Complex(Complex)>& f, const MeasureSpec& mu,
         const QuadratureSpec& spec) { return integrate_disk(f, mu, spec); },
      py::arg("f"), py::arg("measure") = MeasureSpec{},
      py::arg("spec") = QuadratureSpec{});
  m.def("monomial_moment", &monomial_moment, py::arg("p"), py::arg("q"),
        py::arg("R"));

  py::class_<CompactMonomial>(m, "CompactMonomial")
      .def(py::init([](int a, int b, double radius) {
             return CompactMonomial{a, b, radius};
           }),
           py::arg("a"), py::arg("b"), py::arg("radius"))
      .def_readwrite("a", &CompactMonomial::a)
      .def_readwrite("b", &CompactMonomial::b)
      .def_readwrite("radius", &CompactMonomial::radius);

  m.def("project", &project, py::arg("f"), py::arg("z"),
        py::arg("spec") = QuadratureSpec{});
  m.def("project_monomial_closed", &project_monomial_closed, py::arg("a"),
        py::arg("b"), py::arg("R"), py::arg("z"));
  m.def("project_polynomial", &project_polynomial, py::arg("p"), py::arg("z"),
        py::arg("R"), py::arg("spec") = QuadratureSpec{});
  m.def("project_polynomial_closed", &project_polynomial_closed, py::arg("p"),
        py::arg("z"), py::arg("R"));
  m.def("adjoint_quad", &adjoint_quad, py::arg("g"), py::arg("beta"),
        py::arg("z"), py::arg("spec") = QuadratureSpec{});
  m.def("adjoint_series", &adjoint_series, py::arg("g"), py::arg("beta"),
        py::arg("z"));
  m.def("truncated_kernel_integral", &truncated_kernel_integral, py::arg("g"),
        py::arg("z"), py::arg("r"), py::arg("spec") = QuadratureSpec{});
  m.def("log_truncated_kernel_closed", &log_truncated_kernel_closed,
        py::arg("z"), py::arg("r"));
  m.def("besov_pairing", &besov_pairing, py::arg("f"), py::arg("g"),
        py::arg("spec") = QuadratureSpec{});
  m.def("duality_check", &duality_check, py::arg("f"), py::arg("g"),
        py::arg("alpha"), py::arg("spec") = QuadratureSpec{},
        py::arg("quad_tol") = 1e-5);

  py::class_<SupScanParams>(m, "SupScanParams")
      .def(py::init<>())
      .def_static("search_profile", &SupScanParams::search_profile)
      .def_readwrite("max_levels", &SupScanParams::max_levels)
      .def_readwrite("min_levels", &SupScanParams::min_levels)
      .def_readwrite("base_angular_log2", &SupScanParams::base_angular_log2)
      .def_readwrite("angular_growth", &SupScanParams::angular_growth)
      .def_readwrite("stability_rel", &SupScanParams::stability_rel)
      .def_readwrite("polish_rounds", &SupScanParams::polish_rounds);

  py::class_<SupEstimate>(m, "SupEstimate")
      .def_readonly("value", &SupEstimate::value)
      .def_readonly("argmax", &SupEstimate::argmax)
      .def_readonly("grid_levels", &SupEstimate::grid_levels)
      .def_readonly("boundary_offset", &SupEstimate::boundary_offset)
      .def_readonly("uncertainty", &SupEstimate::uncertainty);

  m.def("weighted_sup", &weighted_sup, py::arg("h"), py::arg("beta"),
        py::arg("params") = SupScanParams{});
  m.def("bloch_seminorm", &bloch_seminorm, py::arg("f"),
        py::arg("params") = SupScanParams{});
  m.def("bloch_norm", &bloch_norm, py::arg("f"),
        py::arg("params") = SupScanParams{});
  m.def("besov_seminorm", &besov_seminorm, py::arg("f"), py::arg("p"),
        py::arg("spec") = QuadratureSpec{});
  m.def("extremal_functional", &extremal_functional, py::arg("f"),
        py::arg("params") = SupScanParams{});
  m.def("extremal_ratio", &extremal_ratio, py::arg("f"),
        py::arg("params") = SupScanParams{});

  py::class_<OptimalRadius>(m, "OptimalRadius")
      .def_readonly("r", &OptimalRadius::r)
      .def_readonly("phi_max", &OptimalRadius::phi_max);
  m.def("optimal_radius", &optimal_radius, py::arg("mod_z"));

  py::class_<CheckMetric>(m, "CheckMetric")
      .def_readonly("name", &CheckMetric::name)
      .def_readonly("computed", &CheckMetric::computed)
      .def_readonly("expected", &CheckMetric::expected)
      .def_readonly("tolerance", &CheckMetric::tolerance)
      .def_readonly("pass_", &CheckMetric::pass);

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("name", &CheckReport::name)
      .def_readonly("anchor", &CheckReport::anchor)
      .def_readonly("metrics", &CheckReport::metrics)
      .def_readonly("pass_", &CheckReport::pass)
      .def_readonly("informational", &CheckReport::informational)
      .def_readonly("runtime_seconds", &CheckReport::runtime_seconds);

  py::class_<VerifyConfig>(m, "VerifyConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &VerifyConfig::alpha)
      .def_readwrite("seed", &VerifyConfig::seed)
      .def_readwrite("only", &VerifyConfig::only)
      .def_readwrite("tol", &VerifyConfig::tol)
      .def_readwrite("strict_family_bloch", &VerifyConfig::strict_family_bloch);

  m.def("check_names", &check_names);
  m.def("run_check", &run_check, py::arg("name"),
        py::arg("cfg") = VerifyConfig{});
  m.def("run_all", &run_all, py::arg("cfg") = VerifyConfig{});
  m.def("aggregate_pass", &aggregate_pass, py::arg("reports"));

  py::class_<GrowthPoint>(m, "GrowthPoint")
      .def_readonly("n", &GrowthPoint::n)
      .def_readonly("value", &GrowthPoint::value);
  m.def("growth_values", &growth_values, py::arg("alpha"), py::arg("n_min"),
        py::arg("n_max"));
  m.def("growth_slope", &growth_slope, py::arg("points"));

  py::enum_<SearchFamily>(m, "SearchFamily")
      .value("polynomial", SearchFamily::polynomial)
      .value("mobius_combo", SearchFamily::mobius_combo);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("family", &SearchConfig::family)
      .def_readwrite("degree", &SearchConfig::degree)
      .def_readwrite("atoms", &SearchConfig::atoms)
      .def_readwrite("restarts", &SearchConfig::restarts)
      .def_readwrite("iterations", &SearchConfig::iterations)
      .def_readwrite("step_init", &SearchConfig::step_init)
      .def_readwrite("step_tol", &SearchConfig::step_tol)
      .def_readwrite("seed", &SearchConfig::seed)
      .def_readwrite("light_objective", &SearchConfig::light_objective)
      .def_readwrite("record_history", &SearchConfig::record_history);

  py::class_<HistoryRow>(m, "HistoryRow")
      .def_readonly("start", &HistoryRow::start)
      .def_readonly("iteration", &HistoryRow::iteration)
      .def_readonly("value", &HistoryRow::value);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("best_value", &SearchResult::best_value)
      .def_readonly("best_params", &SearchResult::best_params)
      .def_readonly("witness_point", &SearchResult::witness_point)
      .def_readonly("starts_run", &SearchResult::starts_run)
      .def_readonly("best_start", &SearchResult::best_start)
      .def_readonly("history", &SearchResult::history);

  m.def("parameter_count", &parameter_count, py::arg("cfg"));
  m.def("assemble", &assemble, py::arg("x"), py::arg("cfg"));
  m.def("objective", &objective, py::arg("x"), py::arg("cfg"));
  m.def("search", &search, py::arg("cfg") = SearchConfig{});
}
