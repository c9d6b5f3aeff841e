#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psilcm/asymptotics.hpp"
#include "psilcm/exact_moments.hpp"
#include "psilcm/extremal.hpp"
#include "psilcm/oracle.hpp"
#include "psilcm/poly.hpp"
#include "psilcm/psi.hpp"
#include "psilcm/random_models.hpp"

namespace py = pybind11;
using namespace psilcm;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and simulated statistics of psi(A) = log lcm(A) for subsets of {1..n}.";

    py::register_exception<out_of_table_error>(m, "OutOfTableError", PyExc_IndexError);
    py::register_exception<resource_limit_error>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::class_<PrimeTable>(m, "PrimeTable")
        .def(py::init<std::uint64_t>(), py::arg("limit"))
        .def_property_readonly("limit", &PrimeTable::limit)
        .def("primes",
             [](const PrimeTable& t) {
                 return std::vector<std::uint64_t>(t.primes().begin(), t.primes().end());
             })
        .def("prime_count", &PrimeTable::prime_count, py::arg("x"))
        .def("von_mangoldt", &PrimeTable::von_mangoldt, py::arg("m"))
        .def("chebyshev_psi", &PrimeTable::chebyshev_psi, py::arg("x"))
        .def("factorize", &PrimeTable::factorize, py::arg("a"))
        .def("euler_phi", &PrimeTable::euler_phi, py::arg("q"));

    py::class_<IntegerSet>(m, "IntegerSet")
        .def(py::init<std::uint64_t, std::vector<std::uint64_t>>(), py::arg("n"),
             py::arg("elements"))
        .def_property_readonly("n", &IntegerSet::n)
        .def_property_readonly("elements",
                               [](const IntegerSet& s) { return s.elements(); });

    m.def("psi_of_set", &psi_of_set, py::arg("A"), py::arg("table"));
    m.def("psi_indicator", &psi_indicator, py::arg("A"), py::arg("table"));

    m.def("sample_bernoulli",
          [](std::uint64_t n, double delta, std::uint64_t seed, std::uint64_t trial) {
              return sample_bernoulli(BernoulliModel{n, delta}, seed, trial);
          },
          py::arg("n"), py::arg("delta"), py::arg("seed") = 0, py::arg("trial_index") = 0);
    m.def("sample_uniform_k",
          [](std::uint64_t n, std::uint64_t k, std::uint64_t seed, std::uint64_t trial) {
              return sample_uniform_k(UniformKModel{n, k}, seed, trial);
          },
          py::arg("n"), py::arg("k"), py::arg("seed") = 0, py::arg("trial_index") = 0);

    py::class_<SampleStats>(m, "SampleStats")
        .def_readonly("trials", &SampleStats::trials)
        .def_readonly("mean_psi", &SampleStats::mean_psi)
        .def_readonly("var_psi", &SampleStats::var_psi)
        .def_readonly("mean_size", &SampleStats::mean_size)
        .def_readonly("quantiles", &SampleStats::quantiles)
        .def_readonly("degenerate", &SampleStats::degenerate);

    m.def("montecarlo_psi_bernoulli",
          [](std::uint64_t n, double delta, std::uint64_t trials, std::uint64_t seed,
             const PrimeTable& t) {
              return montecarlo_psi(BernoulliModel{n, delta}, trials, seed, t);
          },
          py::arg("n"), py::arg("delta"), py::arg("trials"), py::arg("seed"), py::arg("table"));
    m.def("montecarlo_psi_uniform_k",
          [](std::uint64_t n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed,
             const PrimeTable& t) {
              return montecarlo_psi(UniformKModel{n, k}, trials, seed, t);
          },
          py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("table"));

    m.def("expectation_bernoulli_direct", &expectation_bernoulli_direct, py::arg("n"),
          py::arg("delta"), py::arg("table"));
    m.def("expectation_bernoulli_grouped", &expectation_bernoulli_grouped, py::arg("n"),
          py::arg("delta"), py::arg("table"));
    m.def("variance_bernoulli_exact", &variance_bernoulli_exact, py::arg("n"), py::arg("delta"),
          py::arg("table"), py::arg("pairwise_cap") = 30'000);
    m.def("expectation_uniform_k", &expectation_uniform_k, py::arg("n"), py::arg("k"),
          py::arg("table"));
    m.def("second_moment_uniform_k", &second_moment_uniform_k, py::arg("n"), py::arg("k"),
          py::arg("table"), py::arg("pairwise_cap") = 5'000);
    m.def("pair_indicator_expectation", &pair_indicator_expectation, py::arg("m"), py::arg("l"),
          py::arg("n"), py::arg("delta"));
    m.def("chernoff_bound", &chernoff_bound, py::arg("k"), py::arg("r"));
    m.def("binomial_tail_exact", &binomial_tail_exact, py::arg("n"), py::arg("delta"),
          py::arg("r"), py::arg("exact_cap") = 10'000);

    m.def("enumerate_bernoulli_moments", &oracle::enumerate_bernoulli_moments, py::arg("n"),
          py::arg("delta"), py::arg("table"));
    m.def("enumerate_uniform_k_moments", &oracle::enumerate_uniform_k_moments, py::arg("n"),
          py::arg("k"), py::arg("table"));

    m.def("smooth_count", &smooth_count, py::arg("x"), py::arg("y"), py::arg("table"));
    m.def("build_smooth_set",
          [](std::uint64_t n, std::uint64_t k, const PrimeTable& t) {
              auto [set, spec] = build_smooth_set(n, k, t);
              return py::make_tuple(set, spec.y, spec.t_effective);
          },
          py::arg("n"), py::arg("k"), py::arg("table"));
    m.def("build_prime_tail_set", &build_prime_tail_set, py::arg("n"), py::arg("k"),
          py::arg("table"));
    m.def("psi_smooth_closed_form", &psi_smooth_closed_form, py::arg("n"), py::arg("y"),
          py::arg("table"));
    m.def("cep_prediction", &cep_prediction, py::arg("x"), py::arg("y"));

    py::class_<IntPolynomial>(m, "IntPolynomial")
        .def(py::init<std::vector<std::int64_t>>(), py::arg("coeffs"))
        .def_property_readonly("degree", &IntPolynomial::degree)
        .def_property_readonly("coeffs", &IntPolynomial::coeffs);

    m.def("poly_set", &poly_set, py::arg("f"), py::arg("n"), py::arg("table"));
    m.def("psi_poly", &psi_poly, py::arg("f"), py::arg("n"), py::arg("table"));
    m.def("predict_linear", &predict_linear, py::arg("f"), py::arg("n"), py::arg("table"));
    m.def("predict_quadratic_irreducible", &predict_quadratic_irreducible, py::arg("f"),
          py::arg("n"), py::arg("B"));
    m.def("predict_reducible_x2m1", &predict_reducible_x2m1, py::arg("n"));
    m.def("predict_conjecture", &predict_conjecture, py::arg("f"), py::arg("n"));
    m.def("estimate_B_constant",
          [](std::uint64_t prime_cap) {
              auto e = estimate_B_constant(prime_cap);
              return py::make_tuple(e.value, e.last_block_delta);
          },
          py::arg("prime_cap"));
    m.def("legendre_minus_one", &legendre_minus_one, py::arg("p"));

    m.def("bernoulli_main_term", &bernoulli_main_term, py::arg("n"), py::arg("delta"));
    m.def("epsilon_error", &epsilon_error, py::arg("x"), py::arg("table"));
    m.def("error_envelope", &error_envelope, py::arg("n"), py::arg("delta"), py::arg("C"));
    m.def("predict_mean",
          [](std::uint64_t n, double theta, double c) {
              return predict_mean(RegimeParams{n, theta, c});
          },
          py::arg("n"), py::arg("theta"), py::arg("c"));
}
