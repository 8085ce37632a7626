#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "nqpcd/alm.hpp"
#include "nqpcd/baselines.hpp"
#include "nqpcd/gcd.hpp"
#include "nqpcd/instances.hpp"
#include "nqpcd/matrix_io.hpp"
#include "nqpcd/model.hpp"
#include "nqpcd/nmf.hpp"

namespace py = pybind11;
using nqpcd::DenseMatrix;
using nqpcd::Vector;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

DenseMatrix to_matrix(const DoubleArray& a) {
    if (a.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
    DenseMatrix m(a.shape(0), a.shape(1));
    std::copy_n(a.data(), m.rows() * m.cols(), m.data());
    return m;
}

Vector to_vector(const DoubleArray& a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
    return Vector(a.data(), a.data() + a.shape(0));
}

py::array from_matrix(const DenseMatrix& m) {
    py::array_t<double> a({m.rows(), m.cols()});
    std::copy_n(m.data(), m.rows() * m.cols(), a.mutable_data());
    return a;
}

py::array from_vector(const Vector& v) {
    py::array_t<double> a(v.size());
    std::copy_n(v.data(), v.size(), a.mutable_data());
    return a;
}

py::array trace_array(const std::vector<nqpcd::TraceRow>& trace) {
    py::array_t<double> a({trace.size(), static_cast<std::size_t>(5)});
    auto w = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        w(i, 0) = trace[i].epoch;
        w(i, 1) = static_cast<double>(trace[i].updates);
        w(i, 2) = trace[i].time_sec;
        w(i, 3) = trace[i].objective;
        w(i, 4) = trace[i].residual;
    }
    return a;
}

Vector start_point(const std::optional<DoubleArray>& x0, std::size_t n) {
    return x0 ? to_vector(*x0) : Vector(n, 0.0);
}

py::dict solve_nqp(const DoubleArray& P, const DoubleArray& d, std::optional<DoubleArray> x0,
                   const std::string& method, double eps, std::uint64_t max_updates,
                   std::uint64_t seed) {
    const nqpcd::NqpProblem prob{to_matrix(P), to_vector(d)};
    if (auto r = nqpcd::validate(prob); !r.ok) throw std::invalid_argument(r.message);
    const Vector start = start_point(x0, prob.size());

    nqpcd::SolveReport rep;
    if (method == "greedy") {
        rep = nqpcd::greedy_solve(prob, start, {eps, max_updates, 0});
    } else {
        nqpcd::BaselineOptions opts;
        opts.eps = eps;
        opts.max_updates = max_updates;
        opts.fista_max_iters = max_updates;
        opts.rng_seed = seed;
        if (method == "cyclic") rep = nqpcd::cyclic_solve(prob, start, opts);
        else if (method == "random") rep = nqpcd::randomized_solve(prob, start, opts);
        else if (method == "fista") rep = nqpcd::fista_solve(prob, start, opts);
        else throw std::invalid_argument("unknown method: " + method);
    }

    py::dict out;
    out["x"] = from_vector(rep.x);
    out["objective"] = rep.objective;
    out["delta"] = rep.delta;
    out["updates"] = rep.updates;
    out["converged"] = rep.converged;
    out["trace"] = trace_array(rep.trace);
    return out;
}

py::dict solve_linnqp(const DoubleArray& Q, const DoubleArray& c, const DoubleArray& A,
                      const DoubleArray& b, std::optional<DoubleArray> x0, double eps,
                      double eps_k, bool eps_k_halving, double beta0, double growth,
                      double beta_max, std::size_t max_outer, std::uint64_t inner_max_updates) {
    const nqpcd::LinNqpProblem prob{to_matrix(Q), to_vector(c), to_matrix(A), to_vector(b)};
    nqpcd::alm::AlmOptions opts;
    opts.eps = eps;
    opts.eps_k = {eps_k_halving ? nqpcd::ToleranceSchedule::Kind::Halving
                                : nqpcd::ToleranceSchedule::Kind::Constant,
                  eps_k};
    opts.beta0 = beta0;
    opts.growth = growth;
    opts.beta_max = beta_max;
    opts.max_outer = max_outer;
    opts.inner_max_updates = inner_max_updates;
    const nqpcd::alm::AlmReport rep = nqpcd::alm::solve(prob, start_point(x0, prob.size()), opts);

    py::dict out;
    out["x"] = from_vector(rep.x);
    out["y"] = from_vector(rep.y);
    out["objective"] = rep.objective;
    out["primal_residual"] = rep.primal_residual;
    out["dual_residual_bound"] = rep.dual_residual_bound;
    out["dual_residuals"] = from_vector(rep.dual_residuals);
    out["outer_iterations"] = rep.outer_iterations;
    out["converged"] = rep.converged;
    out["trace"] = trace_array(rep.trace);
    return out;
}

py::dict nmf_solve(const DoubleArray& M, std::size_t r, double eps_k, bool eps_k_halving,
                   double fit_tol, std::size_t max_outer, std::uint64_t seed, bool rescale,
                   std::uint64_t inner_max_updates) {
    const nqpcd::NmfProblem prob{to_matrix(M), r};
    nqpcd::nmf::NmfOptions opts;
    opts.eps_k = {eps_k_halving ? nqpcd::ToleranceSchedule::Kind::Halving
                                : nqpcd::ToleranceSchedule::Kind::Constant,
                  eps_k};
    opts.fit_tol = fit_tol;
    opts.max_outer = max_outer;
    opts.rng_seed = seed;
    opts.rescale = rescale;
    opts.inner_max_updates = inner_max_updates;
    const nqpcd::nmf::NmfReport rep = nqpcd::nmf::altmin_solve(prob, opts);

    py::dict out;
    out["X"] = from_matrix(rep.X);
    out["Y"] = from_matrix(rep.Y);
    out["fit"] = rep.fit;
    out["fit_is_absolute"] = rep.fit_is_absolute;
    out["objective"] = rep.objective;
    out["outer_iterations"] = rep.outer_iterations;
    out["converged"] = rep.converged;
    out["trace"] = trace_array(rep.trace);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Greedy coordinate descent solvers for nonnegative quadratic programming";

    m.def(
        "nqp_objective",
        [](const DoubleArray& P, const DoubleArray& d, const DoubleArray& x) {
            return nqpcd::nqp_objective({to_matrix(P), to_vector(d)}, to_vector(x));
        },
        py::arg("P"), py::arg("d"), py::arg("x"), "F(x) = 1/2 x'Px + d'x");
    m.def(
        "nqp_gradient",
        [](const DoubleArray& P, const DoubleArray& d, const DoubleArray& x) {
            return from_vector(nqpcd::nqp_gradient({to_matrix(P), to_vector(d)}, to_vector(x)));
        },
        py::arg("P"), py::arg("d"), py::arg("x"), "Px + d");
    m.def(
        "kkt_residual",
        [](const DoubleArray& x, const DoubleArray& g) {
            return nqpcd::kkt_residual(to_vector(x), to_vector(g));
        },
        py::arg("x"), py::arg("g"),
        "KKT residual of min_{x>=0} F; zero exactly at optimal points");
    m.def(
        "power_iteration_lmax",
        [](const DoubleArray& P, std::uint64_t iters, double tol) {
            return nqpcd::power_iteration_lmax(to_matrix(P), iters, tol);
        },
        py::arg("P"), py::arg("iters") = 100, py::arg("tol") = 1e-6,
        "Rayleigh-quotient estimate of the largest eigenvalue");

    m.def("solve_nqp", &solve_nqp, py::arg("P"), py::arg("d"), py::arg("x0") = py::none(),
          py::arg("method") = "greedy", py::arg("eps") = 1e-6, py::arg("max_updates") = 0,
          py::arg("seed") = 0,
          "Solve min 1/2 x'Px + d'x over x >= 0 by greedy|cyclic|random CD or FISTA");
    m.def("solve_linnqp", &solve_linnqp, py::arg("Q"), py::arg("c"), py::arg("A"), py::arg("b"),
          py::arg("x0") = py::none(), py::arg("eps") = 1e-3, py::arg("eps_k") = 0.0,
          py::arg("eps_k_halving") = false, py::arg("beta0") = 1.0, py::arg("growth") = 2.0,
          py::arg("beta_max") = 1e8, py::arg("max_outer") = 100,
          py::arg("inner_max_updates") = 0,
          "Inexact augmented Lagrangian with greedy CD subproblem solves");
    m.def("nmf", &nmf_solve, py::arg("M"), py::arg("r"), py::arg("eps_k") = 1e-3,
          py::arg("eps_k_halving") = false, py::arg("fit_tol") = 1e-3, py::arg("max_outer") = 100,
          py::arg("seed") = 0, py::arg("rescale") = true, py::arg("inner_max_updates") = 0,
          "Alternating minimization for M ~ XY' with X, Y >= 0");

    m.def(
        "gen_random_psd_nqp",
        [](std::size_t n, std::uint64_t seed) {
            const auto prob = nqpcd::gen_random_psd_nqp(n, seed);
            return py::make_tuple(from_matrix(prob.P), from_vector(prob.d));
        },
        py::arg("n"), py::arg("seed"), "Seeded dense PSD instance: P = G'G, d standard normal");
    m.def(
        "gen_hard_nqp",
        [](std::size_t n) {
            const auto prob = nqpcd::gen_hard_nqp(n);
            return py::make_tuple(from_matrix(prob.P), from_vector(prob.d));
        },
        py::arg("n"), "P = 0.1 I + 0.9 E, d = -10 e");
    m.def(
        "gen_lin_nqp",
        [](std::size_t m_, std::size_t n, std::uint64_t seed) {
            const auto prob = nqpcd::gen_lin_nqp(m_, n, seed);
            return py::make_tuple(from_matrix(prob.Q), from_vector(prob.c), from_matrix(prob.A),
                                  from_vector(prob.b));
        },
        py::arg("m"), py::arg("n"), py::arg("seed"),
        "Seeded equality-constrained instance with a feasible nonnegative point");
    m.def(
        "gen_synthetic_nmf",
        [](std::size_t m_, std::size_t n, std::size_t r, std::uint64_t seed) {
            const auto inst = nqpcd::gen_synthetic_nmf(m_, n, r, seed);
            return py::make_tuple(from_matrix(inst.problem.M), from_matrix(inst.L),
                                  from_matrix(inst.R));
        },
        py::arg("m"), py::arg("n"), py::arg("r"), py::arg("seed"),
        "M = max(0, randn(m,r)) max(0, randn(n,r))'");

    m.def(
        "save_matrix",
        [](const std::string& path, const DoubleArray& a) {
            nqpcd::io::save_matrix(path, to_matrix(a));
        },
        py::arg("path"), py::arg("matrix"));
    m.def(
        "load_matrix",
        [](const std::string& path) { return from_matrix(nqpcd::io::load_matrix(path)); },
        py::arg("path"));
    m.def(
        "save_vector",
        [](const std::string& path, const DoubleArray& a) {
            nqpcd::io::save_vector(path, to_vector(a));
        },
        py::arg("path"), py::arg("vector"));
    m.def(
        "load_vector",
        [](const std::string& path) { return from_vector(nqpcd::io::load_vector(path)); },
        py::arg("path"));
}
