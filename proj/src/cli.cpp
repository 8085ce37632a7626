#include "nqpcd/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "nqpcd/alm.hpp"
#include "nqpcd/baselines.hpp"
#include "nqpcd/gcd.hpp"
#include "nqpcd/instances.hpp"
#include "nqpcd/matrix_io.hpp"
#include "nqpcd/model.hpp"
#include "nqpcd/nmf.hpp"

namespace fs = std::filesystem;

namespace nqpcd::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kBudgetExhausted = 2;

// One shared flag bag; each subcommand registers the flags it understands.
struct Args {
    std::string gen;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t r = 0;
    std::uint64_t seed = 0;
    double eps = 0.0;
    double eps_k = 0.0;
    double beta0 = 1.0;
    double beta_growth = 2.0;
    double beta_max = 1e8;
    std::size_t max_outer = 100;
    std::uint64_t max_updates = 0;
    std::string method = "greedy";
    std::string p_path, d_path, q_path, c_path, a_path, b_path, mat_path;
    std::string out;
    bool no_rescale = false;
    std::size_t basis_height = 0;
    std::size_t basis_width = 0;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw std::runtime_error(message);
}

fs::path ensure_out_dir(const std::string& out) {
    require(!out.empty(), "--out is required");
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

void write_summary(const fs::path& path, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

std::string fmt(double v) { return io::format_double(v); }

void check_valid(const ValidationReport& report) {
    require(report.ok, "invalid problem: " + report.message);
}

NqpProblem make_nqp(const Args& a) {
    if (!a.gen.empty()) {
        require(a.n > 0, "--n is required with --gen");
        if (a.gen == "hard") return gen_hard_nqp(a.n);
        if (a.gen == "randpsd") return gen_random_psd_nqp(a.n, a.seed);
        throw std::runtime_error("unknown --gen kind for an NQP: " + a.gen);
    }
    require(!a.p_path.empty() && !a.d_path.empty(), "need --gen or both --p and --d");
    NqpProblem prob{io::load_matrix(a.p_path), io::load_vector(a.d_path)};
    check_valid(validate(prob));
    return prob;
}

LinNqpProblem make_lin_nqp(const Args& a) {
    if (!a.gen.empty()) {
        require(a.gen == "linnqp", "unknown --gen kind for a constrained NQP: " + a.gen);
        require(a.m > 0 && a.n > 0, "--m and --n are required with --gen linnqp");
        return gen_lin_nqp(a.m, a.n, a.seed);
    }
    require(!a.q_path.empty() && !a.c_path.empty() && !a.a_path.empty() && !a.b_path.empty(),
            "need --gen linnqp or all of --q --c --a --b");
    LinNqpProblem prob{io::load_matrix(a.q_path), io::load_vector(a.c_path),
                       io::load_matrix(a.a_path), io::load_vector(a.b_path)};
    check_valid(validate(prob));
    return prob;
}

NmfProblem make_nmf(const Args& a) {
    if (!a.gen.empty()) {
        require(a.gen == "nmf", "unknown --gen kind for an NMF: " + a.gen);
        require(a.m > 0 && a.n > 0 && a.r > 0, "--m, --n, --r are required with --gen nmf");
        return std::move(gen_synthetic_nmf(a.m, a.n, a.r, a.seed).problem);
    }
    require(!a.mat_path.empty(), "need --gen nmf or --mat");
    require(a.r > 0, "--r is required with --mat");
    NmfProblem prob{io::load_matrix(a.mat_path), a.r};
    check_valid(validate(prob));
    return prob;
}

SolveReport dispatch_nqp_method(const NqpProblem& prob, const Args& a, const std::string& method) {
    const Vector x0(prob.size(), 0.0);
    if (method == "greedy") {
        return greedy_solve(prob, x0, {a.eps, a.max_updates, 0});
    }
    BaselineOptions opts;
    opts.eps = a.eps;
    opts.max_updates = a.max_updates;
    opts.rng_seed = a.seed;
    opts.fista_max_iters = a.max_updates;
    if (method == "cyclic") return cyclic_solve(prob, x0, opts);
    if (method == "random") return randomized_solve(prob, x0, opts);
    if (method == "fista") return fista_solve(prob, x0, opts);
    throw std::runtime_error("unknown --method: " + method);
}

int cmd_gen(const Args& a) {
    const fs::path dir = ensure_out_dir(a.out);
    require(!a.gen.empty(), "--gen is required");
    if (a.gen == "hard" || a.gen == "randpsd") {
        const NqpProblem prob = make_nqp(a);
        io::save_matrix((dir / "P.mat").string(), prob.P);
        io::save_vector((dir / "d.vec").string(), prob.d);
    } else if (a.gen == "linnqp") {
        const LinNqpProblem prob = make_lin_nqp(a);
        io::save_matrix((dir / "Q.mat").string(), prob.Q);
        io::save_vector((dir / "c.vec").string(), prob.c);
        io::save_matrix((dir / "A.mat").string(), prob.A);
        io::save_vector((dir / "b.vec").string(), prob.b);
    } else if (a.gen == "nmf") {
        require(a.m > 0 && a.n > 0 && a.r > 0, "--m, --n, --r are required with --gen nmf");
        const SyntheticNmf inst = gen_synthetic_nmf(a.m, a.n, a.r, a.seed);
        io::save_matrix((dir / "M.mat").string(), inst.problem.M);
        io::save_matrix((dir / "L.mat").string(), inst.L);
        io::save_matrix((dir / "R.mat").string(), inst.R);
    } else {
        throw std::runtime_error("unknown --gen kind: " + a.gen);
    }
    return kOk;
}

int cmd_solve_nqp(const Args& a) {
    const fs::path dir = ensure_out_dir(a.out);
    const NqpProblem prob = make_nqp(a);
    const SolveReport rep = dispatch_nqp_method(prob, a, a.method);
    write_trace(rep.trace, (dir / "trace.csv").string());
    io::save_vector((dir / "x.vec").string(), rep.x);
    write_summary(dir / "summary.txt",
                  {{"method", a.method},
                   {"objective", fmt(rep.objective)},
                   {"residual", fmt(rep.delta)},
                   {"updates", std::to_string(rep.updates)},
                   {"time_sec", fmt(rep.trace.back().time_sec)},
                   {"converged", rep.converged ? "true" : "false"}});
    return rep.converged ? kOk : kBudgetExhausted;
}

int cmd_solve_lin_nqp(const Args& a) {
    const fs::path dir = ensure_out_dir(a.out);
    const LinNqpProblem prob = make_lin_nqp(a);
    alm::AlmOptions opts;
    opts.eps = a.eps;
    opts.eps_k = {ToleranceSchedule::Kind::Constant, a.eps_k};
    opts.beta0 = a.beta0;
    opts.growth = a.beta_growth;
    opts.beta_max = a.beta_max;
    opts.max_outer = a.max_outer;
    opts.inner_max_updates = a.max_updates;
    const alm::AlmReport rep = alm::solve(prob, Vector(prob.size(), 0.0), opts);
    write_trace(rep.trace, (dir / "trace.csv").string());
    io::save_vector((dir / "x.vec").string(), rep.x);
    io::save_vector((dir / "y.vec").string(), rep.y);
    write_summary(dir / "summary.txt",
                  {{"objective", fmt(rep.objective)},
                   {"residual", fmt(rep.primal_residual)},
                   {"dual_residual_bound", fmt(rep.dual_residual_bound)},
                   {"outer_iterations", std::to_string(rep.outer_iterations)},
                   {"updates", std::to_string(rep.inner_updates)},
                   {"time_sec", fmt(rep.trace.empty() ? 0.0 : rep.trace.back().time_sec)},
                   {"converged", rep.converged ? "true" : "false"}});
    return rep.converged ? kOk : kBudgetExhausted;
}

int cmd_nmf(const Args& a) {
    const fs::path dir = ensure_out_dir(a.out);
    const NmfProblem prob = make_nmf(a);
    nmf::NmfOptions opts;
    if (a.eps_k > 0.0) opts.eps_k = {ToleranceSchedule::Kind::Constant, a.eps_k};
    if (a.eps > 0.0) opts.fit_tol = a.eps;
    opts.max_outer = a.max_outer;
    opts.rng_seed = a.seed;
    opts.rescale = !a.no_rescale;
    opts.inner_max_updates = a.max_updates;
    const nmf::NmfReport rep = nmf::altmin_solve(prob, opts);
    write_trace(rep.trace, (dir / "trace.csv").string());
    io::save_matrix((dir / "X.mat").string(), rep.X);
    io::save_matrix((dir / "Y.mat").string(), rep.Y);
    if (a.basis_height > 0 || a.basis_width > 0) {
        require(a.basis_height * a.basis_width == prob.M.rows(),
                "--basis-height times --basis-width must equal the row count of M");
        for (std::size_t k = 0; k < prob.r; ++k) {
            DenseMatrix basis(a.basis_height, a.basis_width);
            for (std::size_t i = 0; i < prob.M.rows(); ++i)
                basis(i / a.basis_width, i % a.basis_width) = rep.X(i, k);
            io::save_matrix((dir / ("basis_" + std::to_string(k) + ".mat")).string(), basis);
        }
    }
    write_summary(dir / "summary.txt",
                  {{"objective", fmt(rep.objective)},
                   {"residual", fmt(rep.fit)},
                   {"fit_is_absolute", rep.fit_is_absolute ? "true" : "false"},
                   {"outer_iterations", std::to_string(rep.outer_iterations)},
                   {"updates", std::to_string(rep.inner_updates)},
                   {"time_sec", fmt(rep.trace.back().time_sec)},
                   {"converged", rep.converged ? "true" : "false"}});
    return rep.converged ? kOk : kBudgetExhausted;
}

int cmd_compare(const Args& a) {
    const fs::path dir = ensure_out_dir(a.out);
    const NqpProblem prob = make_nqp(a);
    std::vector<std::pair<std::string, std::string>> summary;
    bool all_converged = true;
    for (const std::string method : {"greedy", "cyclic", "random", "fista"}) {
        const SolveReport rep = dispatch_nqp_method(prob, a, method);
        write_trace(rep.trace, (dir / ("trace_" + method + ".csv")).string());
        summary.emplace_back(method + ".objective", fmt(rep.objective));
        summary.emplace_back(method + ".residual", fmt(rep.delta));
        summary.emplace_back(method + ".updates", std::to_string(rep.updates));
        summary.emplace_back(method + ".epochs", fmt(rep.trace.back().epoch));
        summary.emplace_back(method + ".time_sec", fmt(rep.trace.back().time_sec));
        summary.emplace_back(method + ".converged", rep.converged ? "true" : "false");
        all_converged = all_converged && rep.converged;
    }
    write_summary(dir / "summary.txt", summary);
    return all_converged ? kOk : kBudgetExhausted;
}

}  // namespace

void write_trace(const std::vector<TraceRow>& trace, const std::string& path) {
    if (trace.empty()) throw std::invalid_argument("write_trace: empty trace");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "epoch,updates,time_sec,objective,residual\n";
    for (const TraceRow& row : trace) {
        out << io::format_double(row.epoch) << ',' << row.updates << ','
            << io::format_double(row.time_sec) << ',' << io::format_double(row.objective) << ','
            << io::format_double(row.residual) << '\n';
    }
    if (!out) throw std::runtime_error(path + ": write failed");
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Greedy coordinate descent solvers for nonnegative quadratic programming"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read key=value defaults; command-line flags override");

    Args a;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", a.seed, "Generator seed");
        cmd->add_option("--out", a.out, "Output directory");
        cmd->add_option("--max-updates", a.max_updates,
                        "Coordinate-update budget (0: 1000*n; FISTA: iteration budget)");
    };

    CLI::App* gen = app.add_subcommand("gen", "Generate an instance and write it out");
    gen->add_option("--gen", a.gen, "Instance family: randpsd|hard|linnqp|nmf")->required();
    gen->add_option("--n", a.n, "Variable count");
    gen->add_option("--m", a.m, "Constraint or data row count");
    gen->add_option("--r", a.r, "NMF rank");
    add_common(gen);

    CLI::App* snqp = app.add_subcommand("solve-nqp", "Solve min 1/2 x'Px + d'x over x >= 0");
    snqp->add_option("--gen", a.gen, "Generate the instance: randpsd|hard");
    snqp->add_option("--n", a.n, "Variable count with --gen");
    snqp->add_option("--p", a.p_path, "P matrix file");
    snqp->add_option("--d", a.d_path, "d vector file");
    snqp->add_option("--method", a.method, "greedy|cyclic|random|fista")
        ->check(CLI::IsMember({"greedy", "cyclic", "random", "fista"}));
    snqp->add_option("--eps", a.eps, "KKT residual tolerance")->default_val(1e-6);
    add_common(snqp);

    CLI::App* slin = app.add_subcommand("solve-linnqp",
                                        "Solve min 1/2 x'Qx + c'x over x >= 0 with Ax = b");
    slin->add_option("--gen", a.gen, "Generate the instance: linnqp");
    slin->add_option("--m", a.m, "Constraint count with --gen");
    slin->add_option("--n", a.n, "Variable count with --gen");
    slin->add_option("--q", a.q_path, "Q matrix file");
    slin->add_option("--c", a.c_path, "c vector file");
    slin->add_option("--a", a.a_path, "A matrix file");
    slin->add_option("--b", a.b_path, "b vector file");
    slin->add_option("--eps", a.eps, "Stop once ||Ax-b|| <= eps")->default_val(1e-3);
    slin->add_option("--eps-k", a.eps_k, "Subproblem tolerance (0: min(eps, 1e-3))");
    slin->add_option("--beta0", a.beta0, "Initial penalty")->default_val(1.0);
    slin->add_option("--beta-growth", a.beta_growth, "Penalty growth factor")->default_val(2.0);
    slin->add_option("--beta-max", a.beta_max, "Penalty cap")->default_val(1e8);
    slin->add_option("--max-outer", a.max_outer, "Outer iteration budget")->default_val(100);
    add_common(slin);

    CLI::App* nm = app.add_subcommand("nmf", "Factorize M ~ XY' with X, Y >= 0");
    nm->add_option("--gen", a.gen, "Generate the instance: nmf");
    nm->add_option("--m", a.m, "Data row count with --gen");
    nm->add_option("--n", a.n, "Data column count with --gen");
    nm->add_option("--mat", a.mat_path, "M matrix file");
    nm->add_option("--r", a.r, "Target rank");
    nm->add_option("--eps", a.eps, "Fit tolerance ||XY'-M||_F/||M||_F")->default_val(1e-3);
    nm->add_option("--eps-k", a.eps_k, "Per-row GCD tolerance")->default_val(1e-3);
    nm->add_option("--max-outer", a.max_outer, "Outer iteration budget")->default_val(100);
    nm->add_flag("--no-rescale", a.no_rescale, "Disable the factor-norm rescaling");
    nm->add_option("--basis-height", a.basis_height, "Export X columns as height x width matrices");
    nm->add_option("--basis-width", a.basis_width, "Export X columns as height x width matrices");
    add_common(nm);

    CLI::App* cmp = app.add_subcommand("compare",
                                       "Run greedy, cyclic, random, and FISTA on one instance");
    cmp->add_option("--gen", a.gen, "Generate the instance: randpsd|hard")->required();
    cmp->add_option("--n", a.n, "Variable count");
    cmp->add_option("--eps", a.eps, "KKT residual tolerance")->default_val(1e-6);
    add_common(cmp);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (gen->parsed()) return cmd_gen(a);
        if (snqp->parsed()) return cmd_solve_nqp(a);
        if (slin->parsed()) return cmd_solve_lin_nqp(a);
        if (nm->parsed()) return cmd_nmf(a);
        return cmd_compare(a);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace nqpcd::cli
