#include <doctest.h>

#include <cmath>

#include "nqpcd/gcd.hpp"
#include "nqpcd/instances.hpp"
#include "nqpcd/rng.hpp"
#include "oracles.hpp"

using namespace nqpcd;

namespace {

const NqpProblem kSeparable{DenseMatrix{{1, 0}, {0, 1}}, {-1, -2}};

}  // namespace

TEST_SUITE("gcd") {

TEST_CASE("candidate: separable instance, hand-computed") {
    const NqpProblem prob{DenseMatrix{{2, 0}, {0, 1}}, {-2, -2}};
    GcdState st = init_state(prob, {0, 0});
    const Candidate c0 = coordinate_candidate(st, prob, 0);
    CHECK(c0.xhat == 1.0);
    CHECK(c0.decrease == -1.0);
    const Candidate c1 = coordinate_candidate(st, prob, 1);
    CHECK(c1.xhat == 2.0);
    CHECK(c1.decrease == -2.0);
}

TEST_CASE("candidate: zero partial derivative keeps the coordinate") {
    GcdState st = init_state(kSeparable, {1, 0});
    CHECK(st.g[0] == 0.0);
    const Candidate c = coordinate_candidate(st, kSeparable, 0);
    CHECK(c.xhat == 1.0);
    CHECK(c.decrease == 0.0);
}

TEST_CASE("candidate: boundary-blocked coordinate clips to zero") {
    const NqpProblem prob{DenseMatrix{{1, 0}, {0, 1}}, {3, -2}};
    GcdState st = init_state(prob, {0, 0});
    const Candidate c = coordinate_candidate(st, prob, 0);
    CHECK(c.xhat == 0.0);
    CHECK(c.decrease == 0.0);
}

TEST_CASE("candidate decrease is never positive") {
    SplitMix64 rng(8);
    for (std::uint64_t seed : {40u, 41u, 42u}) {
        const NqpProblem prob = gen_random_psd_nqp(6, seed);
        Vector x(6);
        for (auto& e : x) e = std::abs(rng.next_normal());
        const GcdState st = init_state(prob, x);
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(coordinate_candidate(st, prob, i).decrease <= 0.0);
    }
}

TEST_CASE("selection: picks the largest decrease") {
    const NqpProblem prob{DenseMatrix{{2, 0}, {0, 1}}, {-2, -2}};
    GcdState st = init_state(prob, {0, 0});
    CHECK(select_coordinate(st, prob) == 1);
}

TEST_CASE("selection: ties break to the smallest index") {
    const NqpProblem prob{DenseMatrix{{1, 0}, {0, 1}}, {-1, -1}};
    GcdState st = init_state(prob, {0, 0});
    CHECK(select_coordinate(st, prob) == 0);
}

TEST_CASE("selection: uniform hard instance ties at the first coordinate") {
    const NqpProblem prob = gen_hard_nqp(5);
    GcdState st = init_state(prob, Vector(5, 0.0));
    // Every candidate decrease is -50 here (xhat = 10, g = -10, P_ii = 1).
    for (std::size_t i = 0; i < 5; ++i) {
        const Candidate c = coordinate_candidate(st, prob, i);
        CHECK(c.xhat == 10.0);
        CHECK(c.decrease == -50.0);
    }
    CHECK(select_coordinate(st, prob) == 0);
}

TEST_CASE("selection equals brute-force recomputation") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const NqpProblem prob = gen_random_psd_nqp(7, seed);
        SplitMix64 rng(seed);
        Vector x(7);
        for (auto& e : x) e = std::abs(rng.next_normal());
        GcdState st = init_state(prob, x);
        const std::size_t picked = select_coordinate(st, prob);
        double best = 0.0;
        for (std::size_t i = 0; i < 7; ++i)
            best = std::min(best, coordinate_candidate(st, prob, i).decrease);
        CHECK(coordinate_candidate(st, prob, picked).decrease == best);
    }
}

TEST_CASE("apply_update: axpy renewal, hand-checked") {
    GcdState st = init_state(kSeparable, {0, 0});
    CHECK(st.g == Vector{-1, -2});
    apply_update(st, kSeparable, 1, 2.0);
    CHECK(st.x == Vector{0, 2});
    CHECK(st.g == Vector{-1, 0});
    CHECK(st.updates == 1);
}

TEST_CASE("apply_update: identity update only moves the counter") {
    GcdState st = init_state(kSeparable, {0, 1});
    const GcdState before = st;
    apply_update(st, kSeparable, 1, 1.0);
    CHECK(st.x == before.x);
    CHECK(st.g == before.g);
    CHECK(st.updates == before.updates + 1);
}

TEST_CASE("apply_update: out-of-range index throws") {
    GcdState st = init_state(kSeparable, {0, 0});
    CHECK_THROWS_AS(apply_update(st, kSeparable, 2, 1.0), std::out_of_range);
}

TEST_CASE("gradient maintenance survives random update sequences") {
    const NqpProblem prob = gen_random_psd_nqp(8, 21);
    SplitMix64 rng(77);
    GcdState st = init_state(prob, Vector(8, 0.0));
    for (int k = 0; k < 20; ++k) {
        const std::size_t i = rng.next_below(8);
        apply_update(st, prob, i, std::abs(rng.next_normal()));
    }
    const Vector expected = oracles::naive_gradient(prob, st.x);
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(st.g[i] - expected[i]) <= 1e-10);
}

TEST_CASE("kkt residual: hand-computed cases") {
    CHECK(kkt_residual({0, 2}, {-1, 0}) == 1.0);
    CHECK(kkt_residual({1, 2}, {0, 0}) == 0.0);
    CHECK(kkt_residual({0, 0}, {3, -4}) == 4.0);
}

TEST_CASE("solve: separable instance in exactly two updates") {
    const SolveReport rep = greedy_solve(kSeparable, {0, 0}, {1e-8, 0, 0});
    CHECK(rep.x == Vector{1, 2});
    CHECK(rep.updates == 2);
    CHECK(rep.delta == 0.0);
    CHECK(rep.converged);
}

TEST_CASE("solve: nonnegative linear term stops immediately") {
    const NqpProblem prob{DenseMatrix{{1, 0.5}, {0.5, 1}}, {0.25, 1.0}};
    const SolveReport rep = greedy_solve(prob, {0, 0}, {1e-10, 0, 0});
    CHECK(rep.updates == 0);
    CHECK(rep.x == Vector{0, 0});
    CHECK(rep.delta == 0.0);
    CHECK(rep.converged);
}

TEST_CASE("solve: matches the active-set enumeration oracle") {
    for (std::uint64_t seed : {10u, 20u, 30u}) {
        const NqpProblem prob = gen_random_psd_nqp(6, seed);
        const auto oracle = oracles::active_set_minimum(prob);
        const SolveReport rep = greedy_solve(prob, Vector(6, 0.0), {1e-10, 0, 0});
        CHECK(rep.converged);
        CHECK(std::abs(rep.objective - oracle.objective) <= 1e-8);
    }
}

TEST_CASE("solve: warm start from the solution does nothing") {
    const NqpProblem prob = gen_random_psd_nqp(6, 10);
    const SolveReport first = greedy_solve(prob, Vector(6, 0.0), {1e-8, 0, 0});
    const SolveReport again = greedy_solve(prob, first.x, {1e-8, 0, 0});
    CHECK(again.updates == 0);
    CHECK(again.x == first.x);
}

TEST_CASE("solve: budget exhaustion returns the current iterate") {
    const NqpProblem prob = gen_hard_nqp(20);
    const SolveReport rep = greedy_solve(prob, Vector(20, 0.0), {1e-12, 5, 0});
    CHECK_FALSE(rep.converged);
    CHECK(rep.updates == 5);
    CHECK(rep.delta > 1e-12);
}

TEST_CASE("solve: rejects invalid inputs") {
    CHECK_THROWS_AS(greedy_solve(kSeparable, {0, 0}, {0.0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(greedy_solve(kSeparable, {-1, 0}, {1e-6, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(greedy_solve(kSeparable, {0, 0, 0}, {1e-6, 0, 0}), std::invalid_argument);
    const NqpProblem bad{DenseMatrix{{0, 0}, {0, 1}}, {-1, -1}};
    CHECK_THROWS_AS(greedy_solve(bad, {0, 0}, {1e-6, 0, 0}), std::invalid_argument);
}

TEST_CASE("every update satisfies the sufficient-decrease inequality") {
    for (std::uint64_t seed : {3u, 6u, 9u}) {
        const NqpProblem prob = gen_random_psd_nqp(10, seed);
        GcdState st = init_state(prob, Vector(10, 0.0));
        for (int k = 0; k < 200 && st.delta > 1e-12; ++k) {
            const double f_before = oracles::naive_objective(prob, st.x);
            const std::size_t i = select_coordinate(st, prob);
            const Candidate c = coordinate_candidate(st, prob, i);
            const double step = c.xhat - st.x[i];
            apply_update(st, prob, i, c.xhat);
            st.delta = kkt_residual(st.x, st.g);
            const double f_after = oracles::naive_objective(prob, st.x);
            CHECK(f_after - f_before <=
                  -0.5 * prob.P(i, i) * step * step + 1e-12 * (1.0 + std::abs(f_before)));
        }
    }
}

TEST_CASE("iterates stay exactly feasible") {
    const NqpProblem prob = gen_random_psd_nqp(9, 14);
    GcdState st = init_state(prob, Vector(9, 0.0));
    for (int k = 0; k < 300; ++k) {
        const std::size_t i = select_coordinate(st, prob);
        apply_update(st, prob, i, coordinate_candidate(st, prob, i).xhat);
        for (double v : st.x) CHECK(v >= 0.0);
    }
}

TEST_CASE("tracked delta equals a recomputation from the maintained state") {
    const NqpProblem prob = gen_random_psd_nqp(12, 33);
    const SolveReport rep = greedy_solve(prob, Vector(12, 0.0), {1e-9, 0, 0});
    GcdState st = init_state(prob, rep.x);
    // Residual from a freshly computed gradient agrees to drift level.
    CHECK(std::abs(rep.delta - st.delta) <= 1e-12 * (1.0 + st.delta));
}

TEST_CASE("maintained gradient deviation stays below tolerance") {
    const NqpProblem prob = gen_random_psd_nqp(40, 3);
    const SolveReport rep = greedy_solve(prob, Vector(40, 0.0), {1e-10, 0, 0});
    CHECK(rep.max_gradient_deviation <= 1e-9);
}

TEST_CASE("per-update cost stays linear in the dimension") {
    for (std::size_t n : {50u, 100u, 200u, 400u}) {
        const NqpProblem prob = gen_random_psd_nqp(n, n);
        const GcdState init = init_state(prob, Vector(n, 0.0));
        SolveReport rep = greedy_solve(prob, Vector(n, 0.0), {1e-8, 5 * n, 0});
        REQUIRE(rep.updates > 0);
        const double per_update =
            static_cast<double>(rep.flops - init.flops) / static_cast<double>(rep.updates);
        CHECK(per_update <= 20.0 * static_cast<double>(n));
    }
}

TEST_CASE("trace: objective is nonincreasing and rows land on epochs") {
    const NqpProblem prob = gen_random_psd_nqp(30, 4);
    const SolveReport rep = greedy_solve(prob, Vector(30, 0.0), {1e-9, 0, 0});
    REQUIRE(rep.trace.size() >= 2);
    CHECK(rep.trace.front().epoch == 0.0);
    CHECK(rep.trace.front().updates == 0);
    for (std::size_t k = 1; k < rep.trace.size(); ++k) {
        CHECK(rep.trace[k].objective <= rep.trace[k - 1].objective);
        if (k + 1 < rep.trace.size()) CHECK(rep.trace[k].updates % 30 == 0);
    }
    CHECK(rep.trace.back().updates == rep.updates);
    CHECK(rep.trace.back().objective == rep.objective);
}

}
