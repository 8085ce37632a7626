#pragma once

#include <stdexcept>
#include <string>

#include "nqpcd/model.hpp"

namespace nqpcd::detail {

inline void check_solver_inputs(const NqpProblem& prob, const Vector& x0, double eps) {
    const std::size_t n = prob.size();
    if (prob.P.rows() != n || prob.P.cols() != n)
        throw std::invalid_argument("solve: P is not n x n for d of length n");
    if (x0.size() != n) throw std::invalid_argument("solve: x0 length does not match problem");
    if (!(eps > 0.0)) throw std::invalid_argument("solve: eps must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(prob.P(i, i) > 0.0))
            throw std::invalid_argument("solve: nonpositive diagonal at " + std::to_string(i + 1));
        if (x0[i] < 0.0)
            throw std::invalid_argument("solve: negative x0 entry at " + std::to_string(i + 1));
    }
}

}  // namespace nqpcd::detail
