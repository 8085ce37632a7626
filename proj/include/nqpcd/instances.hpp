#pragma once

#include <cstdint>

#include "nqpcd/model.hpp"

namespace nqpcd {

/// Seeded instance generators. All of them are pure functions of the
/// dimensions and the seed: entries are drawn row-major from a single
/// SplitMix64 stream (see rng.hpp for the exact transforms), so identical
/// inputs reproduce identical problems bit-for-bit.

/// P = G'G with G an n x n standard-normal matrix (redrawn in the unlikely
/// event some P_ii <= 1e-8), d standard normal. P is PSD by construction
/// and exactly symmetric (upper triangle mirrored).
NqpProblem gen_random_psd_nqp(std::size_t n, std::uint64_t seed);

/// P = 0.1 I + 0.9 E (all-ones E), d = -10 e. Badly conditioned instance
/// that separates the selection rules.
NqpProblem gen_hard_nqp(std::size_t n);

/// Q = G'G (n x n standard-normal G), c standard normal, A standard normal
/// m x n, b = A |z| for standard-normal z, so a feasible nonnegative point
/// exists. Requires 1 <= m < n.
LinNqpProblem gen_lin_nqp(std::size_t m, std::size_t n, std::uint64_t seed);

struct SyntheticNmf {
    NmfProblem problem;
    DenseMatrix L;  ///< ground-truth m x r factor
    DenseMatrix R;  ///< ground-truth n x r factor
};

/// M = L R' with L = max(0, randn(m, r)) and R = max(0, randn(n, r));
/// M is nonnegative with an exact rank-<=r nonnegative factorization.
SyntheticNmf gen_synthetic_nmf(std::size_t m, std::size_t n, std::size_t r, std::uint64_t seed);

}  // namespace nqpcd
