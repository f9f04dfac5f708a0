// random_unitary.hpp — counter-based deterministic RNG and Haar-style
// random unitaries via Gram-Schmidt on complex Gaussian draws.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "gravcat/matrix.hpp"
#include "gravcat/operators.hpp"

namespace gravcat::qmat {

// SplitMix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Stateless stream: the k-th value is a pure function of (seed, k), so draws
// can be partitioned across tasks without shared state.
struct CounterRng {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    std::uint64_t next_u64() { return mix64(mix64(seed) ^ mix64(counter++)); }

    // uniform on (0,1)
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller
    double next_normal() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
};

// Draw a 4x4 matrix of complex Gaussians and orthonormalize its columns by
// modified Gram-Schmidt. MGS is the QR factorization whose R has a positive
// real diagonal, which fixes the per-column phase and makes the map
// well-defined; the result is Haar-distributed to sampling accuracy. A draw
// whose pivot norm nearly vanishes is retried on the next counter block.
inline UnitaryMatrix random_unitary(std::uint64_t seed) {
    constexpr double kDegenerate = 1e-8;
    for (std::uint64_t attempt = 0;; ++attempt) {
        CounterRng rng{seed, attempt * 64};  // 64 uniforms per attempt
        Matrix4 a;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                a(i, j) = cplx{rng.next_normal(), rng.next_normal()};

        Matrix4 q;
        bool degenerate = false;
        for (std::size_t k = 0; k < 4 && !degenerate; ++k) {
            std::array<cplx, 4> v{a(0, k), a(1, k), a(2, k), a(3, k)};
            for (std::size_t j = 0; j < k; ++j) {
                cplx proj = 0.0;
                for (std::size_t i = 0; i < 4; ++i) proj += std::conj(q(i, j)) * v[i];
                for (std::size_t i = 0; i < 4; ++i) v[i] -= proj * q(i, j);
            }
            double norm = 0.0;
            for (const cplx& x : v) norm += std::norm(x);
            norm = std::sqrt(norm);
            if (norm < kDegenerate) {
                degenerate = true;
                break;
            }
            for (std::size_t i = 0; i < 4; ++i) q(i, k) = v[i] / norm;
        }
        if (!degenerate) return UnitaryMatrix(q);
    }
}

}  // namespace gravcat::qmat
