// ergotropy.hpp — work extraction: population ordering, passive states,
// ergotropy by two routes, and a randomized unitary-orbit oracle.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>

#include "gravcat/errors.hpp"
#include "gravcat/matrix.hpp"
#include "gravcat/operators.hpp"
#include "gravcat/random_unitary.hpp"
#include "gravcat/spectral.hpp"
#include "gravcat/tolerances.hpp"

namespace gravcat {

using qmat::DensityMatrix;
using qmat::HermitianOperator;
using qmat::Matrix4;
using qmat::SpectralDecomposition;
using qmat::UnitaryMatrix;

struct PopulationSpectrum {
    std::array<double, 4> populations{};  // non-increasing, sums to 1
    Matrix4 vectors;                      // column k pairs with populations[k]
};

struct ErgotropyReport {
    double energy = 0.0;          // tr(H rho)
    double passive_energy = 0.0;  // tr(H xi)
    double ergotropy = 0.0;       // energy - passive_energy
    std::optional<double> oracle_min_energy;
};

// Eigendecomposition of rho sorted by descending eigenvalue. Round-off
// eigenvalues in (-clamp, 0) are set to zero and the vector renormalized.
inline PopulationSpectrum population_spectrum(const DensityMatrix& rho) {
    const SpectralDecomposition spec = qmat::detail::jacobi_hermitian(rho.matrix());
    PopulationSpectrum out;
    double sum = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        const std::size_t src = 3 - k;  // ascending -> descending
        double r = spec.eigenvalues[src];
        if (r < -tol::population_clamp)
            throw NotAState("population_spectrum: eigenvalue below -1e-10");
        if (r < 0.0) r = 0.0;
        out.populations[k] = r;
        sum += r;
        for (std::size_t i = 0; i < 4; ++i) out.vectors(i, k) = spec.eigenvectors(i, src);
    }
    for (double& r : out.populations) r /= sum;
    return out;
}

// xi = Sum_n r_n |eps_n><eps_n| with r descending paired to eps ascending.
inline DensityMatrix passive_state(const PopulationSpectrum& pops,
                                   const SpectralDecomposition& hspec) {
    Matrix4 xi;
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                xi(i, j) += pops.populations[n] * hspec.eigenvectors(i, n) *
                            std::conj(hspec.eigenvectors(j, n));
    return DensityMatrix(0.5 * (xi + xi.adjoint()));
}

// The passive energy Sum_n r_n eps_n is insensitive to eigenvector choices
// inside degenerate blocks, so it is computed directly from the two sorted
// sequences rather than through tr(H xi).
inline ErgotropyReport ergotropy_trace(const DensityMatrix& rho, const HermitianOperator& h) {
    ErgotropyReport rep;
    rep.energy = qmat::expectation(h, rho);
    const PopulationSpectrum pops = population_spectrum(rho);
    const SpectralDecomposition hspec = qmat::hermitian_eig(h);
    rep.passive_energy = 0.0;
    for (std::size_t n = 0; n < 4; ++n)
        rep.passive_energy += pops.populations[n] * hspec.eigenvalues[n];
    rep.ergotropy = rep.energy - rep.passive_energy;
    return rep;
}

// Double-sum route: W = Sum_{n,m} r_n eps_m (|<r_n|eps_m>|^2 - delta_{mn}).
inline double ergotropy_double_sum(const DensityMatrix& rho, const HermitianOperator& h) {
    const PopulationSpectrum pops = population_spectrum(rho);
    const SpectralDecomposition hspec = qmat::hermitian_eig(h);
    double w = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        for (std::size_t m = 0; m < 4; ++m) {
            qmat::cplx overlap = 0.0;
            for (std::size_t i = 0; i < 4; ++i)
                overlap += std::conj(pops.vectors(i, n)) * hspec.eigenvectors(i, m);
            const double delta = (m == n) ? 1.0 : 0.0;
            w += pops.populations[n] * hspec.eigenvalues[m] * (std::norm(overlap) - delta);
        }
    }
    return w;
}

namespace detail {

// tr(h U rho U^dag) expressed in the eigenframe of h: Sum_k eps_k (W rho W^dag)_kk
// with W the frame-transformed unitary.
inline double frame_energy(const std::array<double, 4>& eps, const Matrix4& w,
                           const Matrix4& rho) {
    const Matrix4 m = w * rho;
    double e = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        qmat::cplx diag = 0.0;
        for (std::size_t j = 0; j < 4; ++j) diag += m(k, j) * std::conj(w(k, j));
        e += eps[k] * diag.real();
    }
    return e;
}

}  // namespace detail

// Randomized lower-bound search for min_U tr(h U rho U^dag): best of
// n_samples seeded Haar draws, then refine_steps greedy moves U' = R U with
// R a random small rotation (plane, angle, phase drawn per step; the angle
// scale decays geometrically from 0.3 to 1e-4), accepted only on strict
// energy decrease. The rotation planes live in the eigenframe of h, which is
// where population transport happens. Deterministic in
// (seed, n_samples, refine_steps); sample i uses seed + i, so the sampling
// stage can be partitioned across tasks without changing the minimum.
inline double oracle_min_energy(const DensityMatrix& rho, const HermitianOperator& h,
                                int n_samples, std::uint64_t seed, int refine_steps) {
    if (n_samples < 1)
        throw std::invalid_argument("oracle_min_energy: n_samples must be >= 1");
    if (refine_steps < 0)
        throw std::invalid_argument("oracle_min_energy: refine_steps must be >= 0");

    const SpectralDecomposition hspec = qmat::hermitian_eig(h);
    const Matrix4 vdag = hspec.eigenvectors.adjoint();

    double best = 0.0;
    Matrix4 w_best;  // eigenframe unitary V^dag U of the best sample
    for (int i = 0; i < n_samples; ++i) {
        const UnitaryMatrix u = qmat::random_unitary(seed + static_cast<std::uint64_t>(i));
        const Matrix4 w = vdag * u.matrix();
        const double e = detail::frame_energy(hspec.eigenvalues, w, rho.matrix());
        if (i == 0 || e < best) {
            best = e;
            w_best = w;
        }
    }

    constexpr double kScaleHi = 0.3;
    constexpr double kScaleLo = 1e-4;
    constexpr std::size_t kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    qmat::CounterRng rng{qmat::mix64(seed) ^ 0xA5A5A5A5A5A5A5A5ull, 0};
    Matrix4 w = w_best;
    for (int k = 0; k < refine_steps; ++k) {
        const double frac = (refine_steps > 1)
                                ? static_cast<double>(k) / static_cast<double>(refine_steps - 1)
                                : 0.0;
        const double scale = kScaleHi * std::pow(kScaleLo / kScaleHi, frac);
        const auto& pq = kPairs[rng.next_u64() % 6];
        const double alpha = scale * rng.next_normal();
        const double phi = 2.0 * std::numbers::pi * rng.next_uniform();
        const double c = std::cos(alpha);
        const qmat::cplx sp = std::sin(alpha) * std::polar(1.0, phi);

        // Apply the plane rotation to W's rows p and q in place of R*U.
        Matrix4 w2 = w;
        for (std::size_t j = 0; j < 4; ++j) {
            const qmat::cplx wp = w(pq[0], j), wq = w(pq[1], j);
            w2(pq[0], j) = c * wp - sp * wq;
            w2(pq[1], j) = std::conj(sp) * wp + c * wq;
        }
        const double e2 = detail::frame_energy(hspec.eigenvalues, w2, rho.matrix());
        if (e2 < best) {
            best = e2;
            w = w2;
        }
    }
    return best;
}

}  // namespace gravcat
