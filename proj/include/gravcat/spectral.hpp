// spectral.hpp — Hermitian eigendecomposition (cyclic Jacobi), spectral
// functions, and expectation values for the 4x4 kernel.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "gravcat/errors.hpp"
#include "gravcat/matrix.hpp"
#include "gravcat/operators.hpp"
#include "gravcat/tolerances.hpp"

namespace gravcat::qmat {

struct SpectralDecomposition {
    std::array<double, 4> eigenvalues{};  // ascending
    Matrix4 eigenvectors;                 // column k pairs with eigenvalues[k]

    Matrix4 reconstruct() const {
        Matrix4 m;
        for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    m(i, j) += eigenvalues[k] * eigenvectors(i, k) * std::conj(eigenvectors(j, k));
        return m;
    }
};

namespace detail {

inline double offdiag_norm(const Matrix4& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Cyclic Jacobi sweeps with complex Givens rotations. Iteration order is
// fixed, so the output is bit-reproducible for a given input.
inline SpectralDecomposition jacobi_hermitian(Matrix4 a) {
    Matrix4 v = Matrix4::identity();
    bool converged = false;
    for (int sweep = 0; sweep < tol::jacobi_max_sweeps; ++sweep) {
        if (offdiag_norm(a) < tol::jacobi_off_norm) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < 4; ++p) {
            for (std::size_t q = p + 1; q < 4; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) continue;
                const cplx phase = a(p, q) / g;
                const double tau = (a(p, p).real() - a(q, q).real()) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;
                // Rotation J: J(p,p)=J(q,q)=c, J(p,q)=-sp, J(q,p)=conj(sp).
                // Right-multiply A and V by J.
                for (std::size_t k = 0; k < 4; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + std::conj(sp) * akq;
                    a(k, q) = -sp * akp + c * akq;
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + std::conj(sp) * vkq;
                    v(k, q) = -sp * vkp + c * vkq;
                }
                // Left-multiply A by J^dag.
                for (std::size_t k = 0; k < 4; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -std::conj(sp) * apk + c * aqk;
                }
            }
        }
    }
    if (!converged && offdiag_norm(a) >= tol::jacobi_off_norm)
        throw NonConvergence("jacobi_hermitian: off-diagonal norm above tolerance after max sweeps");

    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition out;
    for (std::size_t k = 0; k < 4; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < 4; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace detail

inline SpectralDecomposition hermitian_eig(const HermitianOperator& h) {
    return detail::jacobi_hermitian(h.matrix());
}

// Sum_k f(eps_k) |v_k><v_k|, symmetrized so the result is exactly Hermitian.
template <typename F>
inline HermitianOperator spectral_function(const SpectralDecomposition& spec, F&& f) {
    Matrix4 m;
    for (std::size_t k = 0; k < 4; ++k) {
        const double fk = f(spec.eigenvalues[k]);
        if (!std::isfinite(fk))
            throw Overflow("spectral_function: f(eigenvalue) is not finite");
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) += fk * spec.eigenvectors(i, k) * std::conj(spec.eigenvectors(j, k));
    }
    const Matrix4 sym = 0.5 * (m + m.adjoint());
    return HermitianOperator(sym);
}

// Re tr(h rho); the imaginary part must vanish within tolerance.
inline double expectation(const HermitianOperator& h, const DensityMatrix& rho) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t += h.matrix()(i, j) * rho.matrix()(j, i);
    if (std::abs(t.imag()) >= tol::algebraic)
        throw std::runtime_error("expectation: trace has a non-negligible imaginary part");
    return t.real();
}

}  // namespace gravcat::qmat
