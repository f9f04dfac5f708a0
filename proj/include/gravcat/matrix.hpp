// matrix.hpp — fixed-size complex matrices, Pauli operators, and tensor products

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace gravcat::qmat {

using cplx = std::complex<double>;

template <std::size_t N>
struct ComplexMatrix {
    // Row-major entries, zero-initialized.
    std::array<cplx, N * N> e{};

    static constexpr std::size_t dim = N;

    cplx& operator()(std::size_t i, std::size_t j) { return e[i * N + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return e[i * N + j]; }

    static ComplexMatrix identity() {
        ComplexMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    bool all_finite() const {
        for (const cplx& v : e)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : e) m = std::max(m, std::abs(v));
        return m;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix m;
        for (std::size_t k = 0; k < N * N; ++k) m.e[k] = a.e[k] + b.e[k];
        return m;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix m;
        for (std::size_t k = 0; k < N * N; ++k) m.e[k] = a.e[k] - b.e[k];
        return m;
    }

    friend ComplexMatrix operator*(const cplx& s, const ComplexMatrix& a) {
        ComplexMatrix m;
        for (std::size_t k = 0; k < N * N; ++k) m.e[k] = s * a.e[k];
        return m;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }
};

using Matrix2 = ComplexMatrix<2>;
using Matrix4 = ComplexMatrix<4>;

template <std::size_t N>
inline double max_abs_diff(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) m = std::max(m, std::abs(a.e[k] - b.e[k]));
    return m;
}

template <std::size_t N>
inline double hermiticity_error(const ComplexMatrix<N>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

template <std::size_t N>
inline double frobenius_norm(const ComplexMatrix<N>& a) {
    double s = 0.0;
    for (const cplx& v : a.e) s += std::norm(v);
    return std::sqrt(s);
}

inline Matrix2 pauli_x() {
    Matrix2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

inline Matrix2 pauli_z() {
    Matrix2 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

// Kronecker product in the {|ee>, |eg>, |ge>, |gg>} basis with |e> = (1,0);
// the first factor acts on the left qubit.
inline Matrix4 kron2(const Matrix2& a, const Matrix2& b) {
    Matrix4 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

}  // namespace gravcat::qmat
