// operators.hpp — validated operator and state wrappers around Matrix4

#pragma once

#include <cmath>
#include <stdexcept>

#include "gravcat/matrix.hpp"
#include "gravcat/tolerances.hpp"

namespace gravcat::qmat {

class HermitianOperator {
public:
    explicit HermitianOperator(Matrix4 m) : m_(m) {
        if (!m_.all_finite())
            throw std::invalid_argument("HermitianOperator: non-finite entry");
        if (hermiticity_error(m_) > tol::construction)
            throw std::invalid_argument("HermitianOperator: matrix is not Hermitian");
    }

    const Matrix4& matrix() const { return m_; }

private:
    Matrix4 m_;
};

class UnitaryMatrix {
public:
    explicit UnitaryMatrix(Matrix4 m) : m_(m) {
        if (!m_.all_finite())
            throw std::invalid_argument("UnitaryMatrix: non-finite entry");
        if (max_abs_diff(m_.adjoint() * m_, Matrix4::identity()) > tol::algebraic)
            throw std::invalid_argument("UnitaryMatrix: U^dag U != I");
    }

    const Matrix4& matrix() const { return m_; }

private:
    Matrix4 m_;
};

// Hermitian with unit trace. Positivity is checked where eigenvalues are
// actually computed (population_spectrum), not on construction.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix4 m) : m_(m) {
        if (!m_.all_finite())
            throw std::invalid_argument("DensityMatrix: non-finite entry");
        if (hermiticity_error(m_) > tol::construction)
            throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
        if (std::abs(m_.trace() - cplx{1.0}) > tol::construction)
            throw std::invalid_argument("DensityMatrix: trace != 1");
    }

    const Matrix4& matrix() const { return m_; }

private:
    Matrix4 m_;
};

}  // namespace gravcat::qmat
