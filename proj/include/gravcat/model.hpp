// model.hpp — two-qubit gravitational-cat model: Hamiltonian, analytic
// spectrum, coupling from geometry, and thermal states.
//
// The Hamiltonian is
//     H = omega/2 (sigma_z x I + I x sigma_z) - Omega (sigma_x x sigma_x)
// in the {|ee>, |eg>, |ge>, |gg>} basis. Its spectrum is
// (-Delta, -Omega, Omega, Delta) with Delta = sqrt(Omega^2 + omega^2), and
// the ee/gg block mixes through the angles phi± = arctan(Omega/(omega±Delta)).
//
// Thermal states are synthesized spectrally: a population vector on the
// analytic eigenbasis, chosen by one of three documented conventions, is
// assembled into Sum_n p_n |eps_n><eps_n|. The conventions differ only in
// the population assignment:
//   gibbs          p_n ∝ exp(-beta eps_n)   (equilibrium; the default)
//   inverted       p_n ∝ exp(+beta eps_n)
//   paper_literal  the X-state element assignment with the Bell-block and
//                  ee/gg-block Boltzmann weights interchanged: weights
//                  exp(+beta Delta) on |eps_2>, exp(-beta Delta) on |eps_3>,
//                  exp(-beta Omega) on |eps_1>, exp(+beta Omega) on |eps_4>.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gravcat/errors.hpp"
#include "gravcat/matrix.hpp"
#include "gravcat/operators.hpp"
#include "gravcat/spectral.hpp"
#include "gravcat/tolerances.hpp"

namespace gravcat {

using qmat::cplx;
using qmat::DensityMatrix;
using qmat::HermitianOperator;
using qmat::Matrix4;
using qmat::SpectralDecomposition;

enum class Convention { gibbs, inverted, paper_literal };

inline const char* to_string(Convention c) {
    switch (c) {
        case Convention::gibbs: return "gibbs";
        case Convention::inverted: return "inverted";
        case Convention::paper_literal: return "paper_literal";
    }
    return "?";
}

inline std::optional<Convention> convention_from_string(std::string_view s) {
    if (s == "gibbs") return Convention::gibbs;
    if (s == "inverted") return Convention::inverted;
    if (s == "paper_literal") return Convention::paper_literal;
    return std::nullopt;
}

// Default Newton constant, m^3 kg^-1 s^-2 (CODATA); overridable per call.
inline constexpr double kNewtonG = 6.674e-11;

struct ModelParams {
    double omega = 1.0;  // level splitting, energy units
    double Omega = 0.0;  // gravitational coupling, energy units

    void validate() const {
        if (!(omega > 0.0) || !std::isfinite(omega))
            throw std::invalid_argument("ModelParams: omega must be > 0");
        if (!(Omega >= 0.0) || !std::isfinite(Omega))
            throw std::invalid_argument("ModelParams: Omega must be >= 0");
    }
};

struct ThermalSpec {
    double T = 1.0;  // temperature, k_B = 1
    Convention convention = Convention::gibbs;

    void validate() const {
        if (!(T > 0.0) || !std::isfinite(T))
            throw std::invalid_argument("ThermalSpec: T must be > 0 and finite");
    }
};

struct GeometryParams {
    double m = 1.0;        // kg
    double d = 1.0;        // m, separation at the same minimum
    double d_prime = 1.0;  // m, separation at different minima
    double G = kNewtonG;

    void validate() const {
        if (!(m > 0.0)) throw std::invalid_argument("GeometryParams: m must be > 0");
        if (!(d > 0.0)) throw std::invalid_argument("GeometryParams: d must be > 0");
        if (!(d_prime > 0.0)) throw std::invalid_argument("GeometryParams: d_prime must be > 0");
        if (!(G > 0.0)) throw std::invalid_argument("GeometryParams: G must be > 0");
    }
};

struct GravCatSpectrum {
    double Delta = 0.0;
    double phi_plus = 0.0;
    double phi_minus = 0.0;
    std::array<double, 4> eigenvalues{};  // (-Delta, -Omega, Omega, Delta)
    Matrix4 eigenstates;                  // columns, paired with eigenvalues

    SpectralDecomposition decomposition() const { return {eigenvalues, eigenstates}; }
};

inline HermitianOperator build_hamiltonian(const ModelParams& p) {
    p.validate();
    using namespace qmat;
    const Matrix2 id = Matrix2::identity();
    const Matrix4 zz = kron2(pauli_z(), id) + kron2(id, pauli_z());
    const Matrix4 xx = kron2(pauli_x(), pauli_x());
    return HermitianOperator(0.5 * p.omega * zz - cplx{p.Omega} * xx);
}

inline GravCatSpectrum analytic_spectrum(const ModelParams& p) {
    p.validate();
    GravCatSpectrum s;
    s.Delta = std::hypot(p.omega, p.Omega);
    s.phi_plus = std::atan2(p.Omega, p.omega + s.Delta);
    // arctan(Omega/(omega - Delta)) rationalizes to -arctan((omega + Delta)/Omega),
    // which stays well-conditioned as Omega -> 0 (limit -pi/2).
    s.phi_minus = -std::atan2(p.omega + s.Delta, p.Omega);
    s.eigenvalues = {-s.Delta, -p.Omega, p.Omega, s.Delta};

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix4& v = s.eigenstates;
    v(0, 0) = std::sin(s.phi_plus);
    v(3, 0) = std::cos(s.phi_plus);
    v(1, 1) = inv_sqrt2;
    v(2, 1) = inv_sqrt2;
    v(1, 2) = -inv_sqrt2;
    v(2, 2) = inv_sqrt2;
    v(0, 3) = std::sin(s.phi_minus);
    v(3, 3) = std::cos(s.phi_minus);
    return s;
}

inline double omega_from_geometry(const GeometryParams& g) {
    g.validate();
    if (g.d > g.d_prime)
        throw NegativeCoupling("omega_from_geometry: d > d_prime gives a negative coupling");
    return 0.5 * g.G * g.m * g.m * (1.0 / g.d - 1.0 / g.d_prime);
}

// Z = 2 cosh(beta Delta) + 2 cosh(beta Omega). The spectrum is symmetric, so
// the same value serves every convention.
inline double partition_function(const ModelParams& p, const ThermalSpec& t) {
    p.validate();
    t.validate();
    const double beta = 1.0 / t.T;
    const double delta = std::hypot(p.omega, p.Omega);
    if (beta * delta > tol::beta_delta_overflow)
        throw Overflow("partition_function: beta*Delta exceeds the raw exponential range");
    return 2.0 * std::cosh(beta * delta) + 2.0 * std::cosh(beta * p.Omega);
}

// Normalized populations over {|eps_1>..|eps_4>}. Stabilized by factoring
// out the largest exponent, so values stay finite far beyond the raw
// partition-function range.
inline std::array<double, 4> thermal_populations(const ModelParams& p, const ThermalSpec& t) {
    p.validate();
    t.validate();
    const double beta = 1.0 / t.T;
    const double delta = std::hypot(p.omega, p.Omega);
    std::array<double, 4> x{};
    switch (t.convention) {
        case Convention::gibbs:
            x = {beta * delta, beta * p.Omega, -beta * p.Omega, -beta * delta};
            break;
        case Convention::inverted:
            x = {-beta * delta, -beta * p.Omega, beta * p.Omega, beta * delta};
            break;
        case Convention::paper_literal:
            x = {-beta * p.Omega, beta * delta, -beta * delta, beta * p.Omega};
            break;
    }
    const double xmax = std::max(std::max(x[0], x[1]), std::max(x[2], x[3]));
    std::array<double, 4> w{};
    double sum = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        w[n] = std::exp(x[n] - xmax);
        sum += w[n];
    }
    for (double& wn : w) wn /= sum;
    return w;
}

inline DensityMatrix thermal_state(const ModelParams& p, const ThermalSpec& t) {
    const GravCatSpectrum s = analytic_spectrum(p);
    const std::array<double, 4> pop = thermal_populations(p, t);
    Matrix4 rho;
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                rho(i, j) += pop[n] * s.eigenstates(i, n) * std::conj(s.eigenstates(j, n));
    return DensityMatrix(rho);
}

// Closed-form X-state elements of the equilibrium state, written directly in
// terms of phi± and the Boltzmann weights. Independent assembly route used
// to cross-check the spectral synthesis.
inline DensityMatrix closed_form_gibbs_elements(const ModelParams& p, const ThermalSpec& t) {
    p.validate();
    t.validate();
    const double beta = 1.0 / t.T;
    const GravCatSpectrum s = analytic_spectrum(p);
    // Gibbs weights exp(-beta eps_n)/Z, stabilized around the ground state.
    std::array<double, 4> q{};
    double z = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        q[n] = std::exp(-beta * (s.eigenvalues[n] - s.eigenvalues[0]));
        z += q[n];
    }
    for (double& qn : q) qn /= z;

    const double sp = std::sin(s.phi_plus), cp = std::cos(s.phi_plus);
    const double sm = std::sin(s.phi_minus), cm = std::cos(s.phi_minus);
    Matrix4 rho;
    rho(0, 0) = q[0] * sp * sp + q[3] * sm * sm;
    rho(0, 3) = 0.5 * (q[0] * std::sin(2.0 * s.phi_plus) + q[3] * std::sin(2.0 * s.phi_minus));
    rho(1, 1) = 0.5 * (q[1] + q[2]);
    rho(1, 2) = 0.5 * (q[1] - q[2]);
    rho(3, 3) = q[0] * cp * cp + q[3] * cm * cm;
    rho(2, 2) = rho(1, 1);
    rho(2, 1) = rho(1, 2);
    rho(3, 0) = rho(0, 3);
    return DensityMatrix(rho);
}

}  // namespace gravcat
