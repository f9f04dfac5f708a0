// tolerances.hpp — the single tolerance table used by the library and its tests

#pragma once

namespace gravcat::tol {

inline constexpr double construction = 1e-12;  // type invariants checked on construction
inline constexpr double algebraic    = 1e-10;  // algebraic identities (orthonormality, commutators)
inline constexpr double derived      = 1e-9;   // derived quantities (limits, cross-checks)

inline constexpr double jacobi_off_norm   = 1e-14;
inline constexpr int    jacobi_max_sweeps = 100;

inline constexpr double population_clamp = 1e-10;  // rho eigenvalues in (-clamp, 0) are set to 0

inline constexpr double beta_delta_overflow = 700.0;  // raw cosh(beta*Delta) limit

}  // namespace gravcat::tol
