#pragma once

// Numerical tolerances shared across the library.  Boundary tolerances are
// set above the noise floor of the dense Jacobi eigensolver so that exact
// criteria evaluated on eigensolver output never flip spuriously.

namespace absep {

inline constexpr double kHermitianTol   = 1e-10;  // max |A_ij - conj(A_ji)|
inline constexpr double kUnitaryTol     = 1e-10;  // max |(U U^† - I)_ij|
inline constexpr double kTraceTol       = 1e-10;  // state spectrum sum vs 1
inline constexpr double kSpectrumClamp  = 1e-12;  // negative eigenvalue clamp for state spectra
inline constexpr double kBoundaryTol    = 1e-9;   // non-strict inequality band in all criteria
inline constexpr double kEigResidualTol = 1e-9;   // ‖A - V diag(λ) V^†‖_max
inline constexpr double kNegativityTol  = 1e-9;   // PT eigenvalue below -this certifies entanglement
inline constexpr double kMajorizeTol    = 1e-12;  // partial-sum dominance slack

}  // namespace absep
