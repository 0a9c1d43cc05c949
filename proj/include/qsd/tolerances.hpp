#pragma once

// Central tolerance knobs for all validation and numerical checks.
// Everything downstream reads these; change them here or nowhere.
namespace qsd::tol {

inline constexpr double hermitian = 1e-12;       // HERM_TOL: max |M - M^dag| entry
inline constexpr double psd = 1e-10;             // PSD_TOL: eigenvalues >= -psd count as positive semidefinite
inline constexpr double reconstruction = 1e-10;  // RECON_TOL: eigendecomposition residual, max-entry norm
inline constexpr double trace_one = 1e-10;       // |tr(rho) - 1|
inline constexpr double povm_closure = 1e-10;    // |sum of effects - identity| entrywise
inline constexpr double unit_norm = 1e-12;       // ket normalisation
inline constexpr double weight_sum = 1e-12;      // ensemble / distribution weights summing to one
inline constexpr double support_cut = 1e-10;     // eigenvalues below this are treated as zero in pseudo-inverses
inline constexpr double degenerate_gap = 1e-9;   // eigenvalue clusters closer than this count as degenerate
inline constexpr double jacobi_off = 1e-14;      // Jacobi sweep convergence: off-diagonal Frobenius norm
inline constexpr int jacobi_max_sweeps = 100;

inline constexpr double steering = 1e-9;         // GHJW / no-signaling consistency checks
inline constexpr double ns_bisect = 1e-12;       // off-diagonal residual target of the ensemble solver
inline constexpr double zero_prob = 1e-12;       // steering outcomes below this get a placeholder state
inline constexpr double gpt = 1e-12;             // polygon-theory consistency checks

}  // namespace qsd::tol
