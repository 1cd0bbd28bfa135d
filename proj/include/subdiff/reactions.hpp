#pragma once

namespace subdiff {

/// Monod-type nutrient-driven growth term f(phi, psi) = phi(1-phi) psi/(K+psi).
/// Returns 0 if the denominator vanishes (K = psi = 0).
double monod_f(double phi, double psi, double K_psi);

/// Chemotherapy kill term g(phi, chi) = phi(1-phi) chi/(K+chi), same guard.
double monod_g(double phi, double chi, double K_chi);

/// Variants used at quadrature points inside the stepper: the discrete scheme
/// has no maximum principle, so the volume-fraction argument is clamped into
/// [0,1] and the concentration argument is clamped below at 0 before the
/// Monod terms are evaluated. This keeps 0 <= f, g <= 1/4 regardless of
/// overshoots in the iterates.
double monod_f_clamped(double phi, double psi, double K_psi);
double monod_g_clamped(double phi, double chi, double K_chi);

}  // namespace subdiff
