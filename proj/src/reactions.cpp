#include "subdiff/reactions.hpp"

#include <algorithm>

namespace subdiff {

namespace {

double monod(double phi, double conc, double K) {
    const double denom = K + conc;
    if (denom == 0.0) return 0.0;
    return phi * (1.0 - phi) * conc / denom;
}

}  // namespace

double monod_f(double phi, double psi, double K_psi) { return monod(phi, psi, K_psi); }

double monod_g(double phi, double chi, double K_chi) { return monod(phi, chi, K_chi); }

double monod_f_clamped(double phi, double psi, double K_psi) {
    return monod(std::clamp(phi, 0.0, 1.0), std::max(psi, 0.0), K_psi);
}

double monod_g_clamped(double phi, double chi, double K_chi) {
    return monod(std::clamp(phi, 0.0, 1.0), std::max(chi, 0.0), K_chi);
}

}  // namespace subdiff
