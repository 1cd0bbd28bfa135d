#include "subdiff/params.hpp"

#include <cmath>
#include <sstream>

namespace subdiff {

double Mobility::operator()(double /*x*/, double y) const {
    switch (profile) {
        case MobilityProfile::Constant: return base;
        case MobilityProfile::Exp5Y: return base * std::exp(5.0 * (y - 0.5));
    }
    return base;
}

double a5_threshold(double lambda, double G, double nu) {
    return lambda * lambda * (1.0 - 2.0 * nu) / (2.0 * G * nu);
}

namespace {

void require(ValidationReport& r, bool cond, const std::string& message) {
    if (!cond) {
        r.ok = false;
        r.violations.push_back(message);
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

ValidationReport validate_params(const Params& p) {
    ValidationReport r;
    require(r, p.alpha > 0.0 && p.alpha <= 1.0,
            "alpha = " + fmt(p.alpha) + " outside (0,1]");
    require(r, p.M_phi.base > 0.0, "(A3) violated: M_phi base must be > 0");
    require(r, p.M_psi.base > 0.0, "(A3) violated: M_psi base must be > 0");
    require(r, p.M_chi.base > 0.0, "(A3) violated: M_chi base must be > 0");
    require(r, p.N_phi >= 0.0, "N_phi must be >= 0");
    require(r, p.P_phi >= 0.0, "P_phi must be >= 0");
    require(r, p.N_psi >= 0.0, "N_psi must be >= 0");
    require(r, p.N_chi >= 0.0, "N_chi must be >= 0");
    require(r, p.P_chi >= 0.0, "P_chi must be >= 0");
    require(r, p.K_psi >= 0.0, "K_psi must be >= 0");
    require(r, p.K_chi >= 0.0, "K_chi must be >= 0");
    require(r, p.G > 0.0, "G must be > 0");
    require(r, p.lambda >= 0.0, "lambda must be >= 0");
    require(r, p.nu < 0.5,
            "(A4) violated: nu = " + fmt(p.nu) + " hits the 1-2nu = 0 singularity");
    require(r, p.nu > 0.0, "nu must be > 0 for the (A5) threshold to make sense");

    if (p.G > 0.0 && p.nu > 0.0 && p.nu < 0.5) {
        const double thresh = a5_threshold(p.lambda, p.G, p.nu);
        r.a5_threshold = thresh;
        require(r, p.c > thresh,
                "(A5) violated: c = " + fmt(p.c) + " must exceed lambda^2(1-2nu)/(2G nu) = " +
                    fmt(thresh));
    } else {
        require(r, p.c > 0.0, "c must be > 0");
    }
    return r;
}

}  // namespace subdiff
