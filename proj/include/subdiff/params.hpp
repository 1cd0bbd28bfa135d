#pragma once

#include <string>
#include <vector>

namespace subdiff {

enum class MobilityProfile { Constant, Exp5Y };

/// Mobility coefficient: a base value with an optional spatial profile.
/// "exp5y" multiplies the base by exp(5(y - 0.5)).
struct Mobility {
    double base = 1.0;
    MobilityProfile profile = MobilityProfile::Constant;

    double operator()(double x, double y) const;
};

/// All model coefficients plus the fractional exponent. Defaults are the
/// baseline parameter set used throughout the experiments.
struct Params {
    double alpha = 1.0;    // fractional exponent in (0,1]

    Mobility M_phi{0.0001};  // tumour mobility
    double N_phi = 0.6;      // nutrient-driven growth rate
    double K_psi = 2.0;      // Monod constant for nutrient uptake
    double P_phi = 1.1;      // chemo-driven decay rate
    double c = 0.4;          // chemical-potential coefficient
    double lambda = 0.002;   // compositional stress coupling
    double G = 0.4615;       // shear modulus
    double nu = 0.3;         // Poisson ratio

    Mobility M_psi{1.0};   // nutrient mobility
    double N_psi = 40.0;   // nutrient consumption rate

    Mobility M_chi{1.0};   // chemotherapy mobility
    double N_chi = 3.0;    // chemotherapy degradation rate
    double P_chi = 30.0;   // chemotherapy consumption rate
    double K_chi = 0.6;    // Monod constant for the kill term
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    double a5_threshold = 0.0;
};

/// Lower bound on c required for well-posedness: lambda^2 (1-2 nu)/(2 G nu).
double a5_threshold(double lambda, double G, double nu);

/// Pure predicate over the parameter gates: alpha in (0,1], positive
/// mobilities, nonnegative rates and Monod constants, G > 0, 0 < nu < 0.5
/// (the threshold formula needs nu > 0), lambda >= 0, and c above the
/// threshold. Violations are reported with the assumption they break.
ValidationReport validate_params(const Params& p);

}  // namespace subdiff
