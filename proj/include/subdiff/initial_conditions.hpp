#pragma once

#include <string>

#include "subdiff/assembly.hpp"

namespace subdiff {

/// Plateau of radius b around the centre, smoothly decaying to 0 at radius a:
///   1                                     for r <= b,
///   exp(1 - (a-b)^2 / ((a-b)^2 - (r-b)^2)) for b < r < a,
///   0                                     for r >= a.
ScalarField ic_circular_plateau(double a, double b, double cx, double cy);

/// Two compactly supported bumps with elliptic level sets given by
/// A = diag(1, gamma): exp(1 - a^2/(a^2 - |A(x-c_i)|^2)) inside each support.
ScalarField ic_two_ellipses(double a, double gamma, double c1x, double c1y, double c2x,
                            double c2y);

/// Irregularly shaped mass: with centred coordinates (xb, yb) = (x,y)-(0.5,0.5)
/// and f = sin(6xb+2yb+1)(7xb-0.2)^2 + sin(-8xb+10yb+1.1)(9xb-0.1)^2, the value
/// is exp(1 - 1/(1-f)) wherever f < 1 inside the window
/// -0.45 < xb < 0.2, -0.4 < yb < 0.35, and 0 elsewhere. The raw formula
/// exceeds 1 where f < 0, so the result is capped at 1 to stay a volume
/// fraction.
ScalarField ic_irregular();

/// Nutrient profile 2 - 0.5 x(1-x) y(1-y) (near-equilibrium start of the
/// chemotherapy experiment).
ScalarField ic_nutrient_equilibrium();

/// Reads one nodal value per line; the count must match the mesh.
Vec ic_from_file(const std::string& path, const Mesh& mesh);

}  // namespace subdiff
