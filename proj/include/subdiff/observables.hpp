#pragma once

#include <vector>

#include "subdiff/mesh.hpp"
#include "subdiff/types.hpp"

namespace subdiff {

// One row of the scalar time series written per accepted time level.
struct TimeRecord {
    double t = 0.0;
    double tumour_mass = 0.0;
    double nutrient_mass = 0.0;
    double chemo_mass = 0.0;
    double total_displacement = 0.0;
    double radius = 0.0;
    int fp_iters = 0;
    double phi_min = 0.0;
    double phi_max = 0.0;
};

using TimeSeries = std::vector<TimeRecord>;

// Integral of the P1 interpolant, 1^T M v.
double field_mass(const SpMat& M, const Vec& v);

// Integral of |u| with the nodal magnitude interpolated back into P1.
// u is interleaved (ux_0, uy_0, ux_1, uy_1, ...); M is the scalar mass matrix.
double total_displacement(const SpMat& M, const Vec& u);

// Largest distance from (cx, cy) to a node carrying phi >= thresh; 0 if none.
double tumour_radius(const Mesh& mesh, const Vec& phi, double cx, double cy, double thresh);

enum class Axis { X, Y };

struct Sample {
    double s = 0.0;      // free coordinate along the section line
    double value = 0.0;  // P1 interpolant at that point
};

// Samples the interpolant along the line {y = coord} (Axis::X, free coordinate x)
// or {x = coord} (Axis::Y, free coordinate y) at every intersection with a mesh
// edge, ordered by the free coordinate with duplicates merged.
std::vector<Sample> cross_section(const Mesh& mesh, const Vec& field, Axis axis, double coord);

}  // namespace subdiff
