#pragma once

#include <vector>

namespace subdiff {

/// Piecewise-constant time signal: a sorted list of non-overlapping half-open
/// intervals (t_start, t_end] with values, and a default value outside.
struct Interval {
    double t_start = 0.0;
    double t_end = 0.0;
    double value = 0.0;
};

struct Schedule {
    std::vector<Interval> intervals;
    double default_value = 0.0;

    double operator()(double t) const;

    static Schedule constant(double v) { return Schedule{{}, v}; }
};

/// Validates ordering (each t_start < t_end, intervals sorted and
/// non-overlapping) and returns the schedule; throws std::invalid_argument.
Schedule make_schedule(std::vector<Interval> intervals, double default_value = 0.0);

double schedule_eval(const Schedule& s, double t);

}  // namespace subdiff
