#include "subdiff/schedule.hpp"

#include <stdexcept>
#include <utility>

namespace subdiff {

double Schedule::operator()(double t) const {
    for (const auto& iv : intervals)
        if (t > iv.t_start && t <= iv.t_end) return iv.value;
    return default_value;
}

Schedule make_schedule(std::vector<Interval> intervals, double default_value) {
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (!(intervals[i].t_start < intervals[i].t_end))
            throw std::invalid_argument("make_schedule: interval must satisfy t_start < t_end");
        if (i > 0 && intervals[i].t_start < intervals[i - 1].t_end)
            throw std::invalid_argument("make_schedule: intervals must be sorted and disjoint");
    }
    return Schedule{std::move(intervals), default_value};
}

double schedule_eval(const Schedule& s, double t) {
    if (t < 0.0) throw std::invalid_argument("schedule_eval: t must be >= 0");
    return s(t);
}

}  // namespace subdiff
