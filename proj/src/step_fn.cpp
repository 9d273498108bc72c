#include "nccw/step_fn.hpp"

#include <algorithm>
#include <stdexcept>

namespace nccw {

StepFn StepFn::constant(ExtNat v) {
    StepFn s;
    s.intervals_ = {v};
    return s;
}

StepFn StepFn::make_raw(std::vector<Rational> breakpoints, std::vector<ExtNat> intervals, std::vector<ExtNat> points) {
    if (intervals.size() != breakpoints.size() + 1 || points.size() != breakpoints.size())
        throw std::invalid_argument("StepFn: need m breakpoints, m+1 interval values, m point values");
    for (auto& b : breakpoints) b.canonicalize();
    for (std::size_t j = 0; j < breakpoints.size(); ++j) {
        if (breakpoints[j] <= 0 || breakpoints[j] >= 1) throw std::invalid_argument("StepFn: breakpoint outside (0,1)");
        if (j > 0 && !(breakpoints[j - 1] < breakpoints[j])) throw std::invalid_argument("StepFn: breakpoints not strictly increasing");
        if (!(points[j] <= min(intervals[j], intervals[j + 1])))
            throw std::invalid_argument("StepFn: value at breakpoint " + breakpoints[j].get_str() + " exceeds a neighbouring interval value");
    }
    StepFn s;
    s.breaks_ = std::move(breakpoints);
    s.intervals_ = std::move(intervals);
    s.points_ = std::move(points);
    return s;
}

StepFn StepFn::make(std::vector<Rational> breakpoints, std::vector<ExtNat> intervals, std::vector<ExtNat> points) {
    return make_raw(std::move(breakpoints), std::move(intervals), std::move(points)).canonical();
}

ExtNat StepFn::at(const Rational& t) const {
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    const std::size_t j = static_cast<std::size_t>(it - breaks_.begin());
    if (it != breaks_.end() && *it == t) return points_[j];
    return intervals_[j];
}

StepFn StepFn::refine(const std::vector<Rational>& grid) const {
    StepFn s;
    s.breaks_ = grid;
    s.intervals_.clear();
    s.intervals_.reserve(grid.size() + 1);
    s.points_.reserve(grid.size());
    std::size_t j = 0;  // index of our interval containing the current grid cell
    for (std::size_t g = 0; g <= grid.size(); ++g) {
        s.intervals_.push_back(intervals_[j]);
        if (g == grid.size()) break;
        if (j < breaks_.size() && breaks_[j] == grid[g]) {
            s.points_.push_back(points_[j]);
            ++j;
        } else {
            s.points_.push_back(intervals_[j]);
        }
    }
    if (j != breaks_.size()) throw std::logic_error("StepFn::refine: grid misses a breakpoint");
    return s;
}

StepFn StepFn::canonical() const {
    StepFn s;
    s.intervals_ = {intervals_[0]};
    for (std::size_t j = 0; j < breaks_.size(); ++j) {
        if (points_[j] == s.intervals_.back() && intervals_[j + 1] == s.intervals_.back()) continue;
        s.breaks_.push_back(breaks_[j]);
        s.points_.push_back(points_[j]);
        s.intervals_.push_back(intervals_[j + 1]);
    }
    return s;
}

bool StepFn::all_finite() const {
    auto fin = [](const ExtNat& x) { return !x.is_inf(); };
    return std::all_of(intervals_.begin(), intervals_.end(), fin) && std::all_of(points_.begin(), points_.end(), fin);
}

std::string StepFn::to_string() const {
    std::string out = intervals_[0].to_string();
    for (std::size_t j = 0; j < breaks_.size(); ++j)
        out += " |" + breaks_[j].get_str() + ":" + points_[j].to_string() + "| " + intervals_[j + 1].to_string();
    return out;
}

std::vector<Rational> merged_grid(const StepFn& a, const StepFn& b) {
    std::vector<Rational> g;
    std::set_union(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(), b.breakpoints().end(), std::back_inserter(g));
    return g;
}

StepFn pointwise(const StepFn& a, const StepFn& b, const std::function<ExtNat(ExtNat, ExtNat)>& op) {
    const std::vector<Rational> g = merged_grid(a, b);
    const StepFn ra = a.refine(g), rb = b.refine(g);
    std::vector<ExtNat> iv, pv;
    for (std::size_t j = 0; j <= g.size(); ++j) iv.push_back(op(ra.interval_values()[j], rb.interval_values()[j]));
    for (std::size_t j = 0; j < g.size(); ++j) pv.push_back(op(ra.point_values()[j], rb.point_values()[j]));
    return StepFn::make(g, iv, pv);
}

StepFn map_values(const StepFn& a, const std::function<ExtNat(ExtNat)>& op) {
    std::vector<ExtNat> iv, pv;
    for (const auto& x : a.interval_values()) iv.push_back(op(x));
    for (const auto& x : a.point_values()) pv.push_back(op(x));
    return StepFn::make(a.breakpoints(), iv, pv);
}

bool leq(const StepFn& a, const StepFn& b) {
    const std::vector<Rational> g = merged_grid(a, b);
    const StepFn ra = a.refine(g), rb = b.refine(g);
    for (std::size_t j = 0; j <= g.size(); ++j)
        if (!(ra.interval_values()[j] <= rb.interval_values()[j])) return false;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (!(ra.point_values()[j] <= rb.point_values()[j])) return false;
    return true;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = slash == std::string::npos ? Integer(1) : parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace nccw
