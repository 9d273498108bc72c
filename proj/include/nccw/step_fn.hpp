#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nccw/ext_nat.hpp"
#include "nccw/integer.hpp"

namespace nccw {

// Lower semicontinuous step function (0,1) -> N u {inf}: values on the open intervals cut out by
// the breakpoints, plus the value at each breakpoint (never above its two neighbours).
class StepFn {
public:
    StepFn() : intervals_{ExtNat(0)} {}
    static StepFn constant(ExtNat v);
    // Validates ordering, range and lower semicontinuity; the result is canonicalized.
    static StepFn make(std::vector<Rational> breakpoints, std::vector<ExtNat> intervals, std::vector<ExtNat> points);
    // No canonicalization; for tests of canonicalize() itself.
    static StepFn make_raw(std::vector<Rational> breakpoints, std::vector<ExtNat> intervals, std::vector<ExtNat> points);

    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<ExtNat>& interval_values() const { return intervals_; }
    const std::vector<ExtNat>& point_values() const { return points_; }

    ExtNat left_limit() const { return intervals_.front(); }   // F(0+)
    ExtNat right_limit() const { return intervals_.back(); }   // F(1-)
    ExtNat at(const Rational& t) const;                         // value at a point of (0,1)

    // Same function on a finer grid (grid must contain every breakpoint).
    StepFn refine(const std::vector<Rational>& grid) const;
    StepFn canonical() const;  // drops breakpoints whose value matches both neighbours

    bool all_finite() const;

    friend bool operator==(const StepFn&, const StepFn&) = default;
    std::string to_string() const;

private:
    std::vector<Rational> breaks_;
    std::vector<ExtNat> intervals_;
    std::vector<ExtNat> points_;
};

std::vector<Rational> merged_grid(const StepFn& a, const StepFn& b);

// Pointwise combination on the merged grid, re-canonicalized. op must be monotone in both arguments
// so that lower semicontinuity is preserved.
StepFn pointwise(const StepFn& a, const StepFn& b, const std::function<ExtNat(ExtNat, ExtNat)>& op);
StepFn map_values(const StepFn& a, const std::function<ExtNat(ExtNat)>& op);

bool leq(const StepFn& a, const StepFn& b);

Rational parse_rational(const std::string& text);

}  // namespace nccw
