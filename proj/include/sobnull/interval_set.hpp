#ifndef SOBNULL_INTERVAL_SET_HPP
#define SOBNULL_INTERVAL_SET_HPP

#include "sobnull/numeric.hpp"

#include <utility>
#include <vector>

namespace sobnull::sets {

// Finite union of disjoint closed intervals with exact rational endpoints,
// normalized so that a_i <= b_i and b_i < a_{i+1}. Sets are treated modulo
// Lebesgue-null sets: touching intervals merge, zero-length pieces produced
// by the sweep are dropped (explicitly constructed degenerate intervals are
// kept).
class IntervalSet {
public:
    using Interval = std::pair<Rational, Rational>;

    IntervalSet() = default;
    // Normalizes: sorts, rejects a > b, merges overlapping/touching intervals.
    static IntervalSet from_intervals(std::vector<Interval> raw);

    const std::vector<Interval>& intervals() const { return iv_; }
    std::size_t size() const { return iv_.size(); }
    bool empty() const { return iv_.empty(); }

    Rational total_length() const;
    // Endpoint span max(b) - min(a); 0 for the empty set.
    Rational span() const;

    IntervalSet shifted(const Rational& t) const;

    friend IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b);

    bool operator==(const IntervalSet& o) const { return iv_ == o.iv_; }

private:
    std::vector<Interval> iv_;
};

IntervalSet shift(const IntervalSet& a, const Rational& t);
Rational total_length(const IntervalSet& a);

// Float-backed materialization for families whose endpoints are irrational.
struct FloatIntervalSet {
    std::vector<std::pair<BigFloat, BigFloat>> intervals;
    unsigned precision_bits = kBigFloatBits;

    BigFloat total_length() const {
        BigFloat s = 0;
        for (const auto& [a, b] : intervals) s += b - a;
        return s;
    }
};

} // namespace sobnull::sets

#endif
