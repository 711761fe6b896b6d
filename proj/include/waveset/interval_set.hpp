#pragma once

// Finite unions of half-open rational intervals [lo, hi). Sets differing by
// null sets are identified, so a shared endpoint never counts as overlap and
// every disjointness question below is exactly decidable.

#include "waveset/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace waveset {

struct Interval {
    Rational lo;
    Rational hi;  // lo < hi
    Rational length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

// Invariant: sorted by lo, pairwise disjoint, adjacent runs merged,
// no degenerate pieces. The canonical form makes == a set equality test.
class IntervalSet {
public:
    IntervalSet() = default;

    // Sorts, drops degenerate pairs, merges overlap and adjacency.
    // A pair with lo > hi is malformed input.
    static IntervalSet normalize(std::vector<std::pair<Rational, Rational>> raw);
    static IntervalSet single(const Rational& lo, const Rational& hi);

    const std::vector<Interval>& intervals() const { return iv_; }
    bool empty() const { return iv_.empty(); }
    std::size_t size() const { return iv_.size(); }

    Rational measure() const;

    // 2^j * S + t
    IntervalSet transform(long long j, const Rational& t) const;
    // -S
    IntervalSet reflect() const;

    bool contains(const IntervalSet& other) const;
    bool operator==(const IntervalSet&) const = default;

    // Distance from the set to the origin: min |endpoint| over pieces,
    // zero if some piece touches or crosses 0. Undefined on the empty set.
    Rational distance_to_zero() const;

    friend IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

private:
    std::vector<Interval> iv_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

}  // namespace waveset
