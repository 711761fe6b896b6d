#pragma once

// Wavelet sets accumulating at the origin. The finite base sets are exact;
// the infinite families are materialized lazily to a chosen depth with a
// certified geometric bound on everything omitted.
//
// Truncation layout invariant: a removed tower level equals the next added
// level shifted by an integer (same mod-1 fiber) and equals its own added
// partner dyadically (same dyadic fiber). Removing levels one deeper than
// additions therefore leaves the mod-1 profile exactly 1 at every depth and
// leaves exactly one dyadic fiber uncovered — the footprint reported with
// the truncation. Any overlap in a truncation is a genuine failure, never a
// depth artifact.

#include "waveset/interval_set.hpp"
#include "waveset/tiling.hpp"

#include <functional>
#include <vector>

namespace waveset {

enum class BaseFamily { WN, KN };
enum class LazyId { WNE, KNE, PROPBRA };

// Exact finite base sets, n >= 2. WN is the three-block non-symmetric set
// (its middle block degenerates at n = 2); KN is the symmetric four-block
// set.
IntervalSet build_base(BaseFamily id, int n);

// One shrinking tower of intervals.
struct GeneratorSeq {
    bool subtractive = false;      // removed from the carrier instead of added
    IntervalSet carrier;           // region every removed level must stay inside
    std::function<Interval(int)> level;
    Rational ratio_bound;          // certified per-level measure ratio (< 1)
};

struct LazyFamily {
    LazyId id{};
    int n = 0;          // unused for PROPBRA
    Rational eps;       // unused for PROPBRA
    IntervalSet base;   // non-shrinking pieces, carriers included
    std::vector<GeneratorSeq> gens;
};

// Validates parameter ranges (0 < eps < bound for the perturbed families).
LazyFamily make_lazy(LazyId id, int n = 0, const Rational& eps = Rational(0));

struct Truncation {
    IntervalSet set;
    // Certified bound dominating the unmaterialized measure and every fiber
    // discrepancy of the truncation (against the limit family and against
    // the base set).
    Rational tail_bound;
    // Regions allowed to be uncovered at this depth, per fundamental domain.
    IntervalSet allowed_uncovered_mod1;
    IntervalSet allowed_uncovered_dyadic_pos;
    IntervalSet allowed_uncovered_dyadic_neg;
};

// Additive levels 0..depth, subtractive levels 0..depth+1. Checks the
// carrier containment of every removed level and exact measure bookkeeping.
Truncation materialize(const LazyFamily& fam, int depth);

// Convenience form: materialized set plus tail bound.
std::pair<IntervalSet, Rational> build_lazy(LazyId id, int n, const Rational& eps, int depth);

enum class EquivMode { Translation, Dilation };

// Fiber-multiplicity criterion: two bounded sets are translation
// (resp. dilation) equivalent iff their mod-1 (resp. dyadic) profiles agree
// almost everywhere. Passes when the differing region has measure at most
// tolerance; the verdict carries the region and its measure as residual.
Verdict check_equivalence(const IntervalSet& a, const IntervalSet& b, EquivMode mode,
                          const Rational& tolerance = Rational(0));

// Runs the space's tiling check on a truncation: overlap anywhere is a hard
// failure; uncovered fibers must lie inside the truncation's footprint.
// Residual reports the tail bound.
Verdict verify_truncated_set(const Truncation& t, Space space);
Verdict verify_truncated(const LazyFamily& fam, int depth, Space space);

}  // namespace waveset
