#pragma once

// Decision procedures for the two tiling characterizations: integer
// translates must partition the line, dyadic dilates must partition the line
// (or the positive half-line in the Hardy-space case). Verdicts carry exact
// witnesses inside the fundamental domain and, for truncated checks, an
// exact residual bound.

#include "waveset/interval_set.hpp"
#include "waveset/profile.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace waveset {

enum class Space { L2, H2 };

enum class ConditionTag { T, D, Tp, Dp, MRA };

std::string condition_name(ConditionTag tag);

struct ConditionReport {
    ConditionTag tag;
    bool passed = false;
    IntervalSet overlap;    // multiplicity >= 2, in the fundamental domain
    IntervalSet uncovered;  // multiplicity == 0
};

struct Verdict {
    bool passed = false;
    std::vector<ConditionReport> reports;
    // Certified measure left unverified by a truncated check; 0 when exact.
    std::optional<Rational> residual;
    std::string detail;  // first violated condition, for verdict-style checks

    std::optional<IntervalSet> witness() const;
};

struct not_wavelet_set : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Translation tiling: integer translates of S partition R.
Verdict verify_T(const IntervalSet& s);

// Dyadic tiling: dilates 2^n S partition R (both half-lines).
Verdict verify_D_l2(const IntervalSet& s);

// Hardy-space tiling: S inside the positive half-line, translates partition
// R, positive dilates partition the positive half-line.
Verdict verify_h2(const IntervalSet& s);

// Union of the dilates 2^{-j} S for 1 <= j <= depth.
IntervalSet scaling_truncation(const IntervalSet& s, int depth);

// Multiresolution membership via the truncated scaling set: translates of
// the truncation must not overlap, and its mass pins the uncovered part to
// the exact geometric tail 2^{-depth}. Requires a set passing verify_T and
// verify_D_l2.
Verdict verify_mra(const IntervalSet& s, int depth);

// Convenience wrapper running the relevant pair for the space.
Verdict verify_wavelet(const IntervalSet& s, Space space);

}  // namespace waveset
