#pragma once

// Fiber multiplicity profiles: the single reduction behind every tiling and
// equivalence decision. A profile counts, for almost every point of a
// fundamental domain, how many translated (mod 1) or dilated (dyadic) copies
// of the set cover it. Tiling conditions become "multiplicity == 1".

#include "waveset/interval_set.hpp"

#include <utility>
#include <vector>

namespace waveset {

enum class ProfileDomain {
    Mod1,       // fibers of x ~ x + Z over [0, 1)
    DyadicPos,  // fibers of x ~ 2^j x over [1, 2)
    DyadicNeg,  // fibers of x ~ 2^j x over [-2, -1)
};

std::pair<Rational, Rational> domain_bounds(ProfileDomain dom);

struct ProfilePiece {
    Rational lo;
    Rational hi;
    long long count;
    bool operator==(const ProfilePiece&) const = default;
};

// Piecewise-constant step function over the full fundamental domain.
// Canonical: pieces cover the domain exactly, adjacent counts differ.
// A divergent profile marks infinite multiplicity (a dyadic orbit of an
// interval with an endpoint at 0 meets every fiber infinitely often).
class MultiplicityProfile {
public:
    static MultiplicityProfile from_pieces(ProfileDomain dom,
                                           const std::vector<std::pair<Rational, Rational>>& pieces);
    static MultiplicityProfile divergent(ProfileDomain dom);

    ProfileDomain domain() const { return dom_; }
    bool is_divergent() const { return divergent_; }
    const std::vector<ProfilePiece>& pieces() const { return pieces_; }

    // Total mass sum(count * length); equals the measure of the projected
    // multiset of pieces.
    Rational mass() const;

    bool constant_one() const;
    IntervalSet where_zero() const;
    IntervalSet where_at_least(long long k) const;
    IntervalSet where_not_one() const;

    // Region where two profiles over the same domain differ, with the total
    // |count difference| mass.
    friend std::pair<IntervalSet, Rational> profile_difference(const MultiplicityProfile& a,
                                                               const MultiplicityProfile& b);

    bool operator==(const MultiplicityProfile&) const = default;

private:
    ProfileDomain dom_ = ProfileDomain::Mod1;
    bool divergent_ = false;
    std::vector<ProfilePiece> pieces_;
};

std::pair<IntervalSet, Rational> profile_difference(const MultiplicityProfile& a,
                                                    const MultiplicityProfile& b);

// Multiplicity of integer translates over [0, 1). Also usable on a raw piece
// multiset (overlapping pieces count with multiplicity).
MultiplicityProfile mod1_profile(const IntervalSet& s);
MultiplicityProfile mod1_profile_multiset(const std::vector<Interval>& pieces);

struct DyadicProfiles {
    MultiplicityProfile pos;  // over [1, 2)
    MultiplicityProfile neg;  // over [-2, -1)
};

// Multiplicity of dyadic dilates. Pieces are split at 0 first; dyadic orbits
// preserve sign, so the two half-lines project independently.
DyadicProfiles dyadic_profile(const IntervalSet& s);

}  // namespace waveset
