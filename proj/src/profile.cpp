#include "waveset/profile.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace waveset {

std::pair<Rational, Rational> domain_bounds(ProfileDomain dom) {
    switch (dom) {
        case ProfileDomain::Mod1: return {Rational(0), Rational(1)};
        case ProfileDomain::DyadicPos: return {Rational(1), Rational(2)};
        case ProfileDomain::DyadicNeg: return {Rational(-2), Rational(-1)};
    }
    throw std::logic_error("unknown profile domain");
}

MultiplicityProfile MultiplicityProfile::divergent(ProfileDomain dom) {
    MultiplicityProfile p;
    p.dom_ = dom;
    p.divergent_ = true;
    return p;
}

MultiplicityProfile MultiplicityProfile::from_pieces(
    ProfileDomain dom, const std::vector<std::pair<Rational, Rational>>& pieces) {
    auto [d_lo, d_hi] = domain_bounds(dom);
    // +1/-1 events at piece boundaries, swept left to right.
    std::map<Rational, long long> events;
    events[d_lo] += 0;
    events[d_hi] += 0;
    for (const auto& [lo, hi] : pieces) {
        if (lo > hi) throw std::invalid_argument("profile piece with lo > hi");
        if (lo == hi) continue;
        if (lo < d_lo || hi > d_hi) throw std::invalid_argument("profile piece outside fundamental domain");
        events[lo] += 1;
        events[hi] -= 1;
    }

    MultiplicityProfile p;
    p.dom_ = dom;
    long long count = 0;
    auto it = events.begin();
    Rational prev = it->first;
    count += it->second;
    for (++it; it != events.end(); ++it) {
        if (it->first > prev) {
            if (!p.pieces_.empty() && p.pieces_.back().count == count && p.pieces_.back().hi == prev)
                p.pieces_.back().hi = it->first;
            else
                p.pieces_.push_back({prev, it->first, count});
        }
        count += it->second;
        prev = it->first;
    }
    return p;
}

Rational MultiplicityProfile::mass() const {
    if (divergent_) throw std::domain_error("mass of divergent profile");
    Rational m;
    for (const auto& pc : pieces_) m += Rational(pc.count) * (pc.hi - pc.lo);
    return m;
}

bool MultiplicityProfile::constant_one() const {
    if (divergent_) return false;
    return pieces_.size() == 1 && pieces_[0].count == 1;
}

IntervalSet MultiplicityProfile::where_zero() const {
    std::vector<std::pair<Rational, Rational>> raw;
    for (const auto& pc : pieces_)
        if (pc.count == 0) raw.emplace_back(pc.lo, pc.hi);
    return IntervalSet::normalize(std::move(raw));
}

IntervalSet MultiplicityProfile::where_at_least(long long k) const {
    std::vector<std::pair<Rational, Rational>> raw;
    if (divergent_) {
        auto [lo, hi] = domain_bounds(dom_);
        raw.emplace_back(lo, hi);
    } else {
        for (const auto& pc : pieces_)
            if (pc.count >= k) raw.emplace_back(pc.lo, pc.hi);
    }
    return IntervalSet::normalize(std::move(raw));
}

IntervalSet MultiplicityProfile::where_not_one() const {
    if (divergent_) return where_at_least(0);
    std::vector<std::pair<Rational, Rational>> raw;
    for (const auto& pc : pieces_)
        if (pc.count != 1) raw.emplace_back(pc.lo, pc.hi);
    return IntervalSet::normalize(std::move(raw));
}

std::pair<IntervalSet, Rational> profile_difference(const MultiplicityProfile& a,
                                                    const MultiplicityProfile& b) {
    if (a.dom_ != b.dom_) throw std::invalid_argument("profiles over different domains");
    if (a.divergent_ || b.divergent_) {
        if (a.divergent_ && b.divergent_) return {IntervalSet(), Rational(0)};
        auto [lo, hi] = domain_bounds(a.dom_);
        return {IntervalSet::single(lo, hi), hi - lo};
    }
    std::vector<std::pair<Rational, Rational>> raw;
    Rational diff_mass;
    std::size_t i = 0, j = 0;
    auto [cur, d_hi] = domain_bounds(a.dom_);
    while (i < a.pieces_.size() && j < b.pieces_.size()) {
        Rational hi = std::min(a.pieces_[i].hi, b.pieces_[j].hi);
        long long da = a.pieces_[i].count - b.pieces_[j].count;
        if (da != 0) {
            raw.emplace_back(cur, hi);
            diff_mass += Rational(da < 0 ? -da : da) * (hi - cur);
        }
        if (a.pieces_[i].hi == hi) ++i;
        if (b.pieces_[j].hi == hi) ++j;
        cur = hi;
    }
    return {IntervalSet::normalize(std::move(raw)), diff_mass};
}

MultiplicityProfile mod1_profile_multiset(const std::vector<Interval>& pieces) {
    std::vector<std::pair<Rational, Rational>> fibers;
    for (const auto& iv : pieces) {
        // [lo, hi) cut at integers; each cut lands in [0, 1) after shifting.
        BigInt k = iv.lo.floor();
        Rational cur = iv.lo;
        while (cur < iv.hi) {
            Rational next = std::min(iv.hi, Rational(k + 1));
            fibers.emplace_back(cur - Rational(k), next - Rational(k));
            cur = next;
            k += 1;
        }
    }
    return MultiplicityProfile::from_pieces(ProfileDomain::Mod1, fibers);
}

MultiplicityProfile mod1_profile(const IntervalSet& s) {
    return mod1_profile_multiset(s.intervals());
}

namespace {

// Fibers of a set of positive intervals over [1, 2). Returns nullopt when an
// interval has its left endpoint at 0, whose orbit meets every fiber
// infinitely often.
std::optional<MultiplicityProfile> positive_dyadic_fibers(const std::vector<Interval>& pieces,
                                                          ProfileDomain dom, bool mirror) {
    std::vector<std::pair<Rational, Rational>> fibers;
    for (const auto& iv : pieces) {
        if (iv.lo.is_zero()) return std::nullopt;
        // Split [lo, hi) at powers of two; block [2^e, 2^{e+1}) scales into [1, 2).
        long long e = iv.lo.floor_log2();
        Rational cur = iv.lo;
        while (cur < iv.hi) {
            Rational block_hi = Rational::pow2(e + 1);
            Rational next = std::min(iv.hi, block_hi);
            Rational flo = cur * Rational::pow2(-e);
            Rational fhi = next * Rational::pow2(-e);
            if (mirror)
                fibers.emplace_back(-fhi, -flo);
            else
                fibers.emplace_back(flo, fhi);
            cur = next;
            ++e;
        }
    }
    return MultiplicityProfile::from_pieces(dom, fibers);
}

}  // namespace

DyadicProfiles dyadic_profile(const IntervalSet& s) {
    std::vector<Interval> pos, neg_mirrored;
    for (const auto& iv : s.intervals()) {
        // Split at 0; the negative half is mirrored and processed as positive.
        if (iv.lo < Rational(0)) {
            Rational hi = std::min(iv.hi, Rational(0));
            neg_mirrored.push_back({-hi, -iv.lo});
        }
        if (iv.hi > Rational(0)) {
            Rational lo = std::max(iv.lo, Rational(0));
            pos.push_back({lo, iv.hi});
        }
    }
    auto p = positive_dyadic_fibers(pos, ProfileDomain::DyadicPos, false);
    auto n = positive_dyadic_fibers(neg_mirrored, ProfileDomain::DyadicNeg, true);
    DyadicProfiles out{
        p ? *p : MultiplicityProfile::divergent(ProfileDomain::DyadicPos),
        n ? *n : MultiplicityProfile::divergent(ProfileDomain::DyadicNeg),
    };
    return out;
}

}  // namespace waveset
