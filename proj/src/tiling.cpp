#include "waveset/tiling.hpp"

namespace waveset {

std::string condition_name(ConditionTag tag) {
    switch (tag) {
        case ConditionTag::T: return "T";
        case ConditionTag::D: return "D";
        case ConditionTag::Tp: return "T'";
        case ConditionTag::Dp: return "D'";
        case ConditionTag::MRA: return "MRA";
    }
    return "?";
}

std::optional<IntervalSet> Verdict::witness() const {
    for (const auto& r : reports) {
        if (!r.overlap.empty()) return r.overlap;
        if (!r.uncovered.empty()) return r.uncovered;
    }
    return std::nullopt;
}

namespace {

ConditionReport report_from_profile(ConditionTag tag, const MultiplicityProfile& p) {
    ConditionReport r;
    r.tag = tag;
    r.overlap = p.where_at_least(2);
    r.uncovered = p.is_divergent() ? IntervalSet() : p.where_zero();
    r.passed = p.constant_one();
    return r;
}

Verdict from_reports(std::vector<ConditionReport> reports) {
    Verdict v;
    v.passed = true;
    for (const auto& r : reports) {
        if (!r.passed) {
            v.passed = false;
            if (v.detail.empty()) v.detail = condition_name(r.tag);
        }
    }
    v.reports = std::move(reports);
    v.residual = Rational(0);
    return v;
}

}  // namespace

Verdict verify_T(const IntervalSet& s) {
    return from_reports({report_from_profile(ConditionTag::T, mod1_profile(s))});
}

Verdict verify_D_l2(const IntervalSet& s) {
    auto d = dyadic_profile(s);
    ConditionReport r;
    r.tag = ConditionTag::D;
    r.overlap = set_union(d.pos.where_at_least(2), d.neg.where_at_least(2));
    r.uncovered = set_union(d.pos.is_divergent() ? IntervalSet() : d.pos.where_zero(),
                            d.neg.is_divergent() ? IntervalSet() : d.neg.where_zero());
    r.passed = d.pos.constant_one() && d.neg.constant_one();
    return from_reports({r});
}

Verdict verify_h2(const IntervalSet& s) {
    auto d = dyadic_profile(s);
    ConditionReport dp;
    dp.tag = ConditionTag::Dp;
    // Any mass on the negative half-line shows up as coverage of the
    // negative dyadic fibers, which must be empty here.
    dp.overlap = set_union(d.pos.where_at_least(2), d.neg.where_at_least(1));
    dp.uncovered = d.pos.is_divergent() ? IntervalSet() : d.pos.where_zero();
    bool neg_empty = !d.neg.is_divergent() && d.neg.where_at_least(1).empty();
    dp.passed = d.pos.constant_one() && neg_empty;

    ConditionReport tp = report_from_profile(ConditionTag::Tp, mod1_profile(s));
    return from_reports({tp, dp});
}

IntervalSet scaling_truncation(const IntervalSet& s, int depth) {
    IntervalSet acc;
    for (int j = 1; j <= depth; ++j) acc = set_union(acc, s.transform(-j, Rational(0)));
    return acc;
}

Verdict verify_mra(const IntervalSet& s, int depth) {
    if (depth < 1) throw std::domain_error("verify_mra depth must be >= 1");
    if (!verify_T(s).passed || !verify_D_l2(s).passed)
        throw not_wavelet_set("verify_mra requires a set passing the translation and dilation tilings");

    // Work on the piece multiset of all dilates so that overlap between
    // dilates (impossible for a genuine wavelet set) would still be seen.
    std::vector<Interval> pieces;
    for (int j = 1; j <= depth; ++j) {
        IntervalSet dilate = s.transform(-j, Rational(0));
        for (const auto& iv : dilate.intervals()) pieces.push_back(iv);
    }

    MultiplicityProfile p = mod1_profile_multiset(pieces);
    ConditionReport r;
    r.tag = ConditionTag::MRA;
    r.overlap = p.where_at_least(2);
    r.uncovered = p.where_zero();
    Rational mass = p.mass();
    Rational floor_mass = Rational(1) - Rational::pow2(-depth);
    r.passed = r.overlap.empty() && mass >= floor_mass;

    Verdict v;
    v.passed = r.passed;
    v.reports = {r};
    v.residual = Rational(1) - mass;
    if (!v.passed) v.detail = condition_name(ConditionTag::MRA);
    return v;
}

Verdict verify_wavelet(const IntervalSet& s, Space space) {
    if (space == Space::H2) return verify_h2(s);
    Verdict t = verify_T(s);
    Verdict d = verify_D_l2(s);
    std::vector<ConditionReport> reports = t.reports;
    reports.insert(reports.end(), d.reports.begin(), d.reports.end());
    return from_reports(std::move(reports));
}

}  // namespace waveset
