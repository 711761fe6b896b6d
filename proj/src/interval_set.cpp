#include "waveset/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace waveset {

IntervalSet IntervalSet::normalize(std::vector<std::pair<Rational, Rational>> raw) {
    for (const auto& [lo, hi] : raw) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi: [" + lo.str() + ", " + hi.str() + ")");
    }
    std::erase_if(raw, [](const auto& p) { return p.first == p.second; });
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });

    IntervalSet out;
    for (auto& [lo, hi] : raw) {
        if (!out.iv_.empty() && lo <= out.iv_.back().hi) {
            if (hi > out.iv_.back().hi) out.iv_.back().hi = std::move(hi);
        } else {
            out.iv_.push_back({std::move(lo), std::move(hi)});
        }
    }
    return out;
}

IntervalSet IntervalSet::single(const Rational& lo, const Rational& hi) {
    return normalize({{lo, hi}});
}

Rational IntervalSet::measure() const {
    Rational m;
    for (const auto& iv : iv_) m += iv.length();
    return m;
}

IntervalSet IntervalSet::transform(long long j, const Rational& t) const {
    Rational scale = Rational::pow2(j);
    std::vector<std::pair<Rational, Rational>> raw;
    raw.reserve(iv_.size());
    for (const auto& iv : iv_) raw.emplace_back(scale * iv.lo + t, scale * iv.hi + t);
    return normalize(std::move(raw));
}

IntervalSet IntervalSet::reflect() const {
    std::vector<std::pair<Rational, Rational>> raw;
    raw.reserve(iv_.size());
    for (const auto& iv : iv_) raw.emplace_back(-iv.hi, -iv.lo);
    return normalize(std::move(raw));
}

bool IntervalSet::contains(const IntervalSet& other) const {
    return set_difference(other, *this).empty();
}

Rational IntervalSet::distance_to_zero() const {
    if (iv_.empty()) throw std::domain_error("distance_to_zero of empty set");
    bool have = false;
    Rational best;
    for (const auto& iv : iv_) {
        Rational d;
        if (iv.lo >= Rational(0))
            d = iv.lo;
        else if (iv.hi <= Rational(0))
            d = -iv.hi;
        else
            d = Rational(0);
        if (!have || d < best) {
            best = d;
            have = true;
        }
    }
    return best;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<std::pair<Rational, Rational>> raw;
    raw.reserve(a.iv_.size() + b.iv_.size());
    for (const auto& iv : a.iv_) raw.emplace_back(iv.lo, iv.hi);
    for (const auto& iv : b.iv_) raw.emplace_back(iv.lo, iv.hi);
    return IntervalSet::normalize(std::move(raw));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
    std::vector<std::pair<Rational, Rational>> raw;
    std::size_t i = 0, j = 0;
    while (i < a.iv_.size() && j < b.iv_.size()) {
        const auto& x = a.iv_[i];
        const auto& y = b.iv_[j];
        Rational lo = std::max(x.lo, y.lo);
        Rational hi = std::min(x.hi, y.hi);
        if (lo < hi) raw.emplace_back(lo, hi);
        if (x.hi <= y.hi)
            ++i;
        else
            ++j;
    }
    return IntervalSet::normalize(std::move(raw));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<std::pair<Rational, Rational>> raw;
    std::size_t j = 0;
    for (const auto& x : a.iv_) {
        Rational cur = x.lo;
        while (j < b.iv_.size() && b.iv_[j].hi <= cur) ++j;
        std::size_t k = j;
        while (k < b.iv_.size() && b.iv_[k].lo < x.hi) {
            if (b.iv_[k].lo > cur) raw.emplace_back(cur, b.iv_[k].lo);
            if (b.iv_[k].hi > cur) cur = b.iv_[k].hi;
            ++k;
        }
        if (cur < x.hi) raw.emplace_back(cur, x.hi);
    }
    return IntervalSet::normalize(std::move(raw));
}

}  // namespace waveset
