#include "waveset/accumulate.hpp"

#include "waveset/profile.hpp"

#include <stdexcept>

namespace waveset {

namespace {

struct BlockConsts {
    Rational a, b, c, d, e, block;  // block = 2^{n-2}
};

BlockConsts consts(int n) {
    if (n < 2) throw std::domain_error("family requires n >= 2");
    Rational den = Rational::pow2(n) - 1;
    BlockConsts k;
    k.a = Rational::pow2(n - 2) / den;
    k.b = Rational(2) * k.a;
    k.c = Rational::pow2(n - 1) * (Rational::pow2(n - 1) - 1) / den;
    k.d = Rational::pow2(2 * n - 2) / den;
    k.e = (Rational::pow2(n - 1) - 1) / den;
    k.block = Rational::pow2(n - 2);
    return k;
}

// Tower X_0 given, Y_l = 2^{-(g0+l)} X_l, X_{l+1} = Y_l + step. Levels are
// recomputed from the seed on every call; generators stay pure.
struct Tower {
    Interval x0;
    long long g0 = 0;
    Rational step;

    std::pair<Interval, Interval> at(int l) const {
        Interval x = x0;
        Rational s = Rational::pow2(-g0);
        Interval y{x.lo * s, x.hi * s};
        for (int i = 1; i <= l; ++i) {
            x = {y.lo + step, y.hi + step};
            s = Rational::pow2(-(g0 + i));
            y = {x.lo * s, x.hi * s};
        }
        return {x, y};
    }
    Interval x(int l) const { return at(l).first; }
    Interval y(int l) const { return at(l).second; }
};

Interval mirror(const Interval& iv) { return {-iv.hi, -iv.lo}; }

Interval propbra_i(int l) {
    if (l == 0) return {Rational(4, 3), Rational(3, 2)};
    return {Rational(3) * Rational::pow2(3 * l + 2) / (Rational::pow2(2 * l + 3) - 1),
            Rational(3) * Rational::pow2(3 * l + 1) / (Rational::pow2(2 * l + 2) - 1)};
}

Interval propbra_j(int l) {
    if (l == 0) return {Rational(1, 5), Rational(1, 3)};
    return {Rational(3) * Rational::pow2(l) / (Rational::pow2(2 * l + 4) - 1),
            Rational(3) * Rational::pow2(l - 1) / (Rational::pow2(2 * l + 3) - 1)};
}

// Integer translate bringing each level into [0, 1/2]: the chain partner of
// the wide tower.
Interval propbra_a(int l) {
    Interval i = propbra_i(l);
    Rational shift = l == 0 ? Rational(1) : Rational(3) * Rational::pow2(l - 1);
    return {i.lo - shift, i.hi - shift};
}

// Dyadic dilates chaining into one octave.
Interval propbra_h(int l) {
    Interval i = propbra_i(l);
    Rational s = Rational::pow2(l == 0 ? 0 : -(l + 1));
    return {i.lo * s, i.hi * s};
}

Interval propbra_l(int l) {
    Interval j = propbra_j(l);
    Rational s = Rational::pow2(l + 2);
    return {j.lo * s, j.hi * s};
}

}  // namespace

IntervalSet build_base(BaseFamily id, int n) {
    BlockConsts k = consts(n);
    if (id == BaseFamily::WN) {
        return IntervalSet::normalize({{-k.d, -k.c}, {-k.e, -k.a}, {k.a, k.b}});
    }
    Rational half(1, 2);
    return IntervalSet::normalize({{-half, -k.a}, {-k.d, -k.block}, {k.a, half}, {k.block, k.d}});
}

LazyFamily make_lazy(LazyId id, int n, const Rational& eps) {
    LazyFamily fam;
    fam.id = id;
    fam.n = n;
    fam.eps = eps;

    if (id == LazyId::PROPBRA) {
        fam.base = IntervalSet();
        Rational half(1, 2), two_thirds(2, 3);
        auto add = [&](std::function<Interval(int)> f, Rational ratio) {
            fam.gens.push_back({false, IntervalSet(), std::move(f), std::move(ratio)});
        };
        add([](int l) { return propbra_i(l); }, two_thirds);
        add([](int l) { return propbra_j(l); }, half);
        add([](int l) { return mirror(propbra_i(l)); }, two_thirds);
        add([](int l) { return mirror(propbra_j(l)); }, half);
        return fam;
    }

    BlockConsts k = consts(n);
    Rational bound = id == LazyId::WNE ? k.a / Rational(2) : k.e / Rational(4);
    if (!(eps > Rational(0) && eps < bound))
        throw std::domain_error("eps must lie strictly between 0 and " + bound.str());

    Rational es = eps * Rational::pow2(-n);
    Interval p1{k.a / 2 + es, k.a / 2 + eps};
    Interval p3{k.d, k.d + Rational(2) * eps};
    Rational quarter(1, 4);

    if (id == LazyId::WNE) {
        Interval p2{k.a + Rational(2) * eps, k.b};
        IntervalSet L = IntervalSet::single(-k.d, -k.c);
        fam.base = IntervalSet::normalize({{-k.d, -k.c},
                                           {-k.e, -k.a},
                                           {p1.lo, p1.hi},
                                           {p2.lo, p2.hi},
                                           {p3.lo, p3.hi}});
        Tower t{{p1.lo - k.block, p1.hi - k.block}, n, -k.block};
        fam.gens.push_back({true, L, [t](int l) { return t.x(l); }, quarter});
        fam.gens.push_back({false, IntervalSet(), [t](int l) { return t.y(l); }, quarter});
        return fam;
    }

    // KNE: symmetric; the perturbation replaces the inner blocks on both
    // sides, towers burrow into the outer blocks.
    Rational half(1, 2);
    Interval s2{k.a + Rational(2) * eps, half};
    IntervalSet R2 = IntervalSet::single(k.block, k.d);
    IntervalSet L2 = IntervalSet::single(-k.d, -k.block);
    std::vector<std::pair<Rational, Rational>> raw = {
        {k.block, k.d}, {-k.d, -k.block},
        {p1.lo, p1.hi}, {s2.lo, s2.hi}, {p3.lo, p3.hi}};
    for (const auto& iv : {p1, s2, p3}) raw.emplace_back(-iv.hi, -iv.lo);
    fam.base = IntervalSet::normalize(std::move(raw));

    Tower t{{p1.lo + k.block, p1.hi + k.block}, n + 1, k.block};
    fam.gens.push_back({true, R2, [t](int l) { return t.x(l); }, quarter});
    fam.gens.push_back({false, IntervalSet(), [t](int l) { return t.y(l); }, quarter});
    fam.gens.push_back({true, L2, [t](int l) { return mirror(t.x(l)); }, quarter});
    fam.gens.push_back({false, IntervalSet(), [t](int l) { return mirror(t.y(l)); }, quarter});
    return fam;
}

namespace {

void check_propbra_chains(int depth) {
    // Adjacency of the translated and dilated levels; a mismatch means the
    // coded level formulas drifted from the construction.
    for (int l = 0; l <= depth; ++l) {
        if (propbra_a(l + 1).hi != propbra_j(l).lo || propbra_j(l).hi != propbra_a(l).lo)
            throw std::logic_error("translated level chain broken at level " + std::to_string(l));
        if (propbra_h(l + 1).hi != propbra_l(l).lo || propbra_l(l).hi != propbra_h(l).lo)
            throw std::logic_error("dilated level chain broken at level " + std::to_string(l));
    }
    if (propbra_a(0).hi != Rational(1, 2) || propbra_h(0).hi != Rational(3, 2))
        throw std::logic_error("level chain does not close");
}

}  // namespace

Truncation materialize(const LazyFamily& fam, int depth) {
    if (depth < 0) throw std::domain_error("depth must be >= 0");

    std::vector<std::pair<Rational, Rational>> adds, subs;
    Rational add_measure, sub_measure, tail;
    for (const auto& g : fam.gens) {
        int last = g.subtractive ? depth + 1 : depth;
        for (int l = 0; l <= last; ++l) {
            Interval iv = g.level(l);
            if (g.subtractive) {
                if (!g.carrier.contains(IntervalSet::single(iv.lo, iv.hi)))
                    throw std::logic_error("removed level escapes its carrier at level " + std::to_string(l));
                subs.emplace_back(iv.lo, iv.hi);
                sub_measure += iv.length();
            } else {
                adds.emplace_back(iv.lo, iv.hi);
                add_measure += iv.length();
            }
        }
        // The residual must dominate every open ledger entry: omitted
        // additive levels, and for a removed tower also the deepest removed
        // level, whose dyadic partner is not materialized yet.
        Interval first_unsettled = g.level(depth + 1);
        tail += first_unsettled.length() / (Rational(1) - g.ratio_bound);
    }

    IntervalSet set = set_difference(fam.base, IntervalSet::normalize(subs));
    set = set_union(set, IntervalSet::normalize(adds));
    if (set.measure() != fam.base.measure() - sub_measure + add_measure)
        throw std::logic_error("family levels collide: measure bookkeeping failed");

    Truncation t;
    t.set = std::move(set);
    t.tail_bound = std::move(tail);

    switch (fam.id) {
        case LazyId::WNE: {
            Interval x = fam.gens[0].level(depth + 1);  // deepest removed level
            t.allowed_uncovered_dyadic_neg =
                dyadic_profile(IntervalSet::single(x.lo, x.hi)).neg.where_at_least(1);
            break;
        }
        case LazyId::KNE: {
            Interval e = fam.gens[0].level(depth + 1);
            t.allowed_uncovered_dyadic_pos =
                dyadic_profile(IntervalSet::single(e.lo, e.hi)).pos.where_at_least(1);
            t.allowed_uncovered_dyadic_neg = t.allowed_uncovered_dyadic_pos.reflect();
            break;
        }
        case LazyId::PROPBRA: {
            check_propbra_chains(depth);
            Rational x = propbra_j(depth).lo;
            Rational y = propbra_l(depth).lo;
            t.allowed_uncovered_mod1 =
                IntervalSet::normalize({{Rational(0), x}, {Rational(1) - x, Rational(1)}});
            t.allowed_uncovered_dyadic_pos = IntervalSet::single(Rational(3, 2), Rational(2) * y);
            t.allowed_uncovered_dyadic_neg = t.allowed_uncovered_dyadic_pos.reflect();
            break;
        }
    }
    return t;
}

std::pair<IntervalSet, Rational> build_lazy(LazyId id, int n, const Rational& eps, int depth) {
    Truncation t = materialize(make_lazy(id, n, eps), depth);
    return {std::move(t.set), std::move(t.tail_bound)};
}

Verdict check_equivalence(const IntervalSet& a, const IntervalSet& b, EquivMode mode,
                          const Rational& tolerance) {
    IntervalSet region;
    Rational miss;
    if (mode == EquivMode::Translation) {
        auto [r, m] = profile_difference(mod1_profile(a), mod1_profile(b));
        region = std::move(r);
        miss = std::move(m);
    } else {
        auto da = dyadic_profile(a);
        auto db = dyadic_profile(b);
        auto [rp, mp] = profile_difference(da.pos, db.pos);
        auto [rn, mn] = profile_difference(da.neg, db.neg);
        region = set_union(rp, rn);
        miss = mp + mn;
    }
    Verdict v;
    v.passed = miss <= tolerance;
    v.residual = miss;
    ConditionReport r;
    r.tag = mode == EquivMode::Translation ? ConditionTag::T : ConditionTag::D;
    r.passed = v.passed;
    r.overlap = std::move(region);  // region where the fiber counts differ
    v.reports = {r};
    if (!v.passed) v.detail = "fiber profiles differ on a set of measure " + miss.str();
    return v;
}

Verdict verify_truncated_set(const Truncation& t, Space space) {
    MultiplicityProfile m1 = mod1_profile(t.set);
    DyadicProfiles dy = dyadic_profile(t.set);

    ConditionReport rt;
    rt.tag = space == Space::H2 ? ConditionTag::Tp : ConditionTag::T;
    rt.overlap = m1.where_at_least(2);
    rt.uncovered = set_difference(m1.where_zero(), t.allowed_uncovered_mod1);
    rt.passed = rt.overlap.empty() && rt.uncovered.empty();

    ConditionReport rd;
    rd.tag = space == Space::H2 ? ConditionTag::Dp : ConditionTag::D;
    rd.overlap = set_union(dy.pos.where_at_least(2),
                           space == Space::H2 ? dy.neg.where_at_least(1) : dy.neg.where_at_least(2));
    IntervalSet unc = set_difference(dy.pos.is_divergent() ? IntervalSet() : dy.pos.where_zero(),
                                     t.allowed_uncovered_dyadic_pos);
    if (space == Space::L2)
        unc = set_union(unc, set_difference(dy.neg.is_divergent() ? IntervalSet() : dy.neg.where_zero(),
                                            t.allowed_uncovered_dyadic_neg));
    rd.uncovered = std::move(unc);
    rd.passed = rd.overlap.empty() && rd.uncovered.empty() && !dy.pos.is_divergent() &&
                (space == Space::H2 || !dy.neg.is_divergent());

    Verdict v;
    v.passed = rt.passed && rd.passed;
    v.reports = {rt, rd};
    v.residual = t.tail_bound;
    if (!rt.overlap.empty() || !rd.overlap.empty())
        v.detail = "overlap";  // never a truncation artifact
    else if (!v.passed)
        v.detail = "uncovered region outside the omitted-level footprint";
    return v;
}

Verdict verify_truncated(const LazyFamily& fam, int depth, Space space) {
    return verify_truncated_set(materialize(fam, depth), space);
}

}  // namespace waveset
