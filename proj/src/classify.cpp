#include "waveset/classify.hpp"

#include "waveset/polygonal.hpp"

#include <algorithm>
#include <optional>

namespace waveset {

namespace {

struct PlacedPiece {
    int eps;
    BigInt m;
    Rational a_lo, a_hi;  // residue inside [0, 1/2]
    Interval source;
};

// The unique (eps, m) with eps * (I - m) inside [0, 1/2], if any. The two
// sign windows [m, m+1/2] and [m'-1/2, m'] cannot both contain a
// nondegenerate interval, so at most one placement exists.
std::optional<PlacedPiece> place(const Interval& iv) {
    const Rational half(1, 2);
    // eps = +1: need m integer with hi - 1/2 <= m <= lo.
    {
        BigInt m = iv.lo.floor();
        if (Rational(m) >= iv.hi - half && m >= 0) {
            return PlacedPiece{+1, m, iv.lo - Rational(m), iv.hi - Rational(m), iv};
        }
    }
    // eps = -1: need m integer with hi <= m <= lo + 1/2.
    {
        BigInt m = (iv.lo + half).floor();
        // floor can land on lo + 1/2 exactly; m must also be >= hi.
        if (Rational(m) >= iv.hi && Rational(m) <= iv.lo + half && m >= 0) {
            return PlacedPiece{-1, m, Rational(m) - iv.hi, Rational(m) - iv.lo, iv};
        }
    }
    return std::nullopt;
}

// Chain the dilates of pieces[0..n-2] so that together with pieces[n-1]
// (undelated, rightmost) they tile [beta_n / 2, beta_n]. Returns positions
// and exponents, or nothing when no chain exists.
struct Chain {
    std::vector<int> tau;            // tau[j] = 1-based chain slot of piece j
    std::vector<long long> lambda;   // lambda[j], with lambda[n-1] = 0
};

std::optional<Chain> find_chain(const std::vector<Interval>& pieces) {
    const std::size_t n = pieces.size();
    Rational beta_n = pieces[n - 1].hi;
    Rational alpha_1 = beta_n / Rational(2);

    std::vector<int> slot_of(n - 1, 0);
    std::vector<long long> lam(n, 0);
    std::vector<bool> used(n - 1, false);

    // Greedy fill with backtracking; the dilation exponent of a candidate is
    // forced by the exact dyadic ratio of its left endpoint to the cursor.
    auto rec = [&](auto&& self, std::size_t pos, const Rational& cursor) -> bool {
        if (pos == n) return cursor == pieces[n - 1].lo ? true : false;
        for (std::size_t j = 0; j + 1 < pieces.size(); ++j) {
            if (used[j]) continue;
            auto e = (pieces[j].lo / cursor).log2_exact();
            if (!e) continue;
            Rational next = pieces[j].hi * Rational::pow2(-*e);
            if (next > pieces[n - 1].lo) continue;
            used[j] = true;
            slot_of[j] = static_cast<int>(pos);
            lam[j] = *e;
            if (self(self, pos + 1, next)) return true;
            used[j] = false;
        }
        return false;
    };
    if (n == 1) {
        if (pieces[0].hi != Rational(2) * pieces[0].lo) return std::nullopt;
        return Chain{{}, {0}};
    }
    if (!rec(rec, 1, alpha_1)) return std::nullopt;
    Chain c;
    c.tau.assign(slot_of.begin(), slot_of.end());
    c.lambda = lam;
    return c;
}

}  // namespace

IntervalSet build_from_data(const ClassificationData& d) {
    const int n = d.n;
    if (n < 1) throw data_error('a', "n must be positive");
    if (static_cast<int>(d.epsilon.size()) != n || static_cast<int>(d.m.size()) != n ||
        static_cast<int>(d.lambda.size()) != n || static_cast<int>(d.a.size()) != n + 1 ||
        static_cast<int>(d.tau.size()) != n - 1)
        throw data_error('a', "component sizes inconsistent with n");

    if (d.a.front() != Rational(0) || d.a.back() != Rational(1, 2))
        throw data_error('a', "boundaries must run from 0 to 1/2");
    for (int j = 0; j < n; ++j) {
        if (!(d.a[j] < d.a[j + 1])) throw data_error('a', "boundaries must increase strictly");
        if (d.epsilon[j] != 1 && d.epsilon[j] != -1) throw data_error('a', "epsilon entries must be +-1");
        if (d.m[j] < 0) throw data_error('a', "shifts must be nonnegative");
        if (d.epsilon[j] == -1 && d.m[j] == 0)
            throw data_error('a', "a reflected piece needs shift >= 1 to land on the positive axis");
    }
    for (int j = 0; j + 1 < n; ++j)
        if (d.epsilon[j] == d.epsilon[j + 1] && d.m[j] == d.m[j + 1])
            throw data_error('c', "equal signs with equal shifts merge adjacent pieces");

    // Positive pieces.
    std::vector<Interval> pieces(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Rational mj{d.m[j]};
        if (d.epsilon[j] == 1)
            pieces[j] = {d.a[j] + mj, d.a[j + 1] + mj};
        else
            pieces[j] = {mj - d.a[j + 1], mj - d.a[j]};
    }

    // Dilation chain: slot tau(j) holds 2^{-lambda_j} I_j, the last slot
    // holds I_n itself; slots must abut and span one octave.
    std::vector<std::optional<Interval>> slots(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n - 1), false);
    for (int j = 0; j + 1 < n; ++j) {
        int t = d.tau[j];
        if (t < 1 || t > n - 1 || seen[t - 1]) throw data_error('b', "tau is not a permutation");
        seen[t - 1] = true;
        Rational scale = Rational::pow2(-d.lambda[j]);
        slots[t - 1] = Interval{pieces[j].lo * scale, pieces[j].hi * scale};
    }
    if (d.lambda[n - 1] != 0) throw data_error('b', "last dilation exponent must be 0");
    slots[n - 1] = pieces[n - 1];
    for (int k = 0; k + 1 < n; ++k)
        if (slots[k]->hi != slots[k + 1]->lo) throw data_error('b', "chain slots do not abut");
    if (Rational(2) * slots[0]->lo != slots[n - 1]->hi)
        throw data_error('b', "chain does not span one octave");

    std::vector<std::pair<Rational, Rational>> raw;
    for (const auto& p : pieces) {
        raw.emplace_back(p.lo, p.hi);
        raw.emplace_back(-p.hi, -p.lo);
    }
    return IntervalSet::normalize(std::move(raw));
}

ClassificationData classify(const IntervalSet& s) {
    if (s.empty()) throw not_classifiable("empty set");
    if (s.reflect() != s) throw not_classifiable("set is not symmetric");

    // Positive part (a symmetric candidate never has a piece across 0 and
    // survives the later checks, but split defensively).
    std::vector<Interval> positive;
    for (const auto& iv : s.intervals()) {
        if (iv.hi <= Rational(0)) continue;
        positive.push_back({std::max(iv.lo, Rational(0)), iv.hi});
    }
    if (positive.empty()) throw not_classifiable("empty positive part");

    std::vector<PlacedPiece> placed;
    for (const auto& iv : positive) {
        auto p = place(iv);
        if (!p) throw not_classifiable("piece [" + iv.lo.str() + ", " + iv.hi.str() +
                                       ") has no residue placement inside [0, 1/2]");
        placed.push_back(*p);
    }

    // Residues must partition [0, 1/2).
    std::sort(placed.begin(), placed.end(),
              [](const PlacedPiece& x, const PlacedPiece& y) { return x.a_lo < y.a_lo; });
    if (placed.front().a_lo != Rational(0) || placed.back().a_hi != Rational(1, 2))
        throw not_classifiable("residues do not span [0, 1/2)");
    for (std::size_t j = 0; j + 1 < placed.size(); ++j)
        if (placed[j].a_hi != placed[j + 1].a_lo)
            throw not_classifiable("residues overlap or leave a gap inside [0, 1/2)");

    const int n = static_cast<int>(placed.size());
    std::vector<Interval> pieces;
    pieces.reserve(placed.size());
    for (const auto& p : placed) pieces.push_back(p.source);

    auto chain = find_chain(pieces);
    if (!chain) throw not_classifiable("no dilation chain orders the pieces into one octave");

    ClassificationData d;
    d.n = n;
    d.a.push_back(Rational(0));
    for (const auto& p : placed) {
        d.epsilon.push_back(p.eps);
        d.m.push_back(p.m);
        d.a.push_back(p.a_hi);
    }
    d.tau = chain->tau;
    d.lambda = chain->lambda;
    return d;
}

Space family_space(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::H2_4INT:
        case FamilyTag::H2_5INT: return Space::H2;
        default: return Space::L2;
    }
}

namespace {

long long int_param(const FamilyId& f, std::size_t i, const char* name) {
    if (i >= f.params.size()) throw std::domain_error(std::string("missing parameter ") + name);
    const Rational& r = f.params[i];
    if (!r.is_integer()) throw std::domain_error(std::string("parameter ") + name + " must be an integer");
    return static_cast<long long>(r.num());
}

Rational rat_param(const FamilyId& f, std::size_t i, const char* name) {
    if (i >= f.params.size()) throw std::domain_error(std::string("missing parameter ") + name);
    return f.params[i];
}

}  // namespace

IntervalSet build_family(const FamilyId& f) {
    switch (f.tag) {
        case FamilyTag::N2: {
            long long l = int_param(f, 0, "l");
            if (l < 0) throw std::domain_error("N2 requires l >= 0");
            Polygonal p{PolyFlavor::L2,
                        {{0, BigInt(1) << static_cast<unsigned>(l)}, {-l - 2, BigInt(0)}}};
            return build(p);
        }
        case FamilyTag::KSTV: {
            long long sp = int_param(f, 0, "s"), t = int_param(f, 1, "t"), v = int_param(f, 2, "v");
            if (sp < 0 || t < 1 || v < 0) throw std::domain_error("KSTV requires s >= 0, t >= 1, v >= 0");
            BigInt m1 = (BigInt(2) * t + 1) << static_cast<unsigned>(sp);
            if (!(Rational::pow2(v) > Rational(m1) * 4))
                throw std::domain_error("KSTV requires 2^v > (2t+1) 2^{s+2}");
            Polygonal p{PolyFlavor::L2, {{0, m1}, {-v, BigInt(0)}, {-sp - 2, BigInt(t)}}};
            return build(p);
        }
        case FamilyTag::KSUV: {
            long long sp = int_param(f, 0, "s"), u = int_param(f, 1, "u"), v = int_param(f, 2, "v");
            if (sp < 0 || u < 1 || v < 1) throw std::domain_error("KSUV requires s >= 0, u >= 1, v >= 1");
            if (!(Rational::pow2(sp + u) < Rational(v)))
                throw std::domain_error("KSUV requires 2^{s+u} < v");
            // Upper bound makes the slope chain increase:
            // v (2^{s+2} - 1) < 2^s (2^{s+u+2} - 1).
            if (!(Rational(v) * (Rational::pow2(sp + 2) - 1) <
                  Rational::pow2(sp) * (Rational::pow2(sp + u + 2) - 1)))
                throw std::domain_error("KSUV requires v (2^{s+2}-1) < 2^s (2^{s+u+2}-1)");
            Polygonal p{PolyFlavor::L2,
                        {{0, BigInt(1) << static_cast<unsigned>(sp)}, {u, BigInt(v)}, {-sp - 2, BigInt(0)}}};
            return build(p);
        }
        case FamilyTag::KA: {
            Rational a = rat_param(f, 0, "a");
            if (!(Rational(1, 3) < a && a < Rational(1, 2)))
                throw std::domain_error("KA requires 1/3 < a < 1/2");
            Rational one(1), two(2), half(1, 2);
            std::vector<std::pair<Rational, Rational>> raw = {
                {a, half}, {one - a, two * a}, {one, two * (one - a)}};
            auto mirrored = raw;
            for (const auto& [lo, hi] : mirrored) raw.emplace_back(-hi, -lo);
            return IntervalSet::normalize(std::move(raw));
        }
        case FamilyTag::H2_4INT: {
            Rational c = rat_param(f, 0, "c");
            if (!(Rational(1, 2) < c && c < Rational(1)))
                throw std::domain_error("H2_4INT requires 1/2 < c < 1");
            Rational one(1), two(2), three(3), half(1, 2);
            return IntervalSet::normalize({{one, two * c},
                                           {two * c + two, c + three},
                                           {c, (c + one) * half},
                                           {(c + three) * half, two}});
        }
        case FamilyTag::H2_5INT: {
            Rational x = rat_param(f, 0, "x");
            Rational y = rat_param(f, 1, "y");
            if (!(Rational(1, 2) < x && x < y && y < Rational(1)))
                throw std::domain_error("H2_5INT requires 1/2 < x < y < 1");
            if (!(x + Rational(1) > Rational(2) * y))
                throw std::domain_error("H2_5INT requires x + 1 > 2y");
            Rational one(1), two(2);
            return IntervalSet::normalize({{x, y},
                                           {one, two * x},
                                           {two * y, x + one},
                                           {y + one, two},
                                           {two * x + two, two * y + two}});
        }
    }
    throw std::domain_error("unknown family");
}

}  // namespace waveset
