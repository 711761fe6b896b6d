#include <doctest.h>

#include "waveset/accumulate.hpp"

#include <random>

using namespace waveset;

namespace {

bool covers(const IntervalSet& s, const Rational& lo, const Rational& hi) {
    return s.contains(IntervalSet::single(lo, hi));
}

}  // namespace

TEST_CASE("base sets from the block formulas") {
    // n = 3: blocks a = 2/7, b = 4/7, c = 12/7, d = 16/7, e = 3/7.
    IntervalSet w3 = build_base(BaseFamily::WN, 3);
    CHECK(w3 == IntervalSet::normalize({{Rational(-16, 7), Rational(-12, 7)},
                                        {Rational(-3, 7), Rational(-2, 7)},
                                        {Rational(2, 7), Rational(4, 7)}}));

    // n = 2 degenerates the middle block.
    IntervalSet w2 = build_base(BaseFamily::WN, 2);
    CHECK(w2 == IntervalSet::normalize({{Rational(-4, 3), Rational(-2, 3)}, {Rational(1, 3), Rational(2, 3)}}));

    IntervalSet k2 = build_base(BaseFamily::KN, 2);
    CHECK(k2 == IntervalSet::normalize({{Rational(-1, 2), Rational(-1, 3)},
                                        {Rational(-4, 3), Rational(-1)},
                                        {Rational(1, 3), Rational(1, 2)},
                                        {Rational(1), Rational(4, 3)}}));

    for (int n = 2; n <= 6; ++n) {
        for (BaseFamily f : {BaseFamily::WN, BaseFamily::KN}) {
            IntervalSet s = build_base(f, n);
            CHECK(s.measure() == Rational(1));
            CHECK(verify_T(s).passed);
            CHECK(verify_D_l2(s).passed);
        }
    }
    CHECK_THROWS_AS(build_base(BaseFamily::WN, 1), std::domain_error);
}

TEST_CASE("perturbed family materialization contains the stated pieces") {
    // n = 2, eps = 1/8: perturbation blocks sit at a/2 and at the far end.
    auto [set, tail] = build_lazy(LazyId::WNE, 2, Rational(1, 8), 0);
    CHECK(covers(set, Rational(1, 6) + Rational(1, 32), Rational(1, 6) + Rational(1, 8)));
    CHECK(covers(set, Rational(1, 3) + Rational(1, 4), Rational(2, 3)));
    CHECK(covers(set, Rational(4, 3), Rational(4, 3) + Rational(1, 4)));
    CHECK(tail > Rational(0));

    CHECK_THROWS_AS(build_lazy(LazyId::WNE, 2, Rational(1, 6), 4), std::domain_error);
    CHECK_THROWS_AS(build_lazy(LazyId::KNE, 2, Rational(1, 2), 4), std::domain_error);
    CHECK_THROWS_AS(build_lazy(LazyId::KNE, 2, Rational(0), 4), std::domain_error);
}

TEST_CASE("deep-family levels land where the closed forms say") {
    auto [set, tail] = build_lazy(LazyId::PROPBRA, 0, Rational(0), 2);
    CHECK(covers(set, Rational(4, 3), Rational(3, 2)));
    CHECK(covers(set, Rational(1, 5), Rational(1, 3)));
    CHECK(covers(set, Rational(96, 31), Rational(48, 15)));
    CHECK(covers(set, Rational(2, 21), Rational(3, 31)));
    CHECK(set.reflect() == set);
}

TEST_CASE("tail bound halves (at least) per unit depth and dominates omitted mass") {
    for (auto id : {LazyId::WNE, LazyId::KNE, LazyId::PROPBRA}) {
        LazyFamily fam = id == LazyId::PROPBRA ? make_lazy(id)
                                               : make_lazy(id, 2, Rational(1, 64));
        Rational prev;
        for (int depth = 1; depth <= 8; ++depth) {
            Truncation t = materialize(fam, depth);
            if (depth > 1) CHECK(t.tail_bound <= prev / 2);
            prev = t.tail_bound;
        }
        // The bound dominates the measure actually added later.
        Truncation shallow = materialize(fam, 3);
        Truncation deep = materialize(fam, 14);
        Rational added = set_difference(deep.set, shallow.set).measure();
        CHECK(added <= shallow.tail_bound);
    }
}

TEST_CASE("per-level ratio certificates hold far beyond test depth") {
    for (auto id : {LazyId::WNE, LazyId::KNE, LazyId::PROPBRA}) {
        LazyFamily fam = id == LazyId::PROPBRA ? make_lazy(id)
                                               : make_lazy(id, 3, Rational(1, 100));
        for (const auto& g : fam.gens) {
            for (int l = 0; l < 40; ++l) {
                CHECK(g.level(l + 1).length() <= g.ratio_bound * g.level(l).length());
            }
        }
    }
}

TEST_CASE("equivalence by fiber profiles") {
    IntervalSet a = IntervalSet::single(Rational(0), Rational(1));
    IntervalSet b = IntervalSet::single(Rational(5), Rational(6));
    CHECK(check_equivalence(a, b, EquivMode::Translation).passed);
    CHECK(!check_equivalence(a, b, EquivMode::Dilation).passed);

    // Cutting a set and translating the parts by integers preserves the
    // mod-1 fibers.
    IntervalSet c = IntervalSet::normalize({{Rational(0), Rational(1, 3)}, {Rational(7, 3), Rational(3)}});
    CHECK(check_equivalence(a, c, EquivMode::Translation).passed);
    // Dyadic rearrangement preserves the dyadic fibers.
    IntervalSet d = IntervalSet::normalize({{Rational(5), Rational(11, 2)}, {Rational(11), Rational(12)}});
    CHECK(check_equivalence(b, d, EquivMode::Dilation).passed);
}

TEST_CASE("equivalence is reflexive, symmetric and transitive on random sets") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long long> num(-30, 30), den(1, 8), kd(-3, 3);
    for (int i = 0; i < 400; ++i) {
        std::vector<std::pair<Rational, Rational>> raw;
        for (int q = 0; q < 3; ++q) {
            Rational x(num(rng), den(rng)), y(num(rng), den(rng));
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            raw.emplace_back(x, y);
        }
        if (raw.empty()) continue;
        IntervalSet a = IntervalSet::normalize(raw);

        // b: integer-translate each piece; mod-1 equivalent by construction.
        std::vector<std::pair<Rational, Rational>> braw;
        for (const auto& iv : a.intervals()) {
            Rational k(kd(rng));
            braw.emplace_back(iv.lo + k, iv.hi + k);
        }
        IntervalSet b = IntervalSet::normalize(braw);
        bool merged_overlap = mod1_profile(b).mass() != mod1_profile(a).mass();

        for (auto mode : {EquivMode::Translation, EquivMode::Dilation}) {
            CHECK(check_equivalence(a, a, mode).passed);
            CHECK(check_equivalence(a, b, mode).passed == check_equivalence(b, a, mode).passed);
        }
        if (!merged_overlap) {
            CHECK(check_equivalence(a, b, EquivMode::Translation).passed);
            // Transitivity through a third integer translate.
            IntervalSet c = b.transform(0, Rational(2));
            if (mod1_profile(c).mass() == mod1_profile(b).mass()) {
                CHECK(check_equivalence(a, c, EquivMode::Translation).passed);
            }
        }
    }
}

TEST_CASE("truncated verification passes and distinguishes overlap from tail") {
    LazyFamily wne = make_lazy(LazyId::WNE, 2, Rational(1, 8));
    Verdict v = verify_truncated(wne, 10, Space::L2);
    CHECK(v.passed);
    CHECK(*v.residual < Rational::pow2(-20));

    LazyFamily pb = make_lazy(LazyId::PROPBRA);
    CHECK(verify_truncated(pb, 10, Space::L2).passed);

    // Injecting a duplicated level creates genuine overlap: hard failure.
    Truncation t = materialize(wne, 6);
    Interval y0 = wne.gens[1].level(0);
    Truncation tampered = t;
    tampered.set = set_union(t.set, IntervalSet::single(y0.lo + Rational(1), y0.hi + Rational(1)));
    Verdict bad = verify_truncated_set(tampered, Space::L2);
    CHECK(!bad.passed);
    CHECK(bad.detail == "overlap");
}

TEST_CASE("truncations approach the origin strictly") {
    for (auto id : {LazyId::WNE, LazyId::KNE, LazyId::PROPBRA}) {
        LazyFamily fam = id == LazyId::PROPBRA ? make_lazy(id)
                                               : make_lazy(id, 2, Rational(1, 16));
        Rational prev;
        for (int depth = 0; depth <= 8; ++depth) {
            Rational d = materialize(fam, depth).set.distance_to_zero();
            CHECK(d > Rational(0));
            if (depth > 0) CHECK(d < prev);
            prev = d;
        }
    }
}

TEST_CASE("truncations are translation and dilation equivalent to their base set") {
    IntervalSet w2 = build_base(BaseFamily::WN, 2);
    Truncation t = materialize(make_lazy(LazyId::WNE, 2, Rational(1, 8)), 12);
    CHECK(check_equivalence(t.set, w2, EquivMode::Translation, t.tail_bound).passed);
    CHECK(check_equivalence(t.set, w2, EquivMode::Dilation, t.tail_bound).passed);

    IntervalSet k2 = build_base(BaseFamily::KN, 2);
    Truncation tk = materialize(make_lazy(LazyId::KNE, 2, Rational(1, 16)), 12);
    CHECK(check_equivalence(tk.set, k2, EquivMode::Translation, tk.tail_bound).passed);
    CHECK(check_equivalence(tk.set, k2, EquivMode::Dilation, tk.tail_bound).passed);
}
