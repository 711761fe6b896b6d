#include "waveset/polygonal.hpp"

#include <stdexcept>

namespace waveset {

namespace {

// Negative of the slope of the line through the plane points of v and w.
Rational slope_neg(const LatticeVertex& v, const LatticeVertex& w) {
    Rational x1 = Rational::pow2(-v.lambda);
    Rational x2 = Rational::pow2(-w.lambda);
    if (x1 == x2) throw std::invalid_argument("degenerate slope: consecutive vertices share an abscissa");
    return (Rational(w.m) * x2 - Rational(v.m) * x1) / (x1 - x2);
}

Verdict fail(std::string detail) {
    Verdict v;
    v.passed = false;
    v.detail = std::move(detail);
    return v;
}

Verdict pass() {
    Verdict v;
    v.passed = true;
    v.residual = Rational(0);
    return v;
}

}  // namespace

std::vector<Rational> slopes(const Polygonal& p) {
    const auto& vs = p.vertices;
    if (vs.empty()) throw std::invalid_argument("polygonal with no vertices");
    std::vector<Rational> a;
    a.reserve(vs.size() + 1);

    switch (p.flavor) {
        case PolyFlavor::L2: a.push_back(Rational(0)); break;
        case PolyFlavor::Minus: a.push_back(Rational(1, 2)); break;
        case PolyFlavor::H2: {
            // Closing vertex (lambda_n + 1, m_n + 1) is derived, never stored.
            LatticeVertex closing{vs.back().lambda + 1, vs.back().m + 1};
            a.push_back(slope_neg(vs.front(), closing));
            break;
        }
    }
    for (std::size_t j = 0; j + 1 < vs.size(); ++j) a.push_back(slope_neg(vs[j], vs[j + 1]));
    switch (p.flavor) {
        case PolyFlavor::L2: a.push_back(Rational(1, 2)); break;
        case PolyFlavor::Minus: a.push_back(Rational(1)); break;
        case PolyFlavor::H2: a.push_back(a.front() + Rational(1)); break;
    }
    return a;
}

Verdict validate(const Polygonal& p) {
    const auto& vs = p.vertices;
    if (vs.empty()) return fail("vertex-count: at least one vertex required");
    for (const auto& v : vs)
        if (v.m < 0) return fail("vertex-ordinate: m must be nonnegative");
    if (vs.front().lambda != 0) return fail("first-abscissa: lambda_1 must be 0");
    for (std::size_t j = 0; j + 1 < vs.size(); ++j)
        if (vs[j].lambda == vs[j + 1].lambda) return fail("degenerate-slope: consecutive vertices share an abscissa");

    const LatticeVertex& first = vs.front();
    const LatticeVertex& last = vs.back();

    switch (p.flavor) {
        case PolyFlavor::L2: {
            // Closure: 4 m_1 = 2^{-lambda_n} (2 m_n + 1).
            if (Rational(4 * first.m) != Rational(2 * last.m + 1) * Rational::pow2(-last.lambda))
                return fail("closure: 4*m_1 != 2^{-lambda_n}*(2*m_n+1)");
            break;
        }
        case PolyFlavor::Minus: {
            // Closure: 2^{lambda_n} (2 m_1 + 1) = m_n + 1.
            if (Rational(2 * first.m + 1) * Rational::pow2(last.lambda) != Rational(last.m + 1))
                return fail("closure: 2^{lambda_n}*(2*m_1+1) != m_n+1");
            break;
        }
        case PolyFlavor::H2: {
            if (first.m != 0) return fail("first-ordinate: m_1 must be 0");
            for (std::size_t j = 0; j + 1 < vs.size(); ++j)
                if (vs[j].m == vs[j + 1].m) return fail("m-repeat: consecutive ordinates must differ");
            if (first.m == last.m + 1) return fail("m-wrap: m_1 must differ from m_n + 1");
            break;
        }
    }

    std::vector<Rational> a;
    try {
        a = slopes(p);
    } catch (const std::invalid_argument& e) {
        return fail(std::string("degenerate-slope: ") + e.what());
    }

    if (p.flavor == PolyFlavor::H2) {
        if (!(Rational(0) < a.front() && a.front() < Rational(1)))
            return fail("boundary-slope: a_0 must lie strictly between 0 and 1");
    }
    for (std::size_t j = 0; j + 1 < a.size(); ++j)
        if (!(a[j] < a[j + 1])) return fail("slope-order: boundary sequence must increase strictly");
    return pass();
}

IntervalSet build(const Polygonal& p) {
    Verdict v = validate(p);
    if (!v.passed) throw std::domain_error("invalid polygonal: " + v.detail);

    std::vector<Rational> a = slopes(p);
    std::vector<std::pair<Rational, Rational>> raw;
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
        Rational shift = Rational(p.vertices[j].m);
        raw.emplace_back(a[j] + shift, a[j + 1] + shift);
    }
    if (p.flavor != PolyFlavor::H2) {
        auto mirrored = raw;
        for (const auto& [lo, hi] : mirrored) raw.emplace_back(-hi, -lo);
    }
    return IntervalSet::normalize(std::move(raw));
}

std::vector<Polygonal> search_msf_minus(int n, long long lambda_bound, long long m_bound) {
    if (n < 1 || lambda_bound <= 0 || m_bound <= 0)
        throw std::domain_error("search_msf_minus requires n >= 1 and positive bounds");

    std::vector<Polygonal> found;
    // The closure ties the last vertex to m_1: m_n + 1 = 2^{lambda_n} (2 m_1 + 1),
    // so lambda_n >= 0 is forced (an odd number has no even multiple of the
    // form m_n + 1 with negative exponent) and m_n is determined.
    for (BigInt m1 = 0; m1 <= m_bound; ++m1) {
        for (long long ln = 0; ln <= lambda_bound; ++ln) {
            if (n == 1 && ln != 0) continue;
            BigInt mn = (BigInt(2) * m1 + 1) * (BigInt(1) << static_cast<unsigned>(ln)) - 1;
            if (mn > m_bound) break;
            if (n == 1 && mn != m1) continue;

            std::vector<LatticeVertex> vs(static_cast<std::size_t>(n));
            vs.front() = {0, m1};
            vs.back() = {ln, mn};

            // Depth-first fill of the interior vertices.
            auto rec = [&](auto&& self, std::size_t idx) -> void {
                if (idx + 1 >= vs.size()) {
                    Polygonal p{PolyFlavor::Minus, vs};
                    if (validate(p).passed) found.push_back(p);
                    return;
                }
                for (long long lam = -lambda_bound; lam <= lambda_bound; ++lam) {
                    for (BigInt m = 0; m <= m_bound; ++m) {
                        vs[idx] = {lam, m};
                        self(self, idx + 1);
                    }
                }
            };
            if (n == 1) {
                Polygonal p{PolyFlavor::Minus, vs};
                if (validate(p).passed) found.push_back(p);
            } else {
                rec(rec, 1);
            }
        }
    }
    return found;
}

}  // namespace waveset
