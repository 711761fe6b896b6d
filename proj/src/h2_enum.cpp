#include "waveset/h2_enum.hpp"

#include "waveset/tiling.hpp"

#include <stdexcept>
#include <string>

namespace waveset {

const char* case_name(CaseId c) {
    switch (c) {
        case CaseId::T1D1: return "t1d1";
        case CaseId::T2D2: return "t2d2";
        case CaseId::T2D1: return "t2d1";
        case CaseId::T1D2: return "t1d2";
    }
    return "?";
}

bool H2Endpoints::strictly_ordered() const {
    return Rational(0) < p1 && p1 < q1 && q1 < p2 && p2 < q2 && q2 < p3 && p3 < q3;
}

IntervalSet H2Endpoints::to_set() const {
    return IntervalSet::normalize({{p1, q1}, {p2, q2}, {p3, q3}});
}

namespace {

BigInt pw(long long e) { return BigInt(1) << static_cast<unsigned>(e); }

void check_domain(CaseId c, long long r, long long k, long long s, long long l) {
    long long k_min = (c == CaseId::T1D1 || c == CaseId::T1D2) ? 1 : 0;
    if (r < 1) throw std::domain_error(std::string(case_name(c)) + ": r >= 1 required");
    if (s <= r) throw std::domain_error(std::string(case_name(c)) + ": s > r required");
    if (k < k_min || BigInt(k) >= 2 * (pw(r) - 1))
        throw std::domain_error(std::string(case_name(c)) + ": k out of range [" +
                                std::to_string(k_min) + ", 2(2^r-1))");
    if (l <= k) throw std::domain_error(std::string(case_name(c)) + ": l > k required");
}

}  // namespace

H2Endpoints case_endpoints(CaseId c, long long r, long long k, long long s, long long l) {
    check_domain(c, r, k, s, l);
    BigInt K(k), L(l);
    switch (c) {
        case CaseId::T1D1: {
            H2Endpoints e;
            e.p1 = Rational(L + 1, pw(s + 1) - 1);
            e.q1 = Rational(K, pw(r) - 1);
            e.p2 = Rational(pw(r) * K, pw(r) - 1);
            e.q2 = Rational(L - K, pw(s - r) - 1);
            e.p3 = Rational(pw(s - r) * (L - K), pw(s - r) - 1);
            e.q3 = Rational(pw(s + 1) * (L + 1), pw(s + 1) - 1);
            return e;
        }
        case CaseId::T2D2: {
            H2Endpoints e;
            e.p1 = Rational(K + 1, pw(r + 1) - 1);
            e.q1 = Rational(L, pw(s) - 1);
            e.p2 = Rational(L - K, pw(s - r) - 1);
            e.q2 = Rational(pw(r + 1) * (K + 1), pw(r + 1) - 1);
            e.p3 = Rational(pw(s) * L, pw(s) - 1);
            e.q3 = Rational(pw(s - r) * (L - K), pw(s - r) - 1);
            return e;
        }
        case CaseId::T2D1: {
            BigInt A = (pw(s) - 1) * K - (pw(r) - 1) * L + pw(s);
            BigInt B = (pw(s + 1) - 1) * K - (pw(r + 1) - 1) * L + pw(s + 1);
            BigInt C = (pw(s + 1) - 1) * K - (pw(r) - 1) * L + pw(s + 1);
            H2Endpoints e;
            e.p1 = Rational(A, pw(s));
            e.q1 = Rational(B, pw(r));
            e.p2 = Rational(B);
            e.q2 = Rational(C, pw(s));
            e.p3 = Rational(C, pw(r));
            e.q3 = Rational(2 * A);
            return e;
        }
        case CaseId::T1D2: {
            BigInt A = (pw(r) - 1) * L - (pw(s) - 1) * K + pw(r);
            BigInt B = (pw(r + 1) - 1) * L - (pw(s + 1) - 1) * K + pw(r + 1);
            BigInt C = (pw(r + 1) - 1) * L - (pw(s) - 1) * K + pw(r + 1);
            H2Endpoints e;
            e.p1 = Rational(A, pw(r));
            e.q1 = Rational(B, pw(s));
            e.p2 = Rational(C, pw(s));
            e.q2 = Rational(2 * A);
            e.p3 = Rational(B);
            e.q3 = Rational(C, pw(r));
            return e;
        }
    }
    throw std::logic_error("unknown case");
}

namespace {

// Reduced inequality pair for the case, as exclusive rational bounds on l.
// lo < l < hi.
struct Window {
    Rational lo, hi;
};

Window reduced_window(CaseId c, long long r, long long k, long long s) {
    BigInt K(k);
    switch (c) {
        case CaseId::T1D1:
            return {Rational((pw(s) - 1) * K, pw(r) - 1),
                    Rational((pw(s + 1) - 1) * K + 2 * (pw(s) - pw(r)), pw(r + 1) - 1)};
        case CaseId::T2D2:
            if (k == 0)
                return {Rational(pw(s) - 1, pw(r + 1) - 1),
                        Rational(2 * (pw(s) - pw(r)), pw(r + 1) - 1)};
            return {Rational((pw(s) - 1) * K, pw(r) - 1),
                    Rational((pw(s + 1) - 1) * K + 2 * (pw(s) - pw(r)), pw(r + 1) - 1)};
        case CaseId::T2D1: {
            BigInt a_hi = pw(s) * (pw(r + 1) - 1) - pw(r) * (pw(r) - 1);
            BigInt b_hi = (pw(s) * (pw(s + 1) - 1) - pw(r) * (pw(s) - 1)) * K + pw(2 * s + 1) - pw(r + s);
            BigInt a_lo = pw(s) * (pw(r + 1) - 1) - (pw(r) - 1);
            BigInt b_lo = (pw(s) - 1) * (pw(s + 1) - 1) * K + pw(2 * s + 1) - pw(s + 1);
            return {Rational(b_lo, a_lo), Rational(b_hi, a_hi)};
        }
        case CaseId::T1D2: {
            BigInt a_lo = pw(s + 1) * (pw(r) - 1) - (pw(r + 1) - 1);
            BigInt b_lo = (pw(s) - 1) * (pw(s + 1) - 1) * K - pw(r + 1) * (pw(s) - 1);
            BigInt a_hi = (pw(r) - 1) * (pw(r + 1) - 1);
            BigInt b_hi = (pw(r) * (pw(s + 1) - 1) - (pw(s) - 1)) * K - pw(r + 1) * (pw(r) - 1);
            return {Rational(b_lo, a_lo), Rational(b_hi, a_hi)};
        }
    }
    throw std::logic_error("unknown case");
}

}  // namespace

std::vector<long long> feasible_l(CaseId c, long long r, long long k, long long s) {
    check_domain(c, r, k, s, k + 1);
    Window w = reduced_window(c, r, k, s);

    long long first = static_cast<long long>(w.lo.floor()) + 1;
    first = std::max(first, k + 1);
    // Exclusive upper bound: largest integer strictly below hi.
    BigInt hf = w.hi.floor();
    long long last = static_cast<long long>(hf) - (w.hi.is_integer() ? 1 : 0);

    std::vector<long long> out;
    for (long long l = first; l <= last; ++l) {
        if (!case_endpoints(c, r, k, s, l).strictly_ordered())
            throw std::logic_error(std::string(case_name(c)) +
                                   ": reduced inequalities admit l=" + std::to_string(l) +
                                   " but the endpoint ordering rejects it");
        out.push_back(l);
    }
    // The ordering must also reject just outside the window.
    for (long long l : {first - 2, first - 1, last + 1, last + 2}) {
        if (l <= k) continue;
        if (case_endpoints(c, r, k, s, l).strictly_ordered())
            throw std::logic_error(std::string(case_name(c)) +
                                   ": endpoint ordering admits l=" + std::to_string(l) +
                                   " outside the reduced window");
    }
    return out;
}

std::vector<EnumRow> enumerate_case(CaseId c, long long r_max, long long s_max) {
    if (r_max < 1 || s_max < 2) throw std::domain_error("enumerate_case requires r_max >= 1, s_max >= 2");
    long long k_min = (c == CaseId::T1D1 || c == CaseId::T1D2) ? 1 : 0;
    std::vector<EnumRow> rows;
    for (long long r = 1; r <= r_max; ++r) {
        BigInt k_hi = 2 * (pw(r) - 1);
        for (BigInt kb(k_min); kb < k_hi; ++kb) {
            long long k = static_cast<long long>(kb);
            for (long long s = r + 1; s <= s_max; ++s) {
                for (long long l : feasible_l(c, r, k, s)) {
                    IntervalSet set = case_endpoints(c, r, k, s, l).to_set();
                    if (!verify_h2(set).passed)
                        throw std::logic_error(std::string(case_name(c)) + ": enumerated set fails verification");
                    rows.push_back({r, k, s, l, std::move(set)});
                }
            }
        }
    }
    return rows;
}

H2Certificate decompose(const IntervalSet& s) {
    const auto& iv = s.intervals();
    if (iv.empty()) throw std::domain_error("decompose of empty set");
    if (!iv.front().lo.is_positive()) throw std::domain_error("decompose requires a set inside (0, inf)");

    const std::size_t m = iv.size() - 1;
    H2Certificate cert;

    // Translation chain: continue from the running right endpoint with the
    // unique unused interval whose left endpoint is an integer shift away.
    {
        std::vector<bool> used(iv.size(), false);
        used[0] = true;
        Rational cur = iv[0].hi;
        for (std::size_t step = 0; step < m; ++step) {
            std::size_t found = 0, who = 0;
            for (std::size_t j = 1; j < iv.size(); ++j) {
                if (used[j]) continue;
                Rational shift = iv[j].lo - cur;
                if (shift.is_integer() && !shift.is_negative()) {
                    ++found;
                    who = j;
                }
            }
            if (found == 0)
                throw not_wavelet_set("translation chain breaks at position " + std::to_string(step + 1) +
                                      ": no interval continues from " + cur.str());
            if (found > 1)
                throw not_wavelet_set("translation chain ambiguous at position " + std::to_string(step + 1));
            BigInt shift = (iv[who].lo - cur).num();
            used[who] = true;
            cert.rho.push_back(who);
            cert.k_shifts.push_back(shift);
            cur = iv[who].hi - Rational(shift);
        }
        if (cur != iv[0].lo + Rational(1))
            throw not_wavelet_set("translation chain ends at " + cur.str() + " instead of p0 + 1");
    }

    // Dilation chain: the continuation exponent is forced by the exact
    // dyadic ratio of endpoints.
    {
        std::vector<bool> used(iv.size(), false);
        used[0] = true;
        Rational cur = iv[0].hi;
        for (std::size_t step = 0; step < m; ++step) {
            std::size_t found = 0, who = 0;
            long long expo = 0;
            for (std::size_t j = 1; j < iv.size(); ++j) {
                if (used[j]) continue;
                auto e = (iv[j].lo / cur).log2_exact();
                if (e && *e >= 0) {
                    ++found;
                    who = j;
                    expo = *e;
                }
            }
            if (found == 0)
                throw not_wavelet_set("dilation chain breaks at position " + std::to_string(step + 1) +
                                      ": no interval continues from " + cur.str());
            if (found > 1)
                throw not_wavelet_set("dilation chain ambiguous at position " + std::to_string(step + 1));
            used[who] = true;
            cert.sigma.push_back(who);
            cert.r_exponents.push_back(expo);
            cur = iv[who].hi * Rational::pow2(-expo);
        }
        if (cur != Rational(2) * iv[0].lo)
            throw not_wavelet_set("dilation chain ends at " + cur.str() + " instead of 2 p0");
    }
    return cert;
}

}  // namespace waveset
