#pragma once

// Complete machinery for 3-interval Hardy-space wavelet sets. Each of the
// four chain combinations (which order the translation chain visits the
// intervals x which order the dilation chain does) pins the six endpoints as
// exact rationals in the integer parameters (r, k, s, l). Feasibility is the
// strict six-way ordering of the endpoints; the reduced linear inequality
// pairs only bound the search window and must agree with the ordering on it.
//
// decompose is the independent route for arbitrary finite positive sets: it
// rebuilds both chains greedily from exact endpoint matches and succeeds
// exactly when the tiling verifier passes.

#include "waveset/interval_set.hpp"

#include <cstddef>
#include <vector>

namespace waveset {

enum class CaseId { T1D1, T2D2, T2D1, T1D2 };

const char* case_name(CaseId c);

struct H2Endpoints {
    Rational p1, q1, p2, q2, p3, q3;
    bool strictly_ordered() const;
    IntervalSet to_set() const;
};

// Exact endpoints for the case's solved linear system. Parameters must lie
// in the case's structural domain (s > r, k range per case, l > k); the
// ordering itself is not required here.
H2Endpoints case_endpoints(CaseId c, long long r, long long k, long long s, long long l);

// All integers l with 0 < p1 < q1 < p2 < q2 < p3 < q3. The window comes from
// the case's reduced inequality pair; every candidate is re-checked against
// the full ordering and a disagreement between the two routes throws.
std::vector<long long> feasible_l(CaseId c, long long r, long long k, long long s);

struct EnumRow {
    long long r, k, s, l;
    IntervalSet set;
};

// Every feasible row with r <= r_max, s <= s_max; each emitted set is
// checked against the tiling verifier before being returned.
std::vector<EnumRow> enumerate_case(CaseId c, long long r_max, long long s_max);

// Chain certificates for a positive set of m+1 intervals (indices 0..m).
// rho/sigma list the intervals in chain order after interval 0; shifts and
// exponents are aligned with them. Chains start at interval 0 and close the
// spans [p0, p0+1] and [p0, 2 p0].
struct H2Certificate {
    std::vector<std::size_t> rho;         // translation chain order, values in 1..m
    std::vector<BigInt> k_shifts;         // nonnegative integer shifts
    std::vector<std::size_t> sigma;       // dilation chain order, values in 1..m
    std::vector<long long> r_exponents;   // nonnegative dyadic exponents
};

// Greedy chain reconstruction; throws not_wavelet_set naming the broken
// chain position (no continuation, ambiguous continuation, or wrong final
// endpoint).
H2Certificate decompose(const IntervalSet& s);

}  // namespace waveset
