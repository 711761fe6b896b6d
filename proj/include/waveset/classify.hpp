#pragma once

// Classification of symmetric wavelet sets whose positive part is a finite
// union of intervals. The data (n, epsilon, tau, a, m, lambda) says how the
// residues mod Z split into the boundary partition 0 = a_0 < ... < a_n = 1/2
// (a), which pieces appear reflected (epsilon), where each piece sits on the
// positive axis (m), and how dyadic dilates of the pieces chain into one
// octave (tau, lambda). build_from_data and classify are mutually inverse on
// canonical data.

#include "waveset/interval_set.hpp"
#include "waveset/tiling.hpp"

#include <stdexcept>
#include <vector>

namespace waveset {

struct ClassificationData {
    int n = 0;
    std::vector<int> epsilon;        // n entries, each +1 or -1
    std::vector<int> tau;            // n-1 entries, 1-based permutation of {1..n-1}
    std::vector<Rational> a;         // n+1 boundaries, 0 = a_0 < ... < a_n = 1/2
    std::vector<BigInt> m;           // n nonnegative integer shifts
    std::vector<long long> lambda;   // n dilation exponents, lambda_n = 0
    bool operator==(const ClassificationData&) const = default;
};

// Thrown by build_from_data; item is 'a', 'b' or 'c' for the failed
// condition group (piece placement, dilation chain, repetition rule).
struct data_error : std::domain_error {
    data_error(char item_, const std::string& what_) : std::domain_error(what_), item(item_) {}
    char item;
};

// Thrown by classify when no consistent data exists; by the
// characterization this certifies the input is not a symmetric wavelet set
// with finitely many positive intervals.
struct not_classifiable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntervalSet build_from_data(const ClassificationData& d);
ClassificationData classify(const IntervalSet& s);

enum class FamilyTag { N2, KSTV, KSUV, KA, H2_4INT, H2_5INT };

struct FamilyId {
    FamilyTag tag;
    std::vector<Rational> params;
};

Space family_space(FamilyTag tag);

// Closed-form parametric families. Parameter constraints are checked and a
// violation raises std::domain_error naming the failed inequality.
//   N2(l):        two positive intervals, integer l >= 0
//   KSTV(s,t,v):  three positive intervals from vertices
//                 (0, 2^s(2t+1)), (-v, 0), (-s-2, t); t >= 1, 2^v > (2t+1) 2^{s+2}
//   KSUV(s,u,v):  three positive intervals from vertices
//                 (0, 2^s), (u, v), (-s-2, 0); valid iff the slope chain
//                 orders, i.e. 2^{s+u} < v < 2^s (2^{s+u+2}-1) / (2^{s+2}-1)
//   KA(a):        [a,1/2) u [1-a,2a) u [1,2-2a) mirrored; 1/3 < a < 1/2
//   H2_4INT(c):   four positive intervals; 1/2 < c < 1
//   H2_5INT(x,y): five positive intervals; 1/2 < x < y < 1, x + 1 > 2y
IntervalSet build_family(const FamilyId& f);

}  // namespace waveset
