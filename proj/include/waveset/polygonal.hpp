#pragma once

// Vertex lists in the dyadic lattice and the interval sets they generate.
// A vertex (lambda, m) encodes the plane point (2^-lambda, 2^-lambda * m);
// consecutive vertices determine slopes, and a valid slope chain turns the
// vertex list into a wavelet set: a symmetric one for the L2 flavor, a
// positive one for the H2 flavor. The Minus flavor is the mirrored slope
// chain in [1/2, 1]; beyond one vertex it admits no valid lists, which
// search_msf_minus corroborates by bounded enumeration.

#include "waveset/interval_set.hpp"
#include "waveset/tiling.hpp"

#include <vector>

namespace waveset {

struct LatticeVertex {
    long long lambda = 0;
    BigInt m;  // >= 0
    bool operator==(const LatticeVertex&) const = default;
};

enum class PolyFlavor { L2, H2, Minus };

struct Polygonal {
    PolyFlavor flavor = PolyFlavor::L2;
    std::vector<LatticeVertex> vertices;
    bool operator==(const Polygonal&) const = default;
};

// Full boundary sequence a_0..a_n of the slope chain:
//   L2:    a_0 = 0, interior slopes, a_n = 1/2
//   H2:    a_0 from the derived closing vertex (lambda_n + 1, m_n + 1),
//          interior slopes, a_n = a_0 + 1
//   Minus: a_0 = 1/2, interior slopes, a_n = 1
// Consecutive vertices with equal abscissas have no slope and are rejected.
std::vector<Rational> slopes(const Polygonal& p);

// Checks every flavor invariant; the verdict detail names the first
// violated condition.
Verdict validate(const Polygonal& p);

// Interval set of a valid polygonal: pieces [a_{j-1}, a_j) + m_j, mirrored
// for the symmetric flavors. Throws on an invalid polygonal.
IntervalSet build(const Polygonal& p);

// Exhaustive search for valid Minus-flavor vertex lists with
// |lambda_j| <= lambda_bound and m_j <= m_bound. Finite evidence only:
// the result is complete within the bounds, not a proof beyond them.
std::vector<Polygonal> search_msf_minus(int n, long long lambda_bound, long long m_bound);

}  // namespace waveset
