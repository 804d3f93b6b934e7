#pragma once

#include "quintic/localization.hpp"
#include "quintic/tate.hpp"

namespace quintic {
namespace counting {

struct ReducedCurve {
    const Fq* F = nullptr;
    FqElem a1, a2, a3, a4, a6;
};

ReducedCurve reduce(const Curve<QuarticElt>& E, const PrimeLocalization& P);

// |E(F_q)| including the point at infinity, by enumeration over x.
Int count_points(const ReducedCurve& E);
Int count_points_serial(const ReducedCurve& E);

struct CountResult {
    Int q;          // residue field size
    Int count;      // number of points
    Int trace;      // a_P = q + 1 - count
};

// Reduces E at P (must have good reduction; verified through tate_local) and
// counts points.  Throws on bad reduction or when Nm(P) exceeds the bound.
CountResult reduce_and_count(const Curve<QuarticElt>& E, const PrimeLocalization& P,
                             const Int& enumeration_bound = Int(1000000));

// a_{P3}(E_gamma(a,b)); requires 3 | a+b.
CountResult trace_at_P3(const Int& a, const Int& b, const Int& enumeration_bound = Int(1000000));

}  // namespace counting
}  // namespace quintic
