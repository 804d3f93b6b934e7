#include "quintic/counting.hpp"

#include "quintic/frey.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quintic {
namespace counting {

ReducedCurve reduce(const Curve<QuarticElt>& E, const PrimeLocalization& P) {
    ReducedCurve r;
    r.F = &P.res_field;
    r.a1 = P.residue(E.a1);
    r.a2 = P.residue(E.a2);
    r.a3 = P.residue(E.a3);
    r.a4 = P.residue(E.a4);
    r.a6 = P.residue(E.a6);
    return r;
}

namespace {

// number of points with the given x: solutions of y^2 + (a1 x + a3) y = rhs(x)
u64 points_at_x(const ReducedCurve& E, const FqElem& x) {
    const Fq& F = *E.F;
    FqElem x2 = F.mul(x, x);
    FqElem rhs = F.add(F.add(F.mul(x2, x), F.mul(E.a2, x2)), F.add(F.mul(E.a4, x), E.a6));
    FqElem lin = F.add(F.mul(E.a1, x), E.a3);
    if (F.p == 2) {
        // brute scan of y (residue fields of characteristic 2 here are tiny)
        u64 n = 0;
        for (u64 j = 0; j < F.num_elems(); ++j) {
            FqElem y = F.elem_at(j);
            if (F.add(F.mul(y, y), F.mul(lin, y)) == rhs) ++n;
        }
        return n;
    }
    // complete the square: (y + lin/2)^2 = rhs + lin^2/4
    FqElem inv2 = F.inv(F.from_u64(2));
    FqElem half_lin = F.mul(lin, inv2);
    FqElem d = F.add(rhs, F.mul(half_lin, half_lin));
    if (d.is_zero()) return 1;
    return F.is_square(d) ? 2 : 0;
}

}  // namespace

Int count_points_serial(const ReducedCurve& E) {
    const Fq& F = *E.F;
    u64 total = 1;  // infinity
    for (u64 i = 0; i < F.num_elems(); ++i) total += points_at_x(E, F.elem_at(i));
    return Int((unsigned long)total);
}

Int count_points(const ReducedCurve& E) {
    const Fq& F = *E.F;
    u64 n = F.num_elems();
    u64 total = 1;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (long long i = 0; i < (long long)n; ++i) total += points_at_x(E, F.elem_at((u64)i));
    return Int((unsigned long)total);
}

CountResult reduce_and_count(const Curve<QuarticElt>& E, const PrimeLocalization& P,
                             const Int& enumeration_bound) {
    if (P.norm() > enumeration_bound)
        throw std::domain_error("reduce_and_count: residue field exceeds the enumeration bound");
    tate::ReductionData rd = tate::tate_local(E, P);
    if (rd.f != 0) throw std::domain_error("reduce_and_count: bad reduction at " + P.label());
    ReducedCurve R = reduce(rd.minimal_model, P);
    CountResult res;
    res.q = P.norm();
    res.count = count_points(R);
    res.trace = res.q + 1 - res.count;
    // Hasse: trace^2 <= 4q
    if (res.trace * res.trace > 4 * res.q) throw std::logic_error("reduce_and_count: Hasse bound violated");
    return res;
}

CountResult trace_at_P3(const Int& a, const Int& b, const Int& enumeration_bound) {
    if ((a + b) % 3 != 0) throw std::domain_error("trace_at_P3: requires 3 | a+b");
    Curve<QuarticElt> E = frey::frey_twist(a, b);
    return reduce_and_count(E, PrimeLocalization::P3(), enumeration_bound);
}

}  // namespace counting
}  // namespace quintic
