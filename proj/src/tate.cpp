#include "quintic/tate.hpp"

#include "quintic/frey.hpp"

#include <algorithm>
#include <sstream>

namespace quintic {
namespace tate {

std::string kodaira_name(Kodaira k, long n) {
    switch (k) {
        case Kodaira::I0: return "I0";
        case Kodaira::In: return "I" + std::to_string(n);
        case Kodaira::II: return "II";
        case Kodaira::III: return "III";
        case Kodaira::IV: return "IV";
        case Kodaira::I0star: return "I0*";
        case Kodaira::Instar: return "I" + std::to_string(n) + "*";
        case Kodaira::IVstar: return "IV*";
        case Kodaira::IIIstar: return "III*";
        case Kodaira::IIstar: return "II*";
    }
    return "?";
}

namespace {

using C = Curve<QuarticElt>;

struct Local {
    const PrimeLocalization& P;
    const Fq& F;

    long v(const QuarticElt& z) const { return P.valuation(z); }
    FqElem res(const QuarticElt& z) const { return P.residue(z); }
    QuarticElt lift(const FqElem& a) const { return P.lift(a); }
    bool char2() const { return P.p == 2; }
    bool char3() const { return P.p == 3; }
};

// roots (with multiplicity) of a cubic T^3 + A T^2 + B T + C over F by scan;
// residue fields here are tiny (q <= 81 for the additive primes of this
// family), and anything larger is rejected upstream.
struct CubicRoots {
    int distinct = 0;              // number of distinct roots in the algebraic closure:
                                   // 3 (separable), 2 (one double), 1 (triple)
    FqElem multiple_root;          // the double/triple root (lies in F)
};

CubicRoots cubic_root_structure(const Fq& F, const FqElem& A, const FqElem& B, const FqElem& Cc) {
    // disc = 18ABC - 4A^3C + A^2B^2 - 4B^3 - 27C^2, valid in any characteristic
    auto m = [&](const FqElem& x, const FqElem& y) { return F.mul(x, y); };
    FqElem AB = m(A, B);
    FqElem disc = F.sub(
        F.add(F.mul_u64(m(AB, Cc), 18), m(AB, AB)),
        F.add(F.add(F.mul_u64(m(m(A, A), m(A, Cc)), 4), F.mul_u64(m(m(B, B), B), 4)),
              F.mul_u64(m(Cc, Cc), 27)));
    CubicRoots out;
    if (!disc.is_zero()) {
        out.distinct = 3;
        return out;
    }
    if (F.num_elems() > 100000) throw std::logic_error("cubic_root_structure: residue field too large");
    // find a root of multiplicity >= 2 by scanning
    for (u64 i = 0; i < F.num_elems(); ++i) {
        FqElem r = F.elem_at(i);
        FqElem val = F.add(F.add(m(m(r, r), r), m(A, m(r, r))), F.add(m(B, r), Cc));
        if (!val.is_zero()) continue;
        // P'(r) = 3r^2 + 2Ar + B
        FqElem dval = F.add(F.add(F.mul_u64(m(r, r), 3), F.mul_u64(m(A, r), 2)), B);
        if (!dval.is_zero()) continue;
        out.multiple_root = r;
        // triple iff P''(r) = 6r + 2A also vanishes AND the cubic equals (T-r)^3
        // checked via comparing coefficients: triple root iff A = -3r and B = 3r^2
        FqElem minus3r = F.neg(F.mul_u64(r, 3));
        FqElem r2x3 = F.mul_u64(m(r, r), 3);
        out.distinct = (A == minus3r && B == r2x3) ? 1 : 2;
        return out;
    }
    throw std::logic_error("cubic_root_structure: vanishing discriminant but no multiple root found");
}

// double root of Y^2 + aY - b when its discriminant a^2 + 4b vanishes
FqElem quadratic_double_root_y(const Local& L, const FqElem& a, const FqElem& b) {
    const Fq& F = L.F;
    if (L.char2()) return F.sqrt_char2(b);  // (Y - r)^2 = Y^2 + r^2 in char 2
    // r = -a/2
    FqElem half = F.inv(F.from_u64(2));
    return F.neg(F.mul(a, half));
}

// double root of aX^2 + bX + c (a != 0) when the discriminant vanishes
FqElem quadratic_double_root_x(const Local& L, const FqElem& a, const FqElem& b, const FqElem& c) {
    const Fq& F = L.F;
    if (L.char2()) return F.sqrt_char2(F.mul(c, F.inv(a)));
    FqElem two_a = F.mul_u64(a, 2);
    return F.neg(F.mul(b, F.inv(two_a)));
}

// singular point of the reduced curve (scan; the reduced curve is singular)
std::pair<FqElem, FqElem> singular_point(const Local& L, const C& E) {
    const Fq& F = L.F;
    if (F.num_elems() > 100000) throw std::logic_error("singular_point: residue field too large");
    FqElem a1 = L.res(E.a1), a2 = L.res(E.a2), a3 = L.res(E.a3), a4 = L.res(E.a4), a6 = L.res(E.a6);
    for (u64 i = 0; i < F.num_elems(); ++i) {
        FqElem x = F.elem_at(i);
        for (u64 j = 0; j < F.num_elems(); ++j) {
            FqElem y = F.elem_at(j);
            // f = y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6
            FqElem x2 = F.mul(x, x);
            FqElem fv = F.sub(F.add(F.mul(y, y), F.add(F.mul(a1, F.mul(x, y)), F.mul(a3, y))),
                              F.add(F.add(F.mul(x2, x), F.mul(a2, x2)), F.add(F.mul(a4, x), a6)));
            if (!fv.is_zero()) continue;
            // fx = a1 y - 3x^2 - 2 a2 x - a4 ; fy = 2y + a1 x + a3
            FqElem fx = F.sub(F.mul(a1, y), F.add(F.add(F.mul_u64(x2, 3), F.mul_u64(F.mul(a2, x), 2)), a4));
            FqElem fy = F.add(F.add(F.mul_u64(y, 2), F.mul(a1, x)), a3);
            if (fx.is_zero() && fy.is_zero()) return {x, y};
        }
    }
    throw std::logic_error("singular_point: none found on a singular reduction");
}

}  // namespace

ReductionData tate_local(const Curve<QuarticElt>& E0, const PrimeLocalization& P) {
    Local L{P, P.res_field};
    C E = E0;
    for (const QuarticElt* ai : {&E.a1, &E.a2, &E.a3, &E.a4, &E.a6})
        if (!ai->is_zero() && P.valuation(*ai) < 0)
            throw std::domain_error("tate_local: model is not integral at " + P.label());

    ReductionData out;
    out.prime = P.label();
    const QuarticElt pi = P.uniformizer();
    long rescalings = 0;

    for (int guard = 0; guard < 64; ++guard) {
        long vD = L.v(E.disc());
        if (vD == kValInfinity) throw std::domain_error("tate_local: singular curve");

        // Step 1: good reduction
        if (vD == 0) {
            out.type = Kodaira::I0;
            out.n = 0;
            out.f = 0;
            out.v_disc_min = 0;
            out.minimal_model = E;
            out.rescalings = rescalings;
            return out;
        }
        // Step 2 (multiplicative): v(c4) = 0
        if (L.v(E.c4()) == 0) {
            out.type = Kodaira::In;
            out.n = vD;
            out.f = 1;
            out.v_disc_min = vD;
            out.minimal_model = E;
            out.rescalings = rescalings;
            return out;
        }

        // additive: move the singular point to the origin
        {
            auto [x0, y0] = singular_point(L, E);
            E = E.transformed(QuarticElt(1), L.lift(x0), QuarticElt(0), L.lift(y0));
        }

        // Step 3: type II
        if (L.v(E.a6) < 2) {
            out.type = Kodaira::II;
            out.n = 0;
            out.f = vD;
            break;
        }
        // Step 4: type III
        if (L.v(E.b8()) < 3) {
            out.type = Kodaira::III;
            out.n = 0;
            out.f = vD - 1;
            break;
        }
        // Step 5: type IV
        if (L.v(E.b6()) < 3) {
            out.type = Kodaira::IV;
            out.n = 0;
            out.f = vD - 2;
            break;
        }

        // Step 6 normalization: pi | a1,a2 ; pi^2 | a3,a4 ; pi^3 | a6
        if (L.char2()) {
            // a1 is automatically divisible (b2 = a1^2 mod 2); kill a2 with s
            FqElem s = L.F.sqrt_char2(L.res(E.a2));
            E = E.transformed(QuarticElt(1), QuarticElt(0), L.lift(s), QuarticElt(0));
            // a3 is automatically divisible by pi^2 here; arrange pi^3 | a6
            long va6 = L.v(E.a6);
            if (va6 < 3) {
                QuarticElt w = E.a6 * pi.pow(2).inverse();
                FqElem tau = L.F.sqrt_char2(L.res(w));
                E = E.transformed(QuarticElt(1), QuarticElt(0), QuarticElt(0), pi * L.lift(tau));
            }
        } else {
            Rat half(1, 2);
            QuarticElt s = -(half * E.a1);
            E = E.transformed(QuarticElt(1), QuarticElt(0), s, QuarticElt(0));
            QuarticElt t = -(half * E.a3);
            E = E.transformed(QuarticElt(1), QuarticElt(0), QuarticElt(0), t);
        }
        if (L.v(E.a1) < 1 || L.v(E.a2) < 1 || L.v(E.a3) < 2 || L.v(E.a4) < 2 || L.v(E.a6) < 3)
            throw std::logic_error("tate_local: step-6 normalization failed at " + P.label());

        // Step 7: cubic P(T) = T^3 + a2,1 T^2 + a4,2 T + a6,3
        QuarticElt piinv = pi.inverse();
        FqElem A = L.res(E.a2 * piinv);
        FqElem B = L.res(E.a4 * piinv.pow(2));
        FqElem Cc = L.res(E.a6 * piinv.pow(3));
        CubicRoots roots = cubic_root_structure(L.F, A, B, Cc);
        if (roots.distinct == 3) {
            out.type = Kodaira::I0star;
            out.n = 0;
            out.f = vD - 4;
            break;
        }

        if (roots.distinct == 2) {
            // type In*: shift the double root to T = 0 and run the sub-loop
            E = E.transformed(QuarticElt(1), pi * L.lift(roots.multiple_root), QuarticElt(0), QuarticElt(0));
            long n = 1;
            for (;;) {
                long j = (n + 1) / 2;
                bool odd = (n % 2 == 1);
                bool distinct;
                if (odd) {
                    // Y^2 + a_{3,j+1} Y - a_{6,2j+2}
                    FqElem aa = L.res(E.a3 * piinv.pow(j + 1));
                    FqElem bb = L.res(E.a6 * piinv.pow(2 * j + 2));
                    // disc = aa^2 + 4bb
                    FqElem disc = L.F.add(L.F.mul(aa, aa), L.F.mul_u64(bb, 4));
                    distinct = !disc.is_zero();
                    if (!distinct) {
                        FqElem r = quadratic_double_root_y(L, aa, bb);
                        E = E.transformed(QuarticElt(1), QuarticElt(0), QuarticElt(0), pi.pow(j + 1) * L.lift(r));
                    }
                } else {
                    // a_{2,1} X^2 + a_{4,j+2} X + a_{6,2j+3}
                    FqElem aa = L.res(E.a2 * piinv);
                    FqElem bb = L.res(E.a4 * piinv.pow(j + 2));
                    FqElem cc = L.res(E.a6 * piinv.pow(2 * j + 3));
                    FqElem disc = L.F.sub(L.F.mul(bb, bb), L.F.mul_u64(L.F.mul(aa, cc), 4));
                    distinct = !disc.is_zero();
                    if (!distinct) {
                        FqElem r = quadratic_double_root_x(L, aa, bb, cc);
                        E = E.transformed(QuarticElt(1), pi.pow(j + 1) * L.lift(r), QuarticElt(0), QuarticElt(0));
                    }
                }
                if (distinct) {
                    out.type = Kodaira::Instar;
                    out.n = n;
                    out.f = vD - 4 - n;
                    break;
                }
                ++n;
                if (n > vD) throw std::logic_error("tate_local: In* loop exceeded discriminant bound");
            }
            break;
        }

        // triple root: shift it to T = 0
        E = E.transformed(QuarticElt(1), pi * L.lift(roots.multiple_root), QuarticElt(0), QuarticElt(0));

        // Step 8: Y^2 + a_{3,2} Y - a_{6,4}
        {
            FqElem aa = L.res(E.a3 * piinv.pow(2));
            FqElem bb = L.res(E.a6 * piinv.pow(4));
            FqElem disc = L.F.add(L.F.mul(aa, aa), L.F.mul_u64(bb, 4));
            if (!disc.is_zero()) {
                out.type = Kodaira::IVstar;
                out.n = 0;
                out.f = vD - 6;
                break;
            }
            FqElem r = quadratic_double_root_y(L, aa, bb);
            E = E.transformed(QuarticElt(1), QuarticElt(0), QuarticElt(0), pi.pow(2) * L.lift(r));
        }

        // Step 9: type III*
        if (L.v(E.a4) < 4) {
            out.type = Kodaira::IIIstar;
            out.n = 0;
            out.f = vD - 7;
            break;
        }
        // Step 10: type II*
        if (L.v(E.a6) < 6) {
            out.type = Kodaira::IIstar;
            out.n = 0;
            out.f = vD - 8;
            break;
        }

        // Step 11: not minimal; rescale and restart
        if (L.v(E.a1) < 1 || L.v(E.a2) < 2 || L.v(E.a3) < 3 || L.v(E.a4) < 4 || L.v(E.a6) < 6)
            throw std::logic_error("tate_local: step-11 divisibility failed at " + P.label());
        E = E.transformed(pi, QuarticElt(0), QuarticElt(0), QuarticElt(0));
        ++rescalings;
    }

    if (out.f < 0) throw std::logic_error("tate_local: negative conductor exponent");
    out.v_disc_min = L.v(E.disc());
    out.minimal_model = E;
    out.rescalings = rescalings;
    return out;
}

ConductorProfile conductor_profile(const Int& a, const Int& b, int d, const Int& trial_bound) {
    auto sc = descent::classify_solution(a, b, d, 17 /* any prime; local data only */, false, trial_bound);
    Curve<QuarticElt> E = frey::frey_twist(a, b);

    ConductorProfile prof;
    auto run = [&](const PrimeLocalization& P, const Int& q) {
        ReductionData rd = tate_local(E, P);
        prof.entries.push_back({q, P.label(), rd.f, kodaira_name(rd.type, rd.n)});
        return rd;
    };
    prof.e2 = run(PrimeLocalization::P2(), Int(2)).f;
    prof.e5 = run(PrimeLocalization::P5(), Int(5)).f;

    Int ph = descent::phi(a, b);
    Int cof = ph / int_pow(Int(5), (unsigned long)vp(ph, 5));
    Int tail;
    auto fs = factor_trial(cof, trial_bound, &tail);
    prof.unverified_tail = tail;
    for (auto& [q, e] : fs) {
        if (q >= (Int(1) << 21)) {
            // beyond the residue-field machinery; reported, not verified
            prof.unverified_tail *= int_pow(q, (unsigned long)e);
            continue;
        }
        bool mult = false;
        for (const auto& P : PrimeLocalization::above(q)) {
            ReductionData rd = tate_local(E, P);
            prof.entries.push_back({q, P.label(), rd.f, kodaira_name(rd.type, rd.n)});
            if (rd.f == 1) mult = true;
        }
        if (mult) prof.multiplicative_primes.push_back(q);
    }

    // expected ramified exponents per (equation tag, nu2, d)
    prof.has_expectation = true;
    prof.expected_e5 = (sc.tag == descent::EquationTag::Eq4) ? 2 : 0;
    long nu2 = sc.nu2;
    if (nu2 == descent::kNuInfinity || nu2 >= 3)
        prof.expected_e2 = {4};
    else if (nu2 == 1)
        prof.expected_e2 = {8};
    else if (nu2 == 2)
        prof.expected_e2 = {0};
    else  // nu2 == 0, only for d = 3
        prof.expected_e2 = {8, 6};
    prof.matches_expectation = (prof.e5 == prof.expected_e5) &&
                               (std::find(prof.expected_e2.begin(), prof.expected_e2.end(), prof.e2) !=
                                prof.expected_e2.end());
    return prof;
}

Twist2Result twist2_conductor_at_2(const Int& a, const Int& b) {
    Int s = a + b;
    if (s == 0 || vp(s, 2) != 1)
        throw std::domain_error("twist2_conductor_at_2: requires v2(a+b) = 1");
    Curve<QuarticElt> E = frey::frey_twist(a, b);
    Curve<QuarticElt> E2 = quadratic_twist(E, QuarticElt(2));
    ReductionData rd = tate_local(E2, PrimeLocalization::P2());
    Twist2Result res;
    res.exponent = rd.f;
    res.in_expected_set = (rd.f == 0 || rd.f == 4);
    return res;
}

}  // namespace tate
}  // namespace quintic
