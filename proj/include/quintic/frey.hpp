#pragma once

#include "quintic/curve.hpp"
#include "quintic/descent.hpp"
#include "quintic/oct_field.hpp"
#include "quintic/polynomial.hpp"

#include <string>

namespace quintic {
namespace frey {

// E_{(a,b)} : y^2 = x^3 + 2(a+b) x^2 - omegabar * phi1(a,b) x  over Q(sqrt5)
Curve<QuadElt> frey_curve(const Int& a, const Int& b);

// Galois conjugate curve: y^2 = x^3 + 2(a+b) x^2 - omega * phi2(a,b) x
Curve<QuadElt> frey_conjugate(const Int& a, const Int& b);

// E_gamma : y^2 = x^3 + 2 gamma (a+b) x^2 - gamma^2 omegabar phi1(a,b) x over K
Curve<QuarticElt> frey_twist(const Int& a, const Int& b);

struct DiscriminantReport {
    bool ok = false;
    QuadElt lhs, rhs;  // Delta(E) and 2^6 omegabar phi phi1
};

// Delta(E) = 2^6 * omegabar * phi * phi1, exactly.
DiscriminantReport discriminant_check(const Int& a, const Int& b);

struct IsogenyReport {
    bool mu_ok = false;        // mu : sigmaE -> E satisfies E's equation
    bool mu_hat_ok = false;    // dual direction
    bool degree2_ok = false;   // x-map has degree 2 with kernel {O, (0,0)}
    bool dual_is_pm2_ok = false;  // x-map of mu o mu_hat equals the duplication x-map
    std::string residual;      // nonzero residual polynomial on failure
};

// Verifies the explicit 2-isogeny mu : sigmaE -> E,
//   (x,y) |-> (-y^2/2x^2, (sqrt(-2)/4)(y/x^2)(omega phi2 + x^2)),
// and its dual, as polynomial identities modulo the source curve equation.
IsogenyReport verify_isogeny(const Int& a, const Int& b);

}  // namespace frey
}  // namespace quintic
