#pragma once

#include "quintic/quad_field.hpp"
#include "quintic/quartic_field.hpp"

#include <stdexcept>

namespace quintic {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a
// field type T, with the standard derived quantities.
template <class T>
struct Curve {
    T a1{0}, a2{0}, a3{0}, a4{0}, a6{0};

    Curve() = default;
    Curve(T a1_, T a2_, T a3_, T a4_, T a6_)
        : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {}

    // y^2 = x^3 + A x^2 + B x
    static Curve from_AB(const T& A, const T& B) { return Curve(T(0), A, T(0), B, T(0)); }

    T b2() const { return a1 * a1 + Rat(4) * a2; }
    T b4() const { return Rat(2) * a4 + a1 * a3; }
    T b6() const { return a3 * a3 + Rat(4) * a6; }
    T b8() const {
        return a1 * a1 * a6 + Rat(4) * (a2 * a6) - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4;
    }
    T c4() const { return b2() * b2() - Rat(24) * b4(); }
    T c6() const { return -(b2() * b2() * b2()) + Rat(36) * (b2() * b4()) - Rat(216) * b6(); }
    T disc() const {
        T B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - Rat(8) * (B4 * B4 * B4) - Rat(27) * (B6 * B6) + Rat(9) * (B2 * B4 * B6);
    }
    T j_invariant() const {
        T d = disc();
        if (d == T(0)) throw std::domain_error("Curve: singular model has no j-invariant");
        T C4 = c4();
        return C4 * C4 * C4 / d;
    }

    // (x,y) -> (u^2 x + r, u^3 y + s u^2 x + t)
    Curve transformed(const T& u, const T& r, const T& s, const T& t) const {
        T u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
        T A1 = (a1 + Rat(2) * s) / u;
        T A2 = (a2 - s * a1 + Rat(3) * r - s * s) / u2;
        T A3 = (a3 + r * a1 + Rat(2) * t) / u3;
        T A4 = (a4 - s * a3 + Rat(2) * (r * a2) - (t + r * s) * a1 + Rat(3) * (r * r) - Rat(2) * (s * t)) / u4;
        T A6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
        return Curve(A1, A2, A3, A4, A6);
    }
};

// Quadratic twist by delta of a curve with a1 = a3 = 0.
template <class T>
Curve<T> quadratic_twist(const Curve<T>& E, const T& delta) {
    if (!(E.a1 == T(0)) || !(E.a3 == T(0)))
        throw std::domain_error("quadratic_twist: model must have a1 = a3 = 0");
    return Curve<T>(T(0), delta * E.a2, T(0), delta * delta * E.a4, delta * delta * delta * E.a6);
}

inline Curve<QuarticElt> embed_in_K(const Curve<QuadElt>& E) {
    return {QuarticElt::from_quad(E.a1), QuarticElt::from_quad(E.a2), QuarticElt::from_quad(E.a3),
            QuarticElt::from_quad(E.a4), QuarticElt::from_quad(E.a6)};
}

}  // namespace quintic
