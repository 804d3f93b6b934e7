#pragma once

#include "quintic/quartic_field.hpp"

#include <ostream>

namespace quintic {

// Element u + v*sqrt(-2) of K(sqrt(-2)), the degree-8 field of complete
// definition containing L = Q(sqrt5, sqrt(-2)).
struct OctElt {
    QuarticElt u, v;

    OctElt() = default;
    OctElt(QuarticElt u_, QuarticElt v_) : u(std::move(u_)), v(std::move(v_)) {}
    explicit OctElt(long n) : u(n) {}
    explicit OctElt(const QuarticElt& k) : u(k) {}
    explicit OctElt(const Rat& r) : u(r) {}

    static OctElt sqrt_m2() { return {QuarticElt(0), QuarticElt(1)}; }

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    bool in_K() const { return v.is_zero(); }
    bool is_rational() const { return v.is_zero() && u.is_rational(); }

    friend OctElt operator+(const OctElt& a, const OctElt& b) { return {a.u + b.u, a.v + b.v}; }
    friend OctElt operator-(const OctElt& a, const OctElt& b) { return {a.u - b.u, a.v - b.v}; }
    friend OctElt operator-(const OctElt& a) { return {-a.u, -a.v}; }
    friend OctElt operator*(const OctElt& a, const OctElt& b) {
        // (u1 + v1 s)(u2 + v2 s), s^2 = -2
        return {a.u * b.u - Rat(2) * (a.v * b.v), a.u * b.v + a.v * b.u};
    }
    friend OctElt operator*(const Rat& s, const OctElt& a) { return {s * a.u, s * a.v}; }
    friend bool operator==(const OctElt& a, const OctElt& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const OctElt& a, const OctElt& b) { return !(a == b); }

    OctElt conj_sqrt_m2() const { return {u, -v}; }

    // relative norm down to K: u^2 + 2 v^2
    QuarticElt norm_to_K() const { return u * u + Rat(2) * (v * v); }

    Rat norm() const { return norm_to_K().norm(); }

    OctElt inverse() const {
        QuarticElt n = norm_to_K();
        if (n.is_zero()) throw std::domain_error("OctElt: division by zero");
        QuarticElt ni = n.inverse();
        return {u * ni, -v * ni};
    }
    friend OctElt operator/(const OctElt& a, const OctElt& b) { return a * b.inverse(); }

    friend std::ostream& operator<<(std::ostream& os, const OctElt& z) {
        return os << "[" << z.u << " + " << z.v << "*sqrt(-2)]";
    }
};

}  // namespace quintic
