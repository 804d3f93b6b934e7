#pragma once

#include "quintic/rational.hpp"

#include <ostream>

namespace quintic {

// Element re + im*i of Q(i).
struct GaussianElt {
    Rat re, im;

    GaussianElt() : re(0), im(0) {}
    GaussianElt(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianElt(long n) : re(n), im(0) {}
    explicit GaussianElt(const Rat& r) : re(r), im(0) {}

    static GaussianElt unit_i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    friend GaussianElt operator+(const GaussianElt& a, const GaussianElt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussianElt operator-(const GaussianElt& a, const GaussianElt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussianElt operator-(const GaussianElt& a) { return {-a.re, -a.im}; }
    friend GaussianElt operator*(const GaussianElt& a, const GaussianElt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianElt operator*(const Rat& s, const GaussianElt& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const GaussianElt& a, const GaussianElt& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussianElt& a, const GaussianElt& b) { return !(a == b); }

    GaussianElt conj() const { return {re, -im}; }

    // re^2 + im^2
    Rat norm() const { return re * re + im * im; }

    GaussianElt inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("GaussianElt: division by zero");
        return {re / n, -im / n};
    }
    friend GaussianElt operator/(const GaussianElt& a, const GaussianElt& b) { return a * b.inverse(); }

    GaussianElt pow(unsigned long e) const {
        GaussianElt r{Rat(1), Rat(0)}, b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    // Multiplicative order as a root of unity (1, 2 or 4); 0 if not one.
    int root_of_unity_order() const {
        if (*this == GaussianElt(1)) return 1;
        if (*this == GaussianElt(-1)) return 2;
        if (im != 0 && re == 0 && (im == 1 || im == -1)) return 4;
        return 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianElt& z) {
        return os << "(" << z.re << " + " << z.im << "*i)";
    }
};

}  // namespace quintic
