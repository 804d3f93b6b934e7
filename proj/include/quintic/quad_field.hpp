#pragma once

#include "quintic/rational.hpp"

#include <ostream>

namespace quintic {

// Element x + y*sqrt(5) of Q(sqrt5).
struct QuadElt {
    Rat x, y;

    QuadElt() : x(0), y(0) {}
    QuadElt(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit QuadElt(long n) : x(n), y(0) {}
    explicit QuadElt(const Rat& r) : x(r), y(0) {}
    explicit QuadElt(const Int& n) : x(Rat(n)), y(0) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }

    friend QuadElt operator+(const QuadElt& a, const QuadElt& b) { return {a.x + b.x, a.y + b.y}; }
    friend QuadElt operator-(const QuadElt& a, const QuadElt& b) { return {a.x - b.x, a.y - b.y}; }
    friend QuadElt operator-(const QuadElt& a) { return {-a.x, -a.y}; }
    friend QuadElt operator*(const QuadElt& a, const QuadElt& b) {
        return {a.x * b.x + 5 * a.y * b.y, a.x * b.y + a.y * b.x};
    }
    friend QuadElt operator*(const Rat& s, const QuadElt& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const QuadElt& a, const QuadElt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const QuadElt& a, const QuadElt& b) { return !(a == b); }

    QuadElt conj() const { return {x, -y}; }

    // x^2 - 5 y^2
    Rat norm() const { return x * x - 5 * y * y; }

    QuadElt inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("QuadElt: division by zero");
        return {x / n, -y / n};
    }
    friend QuadElt operator/(const QuadElt& a, const QuadElt& b) { return a * b.inverse(); }

    friend std::ostream& operator<<(std::ostream& os, const QuadElt& z) {
        return os << "(" << z.x << " + " << z.y << "*sqrt5)";
    }
};

// Nontrivial element of Gal(Q(sqrt5)/Q).
inline QuadElt conj_sqrt5(const QuadElt& z) { return z.conj(); }

// omega = (-1+sqrt5)/2, the fundamental quantities of the quintic factorization.
inline QuadElt omega() { return {Rat(-1, 2), Rat(1, 2)}; }
inline QuadElt omega_bar() { return {Rat(-1, 2), Rat(-1, 2)}; }
inline QuadElt sqrt5() { return {Rat(0), Rat(1)}; }

}  // namespace quintic
