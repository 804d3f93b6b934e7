#pragma once

#include "quintic/quad_field.hpp"
#include "quintic/rational.hpp"

#include <array>
#include <ostream>

namespace quintic {

// Element of K = Q(theta), theta a root of x^4 - 5x^2 + 5, in the power basis
// {1, theta, theta^2, theta^3}.  sqrt5 embeds as 2*theta^2 - 5.
struct QuarticElt {
    std::array<Rat, 4> c{};

    QuarticElt() = default;
    explicit QuarticElt(long n) { c[0] = n; }
    explicit QuarticElt(const Rat& r) { c[0] = r; }
    explicit QuarticElt(const Int& n) { c[0] = Rat(n); }
    QuarticElt(Rat c0, Rat c1, Rat c2, Rat c3) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static QuarticElt theta() { return {Rat(0), Rat(1), Rat(0), Rat(0)}; }
    static QuarticElt from_quad(const QuadElt& z) {
        // x + y*sqrt5 = (x - 5y) + 2y*theta^2
        return {z.x - 5 * z.y, Rat(0), 2 * z.y, Rat(0)};
    }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
    // true when all coordinates are integers, i.e. the element lies in Z[theta] = O_K
    bool is_integral() const {
        for (const auto& x : c)
            if (x.get_den() != 1) return false;
        return true;
    }

    friend QuarticElt operator+(const QuarticElt& a, const QuarticElt& b) {
        QuarticElt r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend QuarticElt operator-(const QuarticElt& a, const QuarticElt& b) {
        QuarticElt r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend QuarticElt operator-(const QuarticElt& a) {
        QuarticElt r;
        for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend QuarticElt operator*(const QuarticElt& a, const QuarticElt& b) {
        std::array<Rat, 7> t{};
        for (int i = 0; i < 4; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < 4; ++j) t[i + j] += a.c[i] * b.c[j];
        }
        // theta^4 = 5 theta^2 - 5, theta^5 = 5 theta^3 - 5 theta,
        // theta^6 = 20 theta^2 - 25
        t[2] += 20 * t[6];
        t[0] -= 25 * t[6];
        t[3] += 5 * t[5];
        t[1] -= 5 * t[5];
        t[2] += 5 * t[4];
        t[0] -= 5 * t[4];
        return {t[0], t[1], t[2], t[3]};
    }
    friend QuarticElt operator*(const Rat& s, const QuarticElt& a) {
        QuarticElt r;
        for (int i = 0; i < 4; ++i) r.c[i] = s * a.c[i];
        return r;
    }
    friend bool operator==(const QuarticElt& a, const QuarticElt& b) { return a.c == b.c; }
    friend bool operator!=(const QuarticElt& a, const QuarticElt& b) { return !(a == b); }

    QuarticElt pow(unsigned long e) const {
        QuarticElt r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    // Product of all four Galois conjugates; computed as det of the
    // multiplication-by-z matrix on the power basis.
    Rat norm() const {
        std::array<std::array<Rat, 4>, 4> m;
        QuarticElt p = *this;
        QuarticElt th = theta();
        for (int j = 0; j < 4; ++j) {
            for (int i = 0; i < 4; ++i) m[i][j] = p.c[i];
            if (j < 3) p = p * th;
        }
        // fraction-based Gaussian elimination
        Rat det(1);
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int r = col; r < 4; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Rat(0);
            if (piv != col) {
                std::swap(m[piv], m[col]);
                det = -det;
            }
            det *= m[col][col];
            Rat inv = 1 / m[col][col];
            for (int r = col + 1; r < 4; ++r) {
                if (m[r][col] == 0) continue;
                Rat f = m[r][col] * inv;
                for (int cc = col; cc < 4; ++cc) m[r][cc] -= f * m[col][cc];
            }
        }
        return det;
    }

    QuarticElt inverse() const;
    friend QuarticElt operator/(const QuarticElt& a, const QuarticElt& b) { return a * b.inverse(); }

    // lcm of coordinate denominators
    Int denominator() const {
        return rat_den_lcm({c[0], c[1], c[2], c[3]});
    }

    friend std::ostream& operator<<(std::ostream& os, const QuarticElt& z) {
        return os << "(" << z.c[0] << " + " << z.c[1] << "*th + " << z.c[2] << "*th^2 + " << z.c[3] << "*th^3)";
    }
};

namespace detail {
// Extended gcd in Q[x] against the fixed modulus x^4 - 5x^2 + 5; returns the
// inverse of a (degree <= 3, coefficients a.c) modulo it.
inline QuarticElt quartic_invert(const QuarticElt& a) {
    if (a.is_zero()) throw std::domain_error("QuarticElt: division by zero");
    using Pol = std::vector<Rat>;
    auto deg = [](const Pol& p) {
        int d = int(p.size()) - 1;
        while (d >= 0 && p[d] == 0) --d;
        return d;
    };
    Pol r0 = {Rat(5), Rat(0), Rat(-5), Rat(0), Rat(1)};
    Pol r1 = {a.c[0], a.c[1], a.c[2], a.c[3]};
    Pol s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients of a in the Bezout identity
    while (deg(r1) > 0) {
        // divide r0 by r1
        Pol q(std::max<size_t>(1, r0.size()), Rat(0));
        Pol rem = r0;
        int d1 = deg(r1);
        Rat lead = r1[d1];
        for (int d0 = deg(rem); d0 >= d1; d0 = deg(rem)) {
            Rat f = rem[d0] / lead;
            q[d0 - d1] += f;
            for (int i = 0; i <= d1; ++i) rem[d0 - d1 + i] -= f * r1[i];
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Pol s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (deg(r1) != 0) throw std::domain_error("QuarticElt: not invertible (modulus not coprime)");
    Rat inv = 1 / r1[deg(r1)];
    QuarticElt out;
    for (int i = 0; i < 4 && i < int(s1.size()); ++i) out.c[i] = s1[i] * inv;
    return out;
}
}  // namespace detail

inline QuarticElt QuarticElt::inverse() const { return detail::quartic_invert(*this); }

// gamma = 2 theta^2 - theta - 5, the twisting element of the Frey curve.
inline QuarticElt gamma_value() { return {Rat(-5), Rat(-1), Rat(2), Rat(0)}; }

}  // namespace quintic
