#pragma once

#include "quintic/rational.hpp"

#include <vector>

namespace quintic {

// Dense univariate polynomial over a field type T (needs +,-,*,==, T(long)).
template <class T>
struct Poly {
    std::vector<T> c;  // c[i] * x^i

    Poly() = default;
    explicit Poly(T a0) : c{std::move(a0)} { trim(); }
    explicit Poly(std::vector<T> cs) : c(std::move(cs)) { trim(); }

    static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }
    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    T coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : T(0); }
    const T& lead() const { return c.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) { return Poly(std::vector<T>{}) - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == T(0)) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> r = a.c;
        for (auto& x : r) x = s * x;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    T eval(const T& x) const {
        T r(0);
        for (int i = degree(); i >= 0; --i) r = r * x + c[i];
        return r;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<T> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = T(long(i)) * c[i];
        return Poly(std::move(r));
    }

    // division with remainder; divisor must have invertible leading coefficient
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        q = Poly();
        r = a;
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        T invl = T(1) / b.lead();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            T f = r.lead() * invl;
            std::vector<T> qc(d + 1, T(0));
            qc[d] = f;
            Poly t(std::move(qc));
            q = q + t;
            r = r - t * b;
        }
    }

    Poly pow(unsigned long e) const {
        Poly r(T(1)), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }
};

// Resultant of two rational polynomials, via the Euclidean remainder sequence.
inline Rat resultant(Poly<Rat> a, Poly<Rat> b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Rat res(1);
    while (b.degree() > 0) {
        Poly<Rat> q, r;
        Poly<Rat>::divmod(a, b, q, r);
        if (r.is_zero()) return Rat(0);
        int da = a.degree(), db = b.degree(), dr = r.degree();
        // res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b,r)
        Rat lc = b.lead();
        Rat scale(1);
        for (int i = 0; i < da - dr; ++i) scale *= lc;
        if ((da % 2) && (db % 2)) scale = -scale;
        res *= scale;
        a = b;
        b = r;
    }
    // b is a nonzero constant
    Rat lc = b.c[0];
    for (int i = 0; i < a.degree(); ++i) res *= lc;
    return res;
}

}  // namespace quintic
