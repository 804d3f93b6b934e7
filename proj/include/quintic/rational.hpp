#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quintic {

using Int = mpz_class;
using Rat = mpq_class;

// Valuation marker for zero elements.
inline constexpr long kValInfinity = LONG_MAX;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// p-adic valuation of a nonzero integer.
inline long vp(const Int& n, const Int& p) {
    if (n == 0) return kValInfinity;
    Int m = abs(n), q, r;
    long v = 0;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        m = q;
        ++v;
    }
}

inline long vp(const Rat& x, const Int& p) {
    if (x == 0) return kValInfinity;
    return vp(Int(x.get_num()), p) - vp(Int(x.get_den()), p);
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Trial-division factorization up to `bound`. Any remaining cofactor that is a
// probable prime is included as a factor; otherwise it is returned in `tail`.
inline std::vector<std::pair<Int, int>> factor_trial(Int n, const Int& bound, Int* tail = nullptr) {
    std::vector<std::pair<Int, int>> out;
    if (tail) *tail = 1;
    n = abs(n);
    if (n <= 1) return out;
    Int p = 2;
    while (p * p <= n && p <= bound) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    if (n > 1) {
        if (is_probable_prime(n))
            out.emplace_back(n, 1);
        else if (tail)
            *tail = n;
        else
            throw std::runtime_error("factor_trial: unfactored composite tail " + n.get_str());
    }
    return out;
}

// Product of the distinct prime factors found by trial division.
// `complete` is cleared when an unfactored composite tail remains.
inline Int radical(const Int& n, const Int& bound, bool* complete = nullptr) {
    Int tail;
    auto fs = factor_trial(n, bound, &tail);
    if (complete) *complete = (tail == 1);
    Int r = 1;
    for (auto& [p, e] : fs) r *= p;
    return r;
}

// n == z^p for some integer z?  Returns z if so.
inline std::optional<Int> perfect_pth_root(const Int& n, unsigned long p) {
    if (n == 0) return Int(0);
    if (n < 0 && p % 2 == 0) return std::nullopt;
    Int root;
    int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), p);
    if (exact) return root;
    return std::nullopt;
}

inline Int mod_pow(Int base, Int e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int mod_inv(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::runtime_error("mod_inv: not invertible");
    return r;
}

// Tonelli-Shanks square root mod an odd prime. Returns nullopt for non-residues.
inline std::optional<Int> sqrt_mod(const Int& a0, const Int& p) {
    Int a = ((a0 % p) + p) % p;
    if (a == 0) return Int(0);
    if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    Int m(s), c = mod_pow(z, q, p), t = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < mpz_get_ui(m.get_mpz_t()); ++j) b = b * b % p;
        m = Int(i);
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int rat_den_lcm(const std::vector<Rat>& xs) {
    Int l = 1;
    for (const auto& x : xs) {
        Int d(x.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

}  // namespace quintic
