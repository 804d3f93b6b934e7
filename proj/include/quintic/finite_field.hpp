#pragma once

#include "quintic/rational.hpp"

#include <array>
#include <cstdint>
#include <ostream>

namespace quintic {

using u64 = std::uint64_t;

class Fq;

// Element of F_{p^f} as a polynomial of degree < f over F_p; the field context
// is carried by pointer (all contexts are owned by PrimeLocalization objects
// or by the Fq cache and outlive the elements).
struct FqElem {
    const Fq* F = nullptr;
    std::array<u64, 4> c{};

    bool is_zero() const {
        return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
    }
    friend bool operator==(const FqElem& a, const FqElem& b) { return a.c == b.c; }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
};

// F_p[x]/(g), g monic irreducible of degree f <= 4, p < 2^21 so products of
// coefficient pairs cannot overflow even when four of them accumulate.
class Fq {
  public:
    u64 p = 0;
    int f = 1;
    std::array<u64, 4> mod{};  // g = x^f + mod[f-1] x^{f-1} + ... + mod[0]

    Fq() = default;
    Fq(u64 p_, int f_, std::array<u64, 4> mod_) : p(p_), f(f_), mod(mod_) {
        if (p >= (u64(1) << 21)) throw std::domain_error("Fq: p too large for enumeration kernels");
    }

    Int size() const { return int_pow(Int((unsigned long)p), (unsigned long)f); }

    FqElem zero() const { return {this, {}}; }
    FqElem one() const { return from_u64(1); }
    FqElem from_u64(u64 n) const {
        FqElem e{this, {}};
        e.c[0] = n % p;
        return e;
    }
    FqElem from_int(const Int& n) const {
        Int r = ((n % Int((unsigned long)p)) + Int((unsigned long)p)) % Int((unsigned long)p);
        return from_u64(mpz_get_ui(r.get_mpz_t()));
    }
    FqElem gen() const {  // class of x (= 0 when f == 1)
        FqElem e{this, {}};
        if (f > 1) e.c[1] = 1;
        return e;
    }

    FqElem add(const FqElem& a, const FqElem& b) const {
        FqElem r{this, {}};
        for (int i = 0; i < f; ++i) r.c[i] = (a.c[i] + b.c[i]) % p;
        return r;
    }
    FqElem sub(const FqElem& a, const FqElem& b) const {
        FqElem r{this, {}};
        for (int i = 0; i < f; ++i) r.c[i] = (a.c[i] + p - b.c[i]) % p;
        return r;
    }
    FqElem neg(const FqElem& a) const { return sub(zero(), a); }

    FqElem mul(const FqElem& a, const FqElem& b) const {
        std::array<u64, 7> t{};
        for (int i = 0; i < f; ++i) {
            if (!a.c[i]) continue;
            for (int j = 0; j < f; ++j) t[i + j] = (t[i + j] + a.c[i] * b.c[j]) % p;
        }
        // reduce x^k for k >= f using x^f = -mod
        for (int k = 2 * f - 2; k >= f; --k) {
            if (!t[k]) continue;
            u64 v = t[k];
            t[k] = 0;
            for (int i = 0; i < f; ++i) t[k - f + i] = (t[k - f + i] + v * (p - mod[i])) % p;
        }
        FqElem r{this, {}};
        for (int i = 0; i < f; ++i) r.c[i] = t[i];
        return r;
    }

    FqElem mul_u64(const FqElem& a, u64 s) const {
        FqElem r{this, {}};
        s %= p;
        for (int i = 0; i < f; ++i) r.c[i] = a.c[i] * s % p;
        return r;
    }

    FqElem pow(FqElem a, Int e) const {
        FqElem r = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FqElem inv(const FqElem& a) const {
        if (a.is_zero()) throw std::domain_error("Fq: division by zero");
        return pow(a, size() - 2);
    }

    // index <-> element, for exhaustive scans
    FqElem elem_at(u64 idx) const {
        FqElem e{this, {}};
        for (int i = 0; i < f; ++i) {
            e.c[i] = idx % p;
            idx /= p;
        }
        return e;
    }
    u64 num_elems() const {
        u64 n = 1;
        for (int i = 0; i < f; ++i) n *= p;
        return n;
    }

    bool is_square(const FqElem& a) const {  // odd characteristic
        if (a.is_zero()) return true;
        return pow(a, (size() - 1) / 2) == one();
    }
    FqElem sqrt_char2(const FqElem& a) const { return pow(a, size() / 2); }
    FqElem cbrt_char3(const FqElem& a) const { return pow(a, size() / 3); }

    friend bool operator==(const Fq& a, const Fq& b) { return a.p == b.p && a.f == b.f && a.mod == b.mod; }
};

inline std::ostream& operator<<(std::ostream& os, const FqElem& e) {
    os << "[";
    if (e.F)
        for (int i = 0; i < e.F->f; ++i) os << e.c[i] << (i + 1 < e.F->f ? "," : "");
    return os << "]";
}

}  // namespace quintic
