#pragma once

#include "quintic/oct_field.hpp"
#include "quintic/quartic_field.hpp"

#include <array>
#include <vector>

namespace quintic {

// Field automorphism of K determined by the image of theta (one of the four
// roots of x^4 - 5x^2 + 5 inside K).
struct KAut {
    QuarticElt t1, t2, t3;  // images of theta, theta^2, theta^3

    KAut() : t1(QuarticElt::theta()) { init(); }
    explicit KAut(const QuarticElt& theta_image) : t1(theta_image) { init(); }

    void init() {
        t2 = t1 * t1;
        t3 = t2 * t1;
    }

    QuarticElt operator()(const QuarticElt& z) const {
        return QuarticElt(z.c[0]) + z.c[1] * t1 + z.c[2] * t2 + z.c[3] * t3;
    }

    KAut compose(const KAut& other) const {  // this after other
        return KAut((*this)(other.t1));
    }

    bool is_identity() const { return t1 == QuarticElt::theta(); }
    friend bool operator==(const KAut& a, const KAut& b) { return a.t1 == b.t1; }

    int order() const {
        KAut a = *this;
        int n = 1;
        while (!a.is_identity()) {
            a = compose(a);
            if (++n > 8) throw std::logic_error("KAut: not an automorphism");
        }
        return n;
    }

    // 4x4 rational matrix on the power basis (columns = images of 1,th,th^2,th^3)
    std::array<std::array<Rat, 4>, 4> matrix() const {
        std::array<std::array<Rat, 4>, 4> m{};
        m[0][0] = 1;
        for (int i = 0; i < 4; ++i) {
            m[i][1] = t1.c[i];
            m[i][2] = t2.c[i];
            m[i][3] = t3.c[i];
        }
        return m;
    }
};

// Gal(K/Q), cyclic of order 4 generated by s : theta -> theta^3 - 3 theta.
// Order: id, s, s^2, s^3.
inline const std::array<KAut, 4>& galois_group_K() {
    static const std::array<KAut, 4> g = [] {
        KAut id;
        KAut s(QuarticElt{Rat(0), Rat(-3), Rat(0), Rat(1)});
        return std::array<KAut, 4>{id, s, s.compose(s), s.compose(s).compose(s)};
    }();
    return g;
}

// Automorphism of K(sqrt(-2)): a K-automorphism together with the sign on sqrt(-2).
struct OctAut {
    KAut k;
    int sign = 1;  // image of sqrt(-2) is sign * sqrt(-2)

    OctElt operator()(const OctElt& z) const {
        return {k(z.u), Rat(sign) * k(z.v)};
    }

    OctAut compose(const OctAut& o) const { return {k.compose(o.k), sign * o.sign}; }

    bool is_identity() const { return k.is_identity() && sign == 1; }
    friend bool operator==(const OctAut& a, const OctAut& b) { return a.k == b.k && a.sign == b.sign; }

    int order() const {
        OctAut a = *this;
        int n = 1;
        while (!a.is_identity()) {
            a = compose(a);
            if (++n > 16) throw std::logic_error("OctAut: not an automorphism");
        }
        return n;
    }
};

// sigma0: theta -> theta^3 - 3 theta (so sqrt5 -> -sqrt5), sqrt(-2) -> -sqrt(-2).
// The sign of sigma0(theta) is fixed by the embedding-problem verification;
// sigma0_candidate(false) is the rejected alternative.
inline OctAut sigma0_candidate(bool positive_sign) {
    QuarticElt img{Rat(0), Rat(-3), Rat(0), Rat(1)};
    if (!positive_sign) img = -img;
    return {KAut(img), -1};
}
inline OctAut sigma0() { return sigma0_candidate(true); }

// sigma1: fixes K, negates sqrt(-2).
inline OctAut sigma1() { return {KAut(), -1}; }

// Gal(K(sqrt(-2))/Q) = C4 x C2, listed as sigma0^j then sigma1*sigma0^j.
inline const std::array<OctAut, 8>& galois_group_K_sqrtm2() {
    static const std::array<OctAut, 8> g = [] {
        std::array<OctAut, 8> out;
        OctAut s0 = sigma0(), s1 = sigma1();
        OctAut cur{KAut(), 1};
        for (int j = 0; j < 4; ++j) {
            out[j] = cur;
            out[4 + j] = s1.compose(cur);
            cur = s0.compose(cur);
        }
        return out;
    }();
    return g;
}

// N_s(z) = prod_{j=0}^{ord(s)-1} s^j(z)
inline OctElt relative_norm(const OctElt& z, const OctAut& s) {
    int ord = s.order();
    OctElt r(1), w = z;
    for (int j = 0; j < ord; ++j) {
        r = r * w;
        w = s(w);
    }
    return r;
}

// norm_to_Q on K via the Galois conjugate product (cross-checks the
// determinant-based QuarticElt::norm in tests).
inline Rat norm_via_conjugates(const QuarticElt& z) {
    QuarticElt r(1);
    for (const auto& g : galois_group_K()) r = r * g(z);
    if (!r.is_rational()) throw std::logic_error("norm_via_conjugates: result not rational");
    return r.c[0];
}

}  // namespace quintic
