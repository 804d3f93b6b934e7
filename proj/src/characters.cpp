#include "quintic/characters.hpp"

#include <numeric>
#include <stdexcept>

namespace quintic {

namespace {
long gcd_long(long a, long b) { return std::gcd(a, b); }
}  // namespace

DirichletChar::DirichletChar(long modulus, std::vector<GaussianElt> values)
    : modulus_(modulus), vals_(std::move(values)) {
    if (modulus_ < 1 || long(vals_.size()) != modulus_)
        throw std::domain_error("DirichletChar: bad value table");
    for (long n = 0; n < modulus_; ++n) {
        if (gcd_long(n, modulus_) != 1) {
            if (!vals_[n].is_zero()) throw std::domain_error("DirichletChar: nonzero at a non-unit");
        } else if (vals_[n].is_zero()) {
            throw std::domain_error("DirichletChar: zero at a unit");
        }
    }
    // total multiplicativity on units
    for (long a = 0; a < modulus_; ++a) {
        if (gcd_long(a, modulus_) != 1) continue;
        for (long b = a; b < modulus_; ++b) {
            if (gcd_long(b, modulus_) != 1) continue;
            if (vals_[(a * b) % modulus_] != vals_[a] * vals_[b])
                throw std::domain_error("DirichletChar: not multiplicative");
        }
    }
    compute_invariants();
}

void DirichletChar::compute_invariants() {
    // order: least k >= 1 with all unit values^k = 1
    order_ = 1;
    for (int k = 1; k <= 8; ++k) {
        bool triv = true;
        for (long n = 0; n < modulus_ && triv; ++n)
            if (gcd_long(n, modulus_) == 1 && vals_[n].pow(k) != GaussianElt(1)) triv = false;
        if (triv) {
            order_ = k;
            break;
        }
        if (k == 8) throw std::domain_error("DirichletChar: order exceeds 8");
    }
    // conductor: least divisor d of modulus with chi(a) = 1 whenever
    // a = 1 mod d and gcd(a, modulus) = 1
    conductor_ = modulus_;
    for (long d = 1; d <= modulus_; ++d) {
        if (modulus_ % d != 0) continue;
        bool ok = true;
        for (long a = 0; a < modulus_ && ok; ++a) {
            if (gcd_long(a, modulus_) != 1) continue;
            if (a % d == 1 % d && vals_[a] != GaussianElt(1)) ok = false;
        }
        if (ok) {
            conductor_ = d;
            break;
        }
    }
}

GaussianElt DirichletChar::operator()(const Int& n) const {
    Int r = ((n % modulus_) + modulus_) % modulus_;
    return vals_[mpz_get_ui(r.get_mpz_t())];
}

DirichletChar DirichletChar::conj() const {
    std::vector<GaussianElt> v(vals_.size());
    for (size_t i = 0; i < vals_.size(); ++i) v[i] = vals_[i].conj();
    return DirichletChar(modulus_, std::move(v));
}

DirichletChar DirichletChar::pow(int k) const {
    std::vector<GaussianElt> v(vals_.size());
    for (size_t i = 0; i < vals_.size(); ++i)
        v[i] = vals_[i].is_zero() ? GaussianElt() : vals_[i].pow((unsigned long)((k % order_ + order_) % order_));
    return DirichletChar(modulus_, std::move(v));
}

DirichletChar operator*(const DirichletChar& a, const DirichletChar& b) {
    long m = std::lcm(a.modulus_, b.modulus_);
    std::vector<GaussianElt> v(m);
    for (long n = 0; n < m; ++n) {
        if (gcd_long(n, m) != 1) continue;
        v[n] = a(Int(n)) * b(Int(n));
    }
    return DirichletChar(m, std::move(v));
}

bool DirichletChar::is_trivial() const { return order_ == 1; }

namespace {

DirichletChar build_eps2() {
    std::vector<GaussianElt> v(4);
    v[1] = GaussianElt(1);
    v[3] = GaussianElt(-1);
    return DirichletChar(4, std::move(v));
}

DirichletChar build_eps5() {
    // (Z/5)* is generated by 2; eps5(2) = i
    std::vector<GaussianElt> v(5);
    GaussianElt i = GaussianElt::unit_i();
    long g = 2;
    long x = 1;
    GaussianElt val(1);
    for (int k = 0; k < 4; ++k) {
        v[x] = val;
        x = (x * g) % 5;
        val = val * i;
    }
    return DirichletChar(5, std::move(v));
}

DirichletChar build_chi8() {
    std::vector<GaussianElt> v(8);
    v[1] = GaussianElt(1);
    v[7] = GaussianElt(1);
    v[3] = GaussianElt(-1);
    v[5] = GaussianElt(-1);
    return DirichletChar(8, std::move(v));
}

}  // namespace

const DirichletChar& epsilon2() {
    static const DirichletChar c = build_eps2();
    return c;
}

const DirichletChar& epsilon5() {
    static const DirichletChar c = build_eps5();
    return c;
}

const DirichletChar& epsilon() {
    static const DirichletChar c = epsilon2() * epsilon5();
    return c;
}

const DirichletChar& epsilon_bar() {
    static const DirichletChar c = epsilon().conj();
    return c;
}

const DirichletChar& chi8() {
    static const DirichletChar c = build_chi8();
    return c;
}

}  // namespace quintic
