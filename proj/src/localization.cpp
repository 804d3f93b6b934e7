#include "quintic/localization.hpp"

#include <stdexcept>

namespace quintic {

namespace {

// split z into integral y and positive integer denominator d with z = y/d
void split_denominator(const QuarticElt& z, QuarticElt& y, Int& d) {
    d = z.denominator();
    y = Rat(d) * z;
    if (!y.is_integral()) throw std::logic_error("split_denominator: clearing failed");
}

u64 to_u64(const Int& n) { return mpz_get_ui(n.get_mpz_t()); }

}  // namespace

const PrimeLocalization& PrimeLocalization::P2() {
    static const PrimeLocalization loc = [] {
        PrimeLocalization l;
        l.kind = PrimeKind::P2;
        l.p = 2;
        l.e = 2;
        l.f = 2;
        l.res_field = Fq(2, 2, {1, 1, 0, 0});  // t^2 + t + 1
        l.pi_ = QuarticElt{Rat(-1), Rat(-1), Rat(1), Rat(0)};  // theta^2 - theta - 1
        l.pi_inv_ = l.pi_.inverse();
        // pi^2 = 2 * (-theta^3 + 2 theta^2 + theta - 2)
        l.p_unit_ = QuarticElt{Rat(-2), Rat(1), Rat(2), Rat(-1)};
        l.label_ = "P2";
        if (l.pi_ * l.pi_ != Rat(2) * l.p_unit_) throw std::logic_error("P2 setup");
        return l;
    }();
    return loc;
}

const PrimeLocalization& PrimeLocalization::P5() {
    static const PrimeLocalization loc = [] {
        PrimeLocalization l;
        l.kind = PrimeKind::P5;
        l.p = 5;
        l.e = 4;
        l.f = 1;
        l.res_field = Fq(5, 1, {0, 0, 0, 0});
        l.pi_ = QuarticElt::theta();
        l.pi_inv_ = l.pi_.inverse();
        // theta^4 = 5 * (theta^2 - 1)
        l.p_unit_ = QuarticElt{Rat(-1), Rat(0), Rat(1), Rat(0)};
        l.label_ = "P5";
        if (l.pi_.pow(4) != Rat(5) * l.p_unit_) throw std::logic_error("P5 setup");
        return l;
    }();
    return loc;
}

const PrimeLocalization& PrimeLocalization::P3() {
    static const PrimeLocalization loc = [] {
        auto v = above(3);
        if (v.size() != 1 || v[0].f != 4) throw std::logic_error("P3 setup: 3 should be inert");
        PrimeLocalization l = v[0];
        l.label_ = "P3";
        return l;
    }();
    return loc;
}

std::vector<PrimeLocalization> PrimeLocalization::above(const Int& q) {
    if (q == 2 || q == 5) throw std::domain_error("above: use the ramified localizations for 2 and 5");
    if (!is_probable_prime(q)) throw std::domain_error("above: not a prime");
    if (q >= (Int(1) << 21)) throw std::domain_error("above: prime too large");
    std::vector<PrimeLocalization> out;
    auto s = sqrt_mod(5, q);
    if (!s) {
        // 5 is a non-residue: x^4 - 5x^2 + 5 stays irreducible, q inert
        PrimeLocalization l;
        l.p = q;
        l.e = 1;
        l.f = 4;
        l.inert_ = true;
        u64 qq = to_u64(q);
        l.res_field = Fq(qq, 4, {5 % qq, 0, (qq - 5 % qq) % qq, 0});
        l.pi_ = QuarticElt(q);
        l.pi_inv_ = l.pi_.inverse();
        l.label_ = "P" + q.get_str();
        out.push_back(std::move(l));
        return out;
    }
    Int inv2 = mod_inv(2, q);
    int idx = 0;
    Int s_pos = *s, s_neg = q - s_pos;
    for (const Int& sg : {s_pos, s_neg}) {
        Int r = (5 + sg) % q * inv2 % q;  // theta^2 candidate value
        auto w = sqrt_mod(r, q);
        if (w) {
            Int w_pos = *w, w_neg = q - w_pos;
            for (const Int& root : {w_pos, w_neg}) {
                PrimeLocalization l;
                l.p = q;
                l.e = 1;
                l.f = 1;
                l.linear_ = true;
                l.root_ = root;
                l.res_field = Fq(to_u64(q), 1, {0, 0, 0, 0});
                l.pi_ = QuarticElt(q);
                l.pi_inv_ = l.pi_.inverse();
                l.label_ = "P" + q.get_str() + "." + std::to_string(idx++);
                out.push_back(std::move(l));
            }
        } else {
            PrimeLocalization l;
            l.p = q;
            l.e = 1;
            l.f = 2;
            l.linear_ = false;
            l.root_ = r;
            u64 qq = to_u64(q);
            u64 rr = to_u64(r % q);
            l.res_field = Fq(qq, 2, {(qq - rr) % qq, 0, 0, 0});  // x^2 - r
            l.pi_ = QuarticElt(q);
            l.pi_inv_ = l.pi_.inverse();
            l.label_ = "P" + q.get_str() + "." + std::to_string(idx++);
            out.push_back(std::move(l));
        }
    }
    int efg = 0;
    for (auto& l : out) efg += l.e * l.f;
    if (efg != 4) throw std::logic_error("above: e*f*g mismatch");
    return out;
}

std::vector<PrimeLocalization> primes_above(const Int& q) {
    if (q == 2) return {PrimeLocalization::P2()};
    if (q == 5) return {PrimeLocalization::P5()};
    if (q == 3) return {PrimeLocalization::P3()};
    return PrimeLocalization::above(q);
}

void PrimeLocalization::ensure_precision(long n) const {
    if (kind != PrimeKind::Unramified || inert_) return;
    if (prec_ >= n && prec_ > 0) return;
    long target = std::max<long>(n, 8);
    Int mod = int_pow(p, (unsigned long)target);
    Int r = root_;
    // Newton iteration; f=1 lifts a root of x^4-5x^2+5, f=2 lifts a root of
    // the resolvent y^2-5y+5 (the value of theta^2).
    long have = 1;
    Int cur_mod = p;
    while (have < target) {
        have = std::min(target, 2 * have);
        cur_mod = int_pow(p, (unsigned long)have);
        if (linear_) {
            Int fr = ((((r * r % cur_mod) * r % cur_mod) * r % cur_mod) - 5 * (r * r % cur_mod) + 5) % cur_mod;
            Int dfr = (4 * ((r * r % cur_mod) * r % cur_mod) - 10 * r) % cur_mod;
            dfr = ((dfr % cur_mod) + cur_mod) % cur_mod;
            r = ((r - fr * mod_inv(dfr, cur_mod)) % cur_mod + cur_mod) % cur_mod;
        } else {
            Int fr = (r * r - 5 * r + 5) % cur_mod;
            Int dfr = ((2 * r - 5) % cur_mod + cur_mod) % cur_mod;
            r = ((r - fr * mod_inv(dfr, cur_mod)) % cur_mod + cur_mod) % cur_mod;
        }
    }
    lifted_root_ = r;
    prec_ = target;
}

long PrimeLocalization::val_integral(const QuarticElt& y) const {
    if (y.is_zero()) return kValInfinity;
    switch (kind) {
        case PrimeKind::P2:
        case PrimeKind::P5: {
            QuarticElt w = y;
            long v = 0;
            for (;;) {
                if (!residue_integral(w).is_zero()) return v;
                w = w * pi_inv_;
                ++v;
                if (!w.is_integral()) throw std::logic_error("val_integral: inexact uniformizer division");
                if (v > 2000000) throw std::logic_error("val_integral: runaway loop");
            }
        }
        case PrimeKind::Unramified: {
            if (inert_) {
                long v = kValInfinity;
                for (const auto& x : y.c)
                    if (x != 0) v = std::min(v, vp(Rat(x), p));
                return v;
            }
            // bound the valuation by v_p(Norm) and compute at that precision
            Rat nrm = y.norm();
            long bound = vp(nrm, p) + 1;
            ensure_precision(bound);
            Int mod = int_pow(p, (unsigned long)prec_);
            Int c0(y.c[0].get_num()), c1(y.c[1].get_num()), c2(y.c[2].get_num()), c3(y.c[3].get_num());
            Int a, b;
            if (linear_) {
                Int r = lifted_root_;
                a = (((c3 * r % mod + c2) * r % mod + c1) * r % mod + c0) % mod;
                b = 0;
            } else {
                Int r = lifted_root_;  // value of theta^2
                a = (c0 + c2 * r) % mod;
                b = (c1 + c3 * r) % mod;
            }
            a = (a % mod + mod) % mod;
            b = (b % mod + mod) % mod;
            long v = kValInfinity;
            if (a != 0) v = std::min(v, vp(a, p));
            if (b != 0) v = std::min(v, vp(b, p));
            if (v >= bound) throw std::logic_error("val_integral: precision bound violated");
            return v;
        }
    }
    throw std::logic_error("val_integral: bad kind");
}

long PrimeLocalization::valuation(const QuarticElt& z) const {
    if (z.is_zero()) return kValInfinity;
    QuarticElt y;
    Int d;
    split_denominator(z, y, d);
    return val_integral(y) - e * vp(d, p);
}

FqElem PrimeLocalization::residue_integral(const QuarticElt& y) const {
    const Fq& F = res_field;
    switch (kind) {
        case PrimeKind::P5: {
            Int c0(y.c[0].get_num());
            return F.from_int(c0);
        }
        case PrimeKind::P2: {
            // theta -> t, theta^2 -> t+1, theta^3 -> 1 in F_4 = F_2[t]/(t^2+t+1)
            Int c0(y.c[0].get_num()), c1(y.c[1].get_num()), c2(y.c[2].get_num()), c3(y.c[3].get_num());
            FqElem r = F.zero();
            r.c[0] = to_u64(((c0 + c2 + c3) % 2 + 2) % 2);
            r.c[1] = to_u64(((c1 + c2) % 2 + 2) % 2);
            return r;
        }
        case PrimeKind::Unramified: {
            Int c0(y.c[0].get_num()), c1(y.c[1].get_num()), c2(y.c[2].get_num()), c3(y.c[3].get_num());
            if (inert_) {
                FqElem r = F.zero();
                r.c[0] = to_u64(((c0 % p) + p) % p);
                r.c[1] = to_u64(((c1 % p) + p) % p);
                r.c[2] = to_u64(((c2 % p) + p) % p);
                r.c[3] = to_u64(((c3 % p) + p) % p);
                return r;
            }
            if (linear_) {
                Int r = root_;
                Int v = (((c3 * r + c2) * r + c1) * r + c0) % p;
                return F.from_int(v);
            }
            Int r = root_;
            FqElem out = F.zero();
            out.c[0] = to_u64((((c0 + c2 * r) % p) + p) % p);
            out.c[1] = to_u64((((c1 + c3 * r) % p) + p) % p);
            return out;
        }
    }
    throw std::logic_error("residue_integral: bad kind");
}

FqElem PrimeLocalization::residue(const QuarticElt& z) const {
    if (z.is_zero()) return res_field.zero();
    if (valuation(z) < 0) throw std::domain_error("residue: element is not " + label_ + "-integral");
    QuarticElt y;
    Int d;
    split_denominator(z, y, d);
    long m = vp(d, p);
    Int dprime = d / int_pow(p, (unsigned long)m);
    if (m > 0) {
        switch (kind) {
            case PrimeKind::P2:
            case PrimeKind::P5: {
                // 1/p = u / pi^e exactly
                for (long i = 0; i < m; ++i) y = y * p_unit_;
                for (long i = 0; i < m * e; ++i) {
                    y = y * pi_inv_;
                    if (!y.is_integral()) throw std::logic_error("residue: inexact clearing at " + label_);
                }
                break;
            }
            case PrimeKind::Unramified: {
                if (inert_) {
                    Int pm = int_pow(p, (unsigned long)m);
                    QuarticElt w;
                    for (int i = 0; i < 4; ++i) {
                        Int num(y.c[i].get_num());
                        if (num % pm != 0) throw std::logic_error("residue: inert clearing failed");
                        w.c[i] = Rat(num / pm);
                    }
                    y = w;
                    break;
                }
                ensure_precision(m + 2);
                Int mod = int_pow(p, (unsigned long)prec_);
                Int pm = int_pow(p, (unsigned long)m);
                Int c0(y.c[0].get_num()), c1(y.c[1].get_num()), c2(y.c[2].get_num()), c3(y.c[3].get_num());
                Int a, b;
                Int r = lifted_root_;
                if (linear_) {
                    a = ((((c3 * r % mod + c2) * r % mod + c1) * r % mod + c0) % mod + mod) % mod;
                    b = 0;
                } else {
                    a = (((c0 + c2 * r) % mod) + mod) % mod;
                    b = (((c1 + c3 * r) % mod) + mod) % mod;
                }
                if (a % pm != 0 || b % pm != 0) throw std::logic_error("residue: unramified clearing failed");
                a = a / pm % p;
                b = b / pm % p;
                FqElem out = res_field.zero();
                out.c[0] = to_u64(a);
                out.c[1] = to_u64(b);
                FqElem dd = res_field.from_int(dprime);
                return res_field.mul(out, res_field.inv(dd));
            }
        }
    }
    FqElem r = residue_integral(y);
    FqElem dd = res_field.from_int(dprime);
    return res_field.mul(r, res_field.inv(dd));
}

QuarticElt PrimeLocalization::lift(const FqElem& a) const {
    switch (kind) {
        case PrimeKind::P5:
            return QuarticElt(Rat((long)a.c[0]));
        case PrimeKind::P2:
            return QuarticElt{Rat((long)a.c[0]), Rat((long)a.c[1]), Rat(0), Rat(0)};
        case PrimeKind::Unramified:
            // theta maps to the class of x; polynomials in x lift to the same
            // polynomial in theta
            return QuarticElt{Rat((long)a.c[0]), Rat((long)a.c[1]), Rat((long)a.c[2]), Rat((long)a.c[3])};
    }
    throw std::logic_error("lift: bad kind");
}

}  // namespace quintic
