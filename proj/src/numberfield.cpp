#include "quintic/numberfield.hpp"

#include <stdexcept>

namespace quintic {

NFCtx::NFCtx(std::vector<Rat> poly_coeffs, std::vector<Rat> i_coeffs) : minpoly(std::move(poly_coeffs)) {
    deg = minpoly.degree();
    if (deg < 1 || deg > 8) throw std::domain_error("NFCtx: unsupported degree");
    if (minpoly.lead() != Rat(1)) throw std::domain_error("NFCtx: minpoly must be monic");
    i_embed = std::move(i_coeffs);
    i_embed.resize(deg, Rat(0));
}

std::vector<std::complex<double>> NFCtx::complex_roots() const {
    // Durand-Kerner
    int n = deg;
    std::vector<std::complex<double>> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = minpoly.coeff(i).get_d();
    std::vector<std::complex<double>> r(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> cur(1, 0);
    for (int i = 0; i < n; ++i) {
        cur *= seed;
        r[i] = cur;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int i = n; i >= 0; --i) v = v * x + a[i];
        return v;
    };
    for (int it = 0; it < 500; ++it) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> den(1, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (r[i] - r[j]);
            std::complex<double> delta = eval(r[i]) / den;
            r[i] -= delta;
            moved += std::abs(delta);
        }
        if (moved < 1e-14) break;
    }
    return r;
}

NFElt::NFElt(std::shared_ptr<const NFCtx> ctx, std::vector<Rat> coords) : F(std::move(ctx)), c(std::move(coords)) {
    c.resize(F->deg, Rat(0));
}

NFElt NFElt::zero(std::shared_ptr<const NFCtx> ctx) { return NFElt(std::move(ctx), {}); }
NFElt NFElt::one(std::shared_ptr<const NFCtx> ctx) { return NFElt(std::move(ctx), {Rat(1)}); }
NFElt NFElt::gen(std::shared_ptr<const NFCtx> ctx) {
    if (ctx->deg == 1) return NFElt(std::move(ctx), {Rat(0)});
    return NFElt(std::move(ctx), {Rat(0), Rat(1)});
}
NFElt NFElt::from_rat(std::shared_ptr<const NFCtx> ctx, const Rat& r) { return NFElt(std::move(ctx), {r}); }

NFElt NFElt::from_gaussian(std::shared_ptr<const NFCtx> ctx, const GaussianElt& z) {
    NFElt i_elt(ctx, ctx->i_embed);
    NFElt out = from_rat(ctx, z.re) + z.im * i_elt;
    return out;
}

bool NFElt::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

NFElt operator+(const NFElt& a, const NFElt& b) {
    NFElt r = a;
    for (int i = 0; i < a.F->deg; ++i) r.c[i] += b.c[i];
    return r;
}
NFElt operator-(const NFElt& a, const NFElt& b) {
    NFElt r = a;
    for (int i = 0; i < a.F->deg; ++i) r.c[i] -= b.c[i];
    return r;
}
NFElt operator-(const NFElt& a) {
    NFElt r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

NFElt operator*(const NFElt& a, const NFElt& b) {
    int n = a.F->deg;
    std::vector<Rat> t(2 * n - 1, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < n; ++j) t[i + j] += a.c[i] * b.c[j];
    }
    // reduce modulo the monic minpoly
    const auto& f = a.F->minpoly;
    for (int k = 2 * n - 2; k >= n; --k) {
        if (t[k] == 0) continue;
        Rat v = t[k];
        t[k] = 0;
        for (int i = 0; i < n; ++i) t[k - n + i] -= v * f.coeff(i);
    }
    t.resize(n);
    return NFElt(a.F, std::move(t));
}

NFElt operator*(const Rat& s, const NFElt& a) {
    NFElt r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

NFElt NFElt::pow(unsigned long e) const {
    NFElt r = one(F), b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        b = b * b;
    }
    return r;
}

Rat NFElt::norm() const {
    Poly<Rat> h(c);
    if (h.is_zero()) return Rat(0);
    return resultant(F->minpoly, h);
}

std::optional<GaussianElt> NFElt::as_gaussian() const {
    // solve z = x * 1 + y * i_embed over Q
    int n = F->deg;
    if (n == 1) return c[0] == 0 ? std::optional<GaussianElt>(GaussianElt(Rat(0))) : std::optional<GaussianElt>(GaussianElt(c[0]));
    // two unknowns, n equations
    // rows: c[k] = x*(k==0) + y*i_embed[k]
    Rat x, y;
    // find a pivot row for y among k >= 1
    int piv = -1;
    for (int k = 1; k < n; ++k)
        if (F->i_embed[k] != 0) {
            piv = k;
            break;
        }
    if (piv < 0) return std::nullopt;
    // use rows piv and 0
    y = c[piv] / F->i_embed[piv];
    x = c[0] - y * F->i_embed[0];
    // verify
    NFElt test = from_gaussian(F, GaussianElt(x, y));
    if (test == *this) return GaussianElt(x, y);
    return std::nullopt;
}

std::complex<double> NFElt::embed(const std::complex<double>& root) const {
    std::complex<double> v = 0;
    for (int i = F->deg - 1; i >= 0; --i) v = v * root + c[i].get_d();
    return v;
}

}  // namespace quintic
