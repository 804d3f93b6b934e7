#pragma once

#include "quintic/gaussian.hpp"
#include "quintic/polynomial.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <vector>

namespace quintic {

// A coefficient field Q[x]/(f) with a designated square root of -1, presented
// the way dataset records present it: monic integral f plus i as a polynomial
// in the generator.
struct NFCtx {
    Poly<Rat> minpoly;          // monic, integer coefficients
    std::vector<Rat> i_embed;   // i = sum i_embed[k] * g^k
    int deg = 0;

    NFCtx(std::vector<Rat> poly_coeffs, std::vector<Rat> i_coeffs);

    std::vector<std::complex<double>> complex_roots() const;  // of the minpoly
};

struct NFElt {
    std::shared_ptr<const NFCtx> F;
    std::vector<Rat> c;  // length deg

    NFElt() = default;
    NFElt(std::shared_ptr<const NFCtx> ctx, std::vector<Rat> coords);
    static NFElt zero(std::shared_ptr<const NFCtx> ctx);
    static NFElt one(std::shared_ptr<const NFCtx> ctx);
    static NFElt gen(std::shared_ptr<const NFCtx> ctx);
    static NFElt from_rat(std::shared_ptr<const NFCtx> ctx, const Rat& r);
    static NFElt from_gaussian(std::shared_ptr<const NFCtx> ctx, const GaussianElt& z);

    bool is_zero() const;
    friend NFElt operator+(const NFElt& a, const NFElt& b);
    friend NFElt operator-(const NFElt& a, const NFElt& b);
    friend NFElt operator-(const NFElt& a);
    friend NFElt operator*(const NFElt& a, const NFElt& b);
    friend NFElt operator*(const Rat& s, const NFElt& a);
    friend bool operator==(const NFElt& a, const NFElt& b) { return a.c == b.c; }
    friend bool operator!=(const NFElt& a, const NFElt& b) { return !(a == b); }

    NFElt pow(unsigned long e) const;

    // product of the images under all complex embeddings (= resultant with the minpoly)
    Rat norm() const;

    // coordinates w.r.t. {1, i} if the element lies in Q(i), else nullopt
    std::optional<GaussianElt> as_gaussian() const;

    std::complex<double> embed(const std::complex<double>& root) const;
};

}  // namespace quintic
