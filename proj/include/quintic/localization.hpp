#pragma once

#include "quintic/finite_field.hpp"
#include "quintic/quartic_field.hpp"

#include <memory>
#include <string>
#include <vector>

namespace quintic {

enum class PrimeKind { P2, P5, Unramified };

// A fixed prime of K = Q(theta) with exact valuation and residue machinery.
//
// P2 = (2, theta^2+theta+1): e=2, f=2, uniformizer theta^2-theta-1 (norm -4).
// P5 = (theta):              e=4, f=1, uniformizer theta (norm 5).
// Unramified primes q coprime to 10 are described by an irreducible factor of
// x^4-5x^2+5 mod q; x^4-5x^2+5 = (x^2-r+)(x^2-r-) with r+- = (5+-sqrt5)/2,
// so the factor is determined by a square root of 5 mod q and optionally one
// of r+-.  Valuations there use Hensel-lifted roots mod q^N.
class PrimeLocalization {
  public:
    PrimeKind kind;
    Int p;
    int e = 1, f = 1;
    Fq res_field;

    static const PrimeLocalization& P2();
    static const PrimeLocalization& P5();
    static const PrimeLocalization& P3();  // 3 is inert, residue field F_81

    // All primes of K above an unramified rational prime q (q coprime to 10).
    static std::vector<PrimeLocalization> above(const Int& q);

    Int norm() const { return int_pow(p, (unsigned long)f); }
    const QuarticElt& uniformizer() const { return pi_; }
    std::string label() const { return label_; }

    long valuation(const QuarticElt& z) const;
    long valuation(const Rat& r) const { return r == 0 ? kValInfinity : e * vp(r, p); }

    FqElem residue(const QuarticElt& z) const;  // requires valuation(z) >= 0
    FqElem residue(const Rat& r) const { return residue(QuarticElt(r)); }
    QuarticElt lift(const FqElem& a) const;

    friend bool operator==(const PrimeLocalization& a, const PrimeLocalization& b) {
        return a.label_ == b.label_;
    }

  private:
    PrimeLocalization() : kind(PrimeKind::Unramified), p(0) {}

    QuarticElt pi_;          // uniformizer
    QuarticElt pi_inv_;      // exact inverse of pi in K
    QuarticElt p_unit_;      // ramified only: unit u with p*u = pi^e
    std::string label_;

    // unramified data
    bool inert_ = false;         // f == 4
    bool linear_ = false;        // f == 1 (theta |-> root_), else f == 2 (theta^2 |-> root_)
    Int root_;                   // mod p
    mutable Int lifted_root_;    // mod p^prec_
    mutable long prec_ = 0;

    void ensure_precision(long n) const;
    long val_integral(const QuarticElt& y) const;       // y with integer coords; may be kValInfinity
    FqElem residue_integral(const QuarticElt& y) const; // y with integer coords
};

// All primes of K above a rational prime (dispatches 2,5 to the ramified data).
std::vector<PrimeLocalization> primes_above(const Int& q);

}  // namespace quintic
