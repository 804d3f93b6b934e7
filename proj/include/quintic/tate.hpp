#pragma once

#include "quintic/curve.hpp"
#include "quintic/descent.hpp"
#include "quintic/localization.hpp"

#include <string>
#include <vector>

namespace quintic {
namespace tate {

enum class Kodaira { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

std::string kodaira_name(Kodaira k, long n);

enum class ReductionKind { Good, Multiplicative, Additive };

struct ReductionData {
    std::string prime;
    Kodaira type = Kodaira::I0;
    long n = 0;              // the index for In / In*
    long f = 0;              // conductor exponent
    long v_disc_min = 0;     // valuation of the minimal discriminant
    long rescalings = 0;     // number of step-11 restarts
    Curve<QuarticElt> minimal_model;

    ReductionKind kind() const {
        if (f == 0) return ReductionKind::Good;
        if (f == 1) return ReductionKind::Multiplicative;
        return ReductionKind::Additive;
    }
};

// Full Tate loop at P: minimal model, Kodaira type, conductor exponent.
ReductionData tate_local(const Curve<QuarticElt>& E, const PrimeLocalization& P);

struct ProfileEntry {
    Int q;                       // rational prime
    std::string prime;           // prime of K above q
    long f = 0;
    std::string kodaira;
};

struct ConductorProfile {
    long e2 = 0, e5 = 0;
    std::vector<ProfileEntry> entries;        // all primes inspected
    std::vector<Int> multiplicative_primes;   // rational primes with some multiplicative fibre
    Int unverified_tail = 1;                  // cofactor of phi not trial-factored
    // comparison against the expected local data for (equation_tag, nu2, d)
    bool has_expectation = false;
    std::vector<long> expected_e2;            // one or two admissible values
    long expected_e5 = 0;
    bool matches_expectation = false;
};

// Runs tate_local at P2, P5 and at every prime of K above the rational primes
// dividing phi(a,b)/5^{v5} found by trial division; compares the ramified
// exponents with the expected case table.
ConductorProfile conductor_profile(const Int& a, const Int& b, int d,
                                   const Int& trial_bound = Int(100000));

// Conductor exponent at P2 of the quadratic twist by 2 of E_gamma.
// Requires v2(a+b) = 1; the result is expected to land in {0, 4}.
struct Twist2Result {
    long exponent = 0;
    bool in_expected_set = false;
};
Twist2Result twist2_conductor_at_2(const Int& a, const Int& b);

}  // namespace tate
}  // namespace quintic
