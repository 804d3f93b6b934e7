#pragma once

#include "quintic/newforms.hpp"

#include <set>
#include <string>
#include <vector>

namespace quintic {
namespace eliminate {

// inner-twist coefficient shapes forced by a_q = conj(a_q) * conj(eps)(q)
enum class TwistShape { T, IT, TMinusIT, TPlusIT };
TwistShape inner_twist_shape(long q);
GaussianElt shape_value(TwistShape s, long t);
std::string shape_name(TwistShape s);

enum class Method { CMSplitCartan, InnerTwistA3, TraceAt3, TwistCarayol };
std::string method_name(Method m);

struct CongruenceCondition {
    long modulus;
    std::set<long> residues;  // p must satisfy p mod modulus in residues
    bool satisfied_by(const Int& p) const;
};

struct EliminationResult {
    std::string form_id;
    Method method = Method::InnerTwistA3;
    std::vector<CongruenceCondition> congruences;  // elimination valid when p satisfies these
    std::vector<Int> exceptional;                   // and avoids these primes
    bool inconclusive = false;
    std::string notes;
};

// S1: CM forms. d=2 uses the split-Cartan congruences; d=3 eliminates the
// CM-by-Q(sqrt-5) forms through the P3 trace when a_3 = +-(i-1).
EliminationResult s1_conditions(const newforms::NewformRecord& f, int d);

// S2: the congruence a_3 = c_3(f) against the forced shape t - ti, |t| <= 2;
// exceptional primes divide Nm(c_3 - (t - ti)) or the fourth-power variant
// Nm(c_3^4 + 4 t^4).
EliminationResult s2_exceptional_primes(const newforms::NewformRecord& f);

// a_{P3}(f) = alpha^4 + beta^4 for x^2 - a3 x + eps_bar(3)*3, via power sums.
GaussianElt hecke_trace_81(const GaussianElt& a3);

// Exceptional primes divide Nm(hecke_trace_81(a_3) + 18).
EliminationResult trace_at_3_eliminate(const newforms::NewformRecord& f);

// Twists f (an S3 form of level 1600) by chi8 and locates the twisted
// eigensystem in the dataset; the match must be unique and of level 800.
long twist_and_match(const newforms::NewformRecord& f, const newforms::Dataset& ds);

struct S3Route {
    // conductor exponents at P2 of E_{gamma,2} that have to be covered
    std::vector<long> twist2_exponents;
};

EliminationResult s3_eliminate(const newforms::NewformRecord& f, int d, const newforms::Dataset& ds,
                               const S3Route& route);

struct TheoremReport {
    int d = 0;
    long p_lower_bound = 0;
    std::vector<CongruenceCondition> conditions;
    double density = 0;
    std::vector<EliminationResult> per_form;
    Int observed_max_exceptional = 0;  // largest exceptional prime not already excluded by the conditions:
                                       // 0 when the stated conditions dominate every exceptional set
    bool sound = false;                // every form eliminated for all p meeting the conditions
};

TheoremReport assemble_theorem(int d, const newforms::Dataset& ds);

struct EligibleReport {
    int d = 0;
    Int X;
    std::vector<long> primes;   // populated only when X is small (<= 10^4)
    unsigned long count = 0;
    unsigned long pi_x = 0;
    double density = 0;
    double target = 0;
    double tolerance = 0;
    bool within_tolerance = false;
};

EligibleReport eligible_primes(int d, const Int& X);
EligibleReport eligible_primes_serial(int d, const Int& X);

}  // namespace eliminate
}  // namespace quintic
