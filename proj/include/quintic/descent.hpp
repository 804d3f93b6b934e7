#pragma once

#include "quintic/quad_field.hpp"
#include "quintic/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quintic {
namespace descent {

enum class EquationTag { Eq4, Eq5 };  // phi(a,b) = c^p vs phi(a,b) = 5 c^p

// phi(a,b) = a^4 - a^3 b + a^2 b^2 - a b^3 + b^4
Int phi(const Int& a, const Int& b);

// The factorization phi = phi1 * phi2 over Q(sqrt5),
// phi1 = a^2 + omega ab + b^2, phi2 its conjugate.
std::pair<QuadElt, QuadElt> phi12(const Int& a, const Int& b);

struct IdentityReport {
    long pairs_checked = 0;
    bool ok = true;
    std::string failure;  // offending pair when !ok
};

// Checks (a+b)^2 = -omegabar*phi1 - omega*phi2 and phi = phi1*phi2 for all
// |a|,|b| <= H.
IdentityReport verify_phi_identities(long H);

struct LemmaScanReport {
    long l_max = 0;
    long primes_checked = 0;
    unsigned long long pairs_checked = 0;
    bool ok = true;
    std::string counterexample;  // "(l, a, b)" on failure
};

// Residue verification of the elementary descent lemmas, for every prime
// l <= l_max:
//   (i)  l | a+b and l | phi(a,b) imply l = 5; and when 5 | a+b the 5-adic
//        valuation of phi is exactly 1 (checked mod 25),
//   (ii) if l != 1 mod 5 and l | a^5+b^5 then l | a+b,
//   (iii) if l | phi(a,b) and l != 5 then l = 1 mod 5.
LemmaScanReport lemma_scan(long l_max);
LemmaScanReport lemma_scan_serial(long l_max);

inline constexpr long kNuInfinity = -1;  // marker for a+b = 0

struct SolutionCase {
    Int a, b;
    int d = 2;
    unsigned long p = 0;
    EquationTag tag = EquationTag::Eq4;
    long nu2 = 0;  // kNuInfinity when a+b = 0
    long nu5 = 0;
    Int c0_radical = 1;          // radical of phi / 5^{v5(phi)}
    bool c0_complete = true;     // false when trial division left a composite tail
    Int c0_tail = 1;
    bool cofactor_is_pth_power = false;
};

// Classifies a coprime pair into equation (4) or (5) local data.  When
// `strict` is set, rejects pairs whose phi-cofactor is not a perfect p-th
// power (i.e. pairs that are not actual solutions).
SolutionCase classify_solution(const Int& a, const Int& b, int d, unsigned long p, bool strict = false,
                               const Int& trial_bound = Int(100000));

struct SearchHit {
    Int a, b, z;
    bool trivial = false;  // |z| == 1
};

struct SearchResult {
    std::vector<SearchHit> hits;        // z != 0, sorted lexicographically by (a,b)
    long degenerate_pairs = 0;          // pairs with a+b = 0 (z = 0)
    unsigned long long pairs_scanned = 0;
};

// Exhaustive scan of coprime |a|,|b| <= H with d | a+b for a^5+b^5 = d z^p.
SearchResult search_solutions(int d, unsigned long p, long H);
SearchResult search_solutions_serial(int d, unsigned long p, long H);

}  // namespace descent
}  // namespace quintic
