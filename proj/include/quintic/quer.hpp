#pragma once

#include "quintic/galois.hpp"
#include "quintic/gaussian.hpp"

#include <array>
#include <string>
#include <vector>

namespace quintic {
namespace quer {

// The isogeny 2-cocycle on Gal(L/Q) = {1, sigma, tau, sigma*tau},
// L = Q(sqrt5, sqrt(-2)):
//   sigma fixes sqrt5 and negates sqrt(-2); tau negates sqrt5.
// The degree map is d(1) = d(sigma) = 1, d(tau) = d(sigma tau) = 2.
struct CocycleTable {
    std::array<std::string, 4> labels = {"1", "s", "t", "st"};
    // value table c(g,h), rows g, columns h
    std::array<std::array<long, 4>, 4> c = {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, 1, -2, -2}, {1, 1, 2, 2}}};
    std::array<long, 4> degree = {1, 1, 2, 2};
};

struct CocycleCheck {
    bool cocycle_ok = false;       // 64 instances of the 2-cocycle identity
    bool normalized_ok = false;    // c(1,h) = c(g,1) = 1
    bool degree_ok = false;        // c(g,h)^2 = d(g) d(h) / d(gh)
    std::string failure;
};
CocycleCheck cocycle_table_check();

struct EmbeddingData {
    OctElt alpha0;                 // (1/2)(-1 + theta + theta^2) sqrt(-2)
    OctElt alpha1;                 // -5 + 2 theta^2  (= sqrt5)
    std::array<OctElt, 8> beta;    // indexed like galois_group_K_sqrtm2()
    QuarticElt gamma;
};
EmbeddingData embedding_data();

struct EmbeddingReport {
    bool ok = false;
    bool sign_positive = true;     // selected sign of sigma0(theta) = +-(theta^3 - 3 theta)
    bool norm0_ok = false;         // N_{sigma0}(alpha0) = -1
    bool norm1_ok = false;         // N_{sigma1}(alpha1) = 5
    bool compat_ok = false;        // sigma1(a0)/a0 == sigma0(a1)/a1
    bool alternate_sign_also_ok = false;
};
// Verifies the embedding conditions; tries the alternate sigma0 sign on
// failure. Both signs satisfy the norm conditions; the positive one is the
// one under which the splitting coboundary is rational (see
// splitting_map_check) and is the canonical choice.
EmbeddingReport embedding_verify();

struct SplittingCheck {
    bool all_rational = false;      // every q(g,h) has no theta or sqrt(-2) part
    bool cocycle_ok = false;        // plain 2-cocycle identity, 512 triples
    bool twisted_cocycle_ok = false;
    Rat zeta = 0;                   // q(1,s0) q(s0,s0) q(s0^2,s0) q(s0^3,s0)
    Rat q_s0_s0 = 0;
    std::vector<Rat> values;        // 64 values in row-major group order
    std::string failure;
};
// Coboundary q(g,h) = beta_g * g(beta_h) * beta_{gh}^{-1} of the splitting map.
SplittingCheck splitting_map_check();

struct GammaReport {
    QuarticElt gamma;
    long val_P2 = 0, val_P5 = 0;
    bool orbit_has_4_elements = false;
    bool used_by_frey_twist = false;
    double numeric = 0.0;          // value under theta ~ 1.902113
};
GammaReport gamma_report();

}  // namespace quer
}  // namespace quintic
