#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quintic/counting.hpp"
#include "quintic/frey.hpp"
#include "quintic/tate.hpp"

#include <map>
#include <random>

using namespace quintic;

namespace {
std::mt19937_64 rng(424242);

std::pair<Int, Int> random_coprime_mult(long H, long m) {
    // coprime pair with m | a+b and a+b != 0
    std::uniform_int_distribution<long> d(-H, H);
    for (;;) {
        long a = d(rng), b = d(rng);
        if ((a + b) % m != 0 || a + b == 0) continue;
        Int A(a), B(b), g;
        if (A == 0 && B == 0) continue;
        mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
        if (g == 1) return {A, B};
    }
}
}  // namespace

TEST_CASE("witness pair (1,1): P2 exponent 8, P5 exponent 2") {
    auto E = frey::frey_twist(Int(1), Int(1));
    auto r2 = tate::tate_local(E, PrimeLocalization::P2());
    CHECK(r2.f == 8);
    auto r5 = tate::tate_local(E, PrimeLocalization::P5());
    CHECK(r5.f == 2);
}

TEST_CASE("witness pair (3,5): nu2 = 3 gives P2 exponent 4; 421 is multiplicative") {
    auto prof = tate::conductor_profile(Int(3), Int(5), 2);
    CHECK(prof.e2 == 4);
    CHECK(prof.e5 == 2);
    CHECK(prof.matches_expectation);
    REQUIRE(prof.multiplicative_primes.size() == 1);
    CHECK(prof.multiplicative_primes[0] == 421);
    // every prime of K above 421 appears with exponent 1
    for (const auto& e : prof.entries)
        if (e.q == 421) CHECK(e.f == 1);
}

TEST_CASE("witness pair (1,-1): equation (5), a+b = 0 routed to the 8|a+b case") {
    auto prof = tate::conductor_profile(Int(1), Int(-1), 2);
    CHECK(prof.e2 == 4);
    CHECK(prof.e5 == 0);
    CHECK(prof.matches_expectation);
}

TEST_CASE("witness pair (1,2): d = 3, a+b odd, P2 exponent lands in {8, 6}") {
    auto prof = tate::conductor_profile(Int(1), Int(2), 3);
    CHECK((prof.e2 == 8 || prof.e2 == 6));
    CHECK(prof.e5 == 2);
    CHECK(prof.matches_expectation);
    // good reduction at P3
    auto E = frey::frey_twist(Int(1), Int(2));
    auto r3 = tate::tate_local(E, PrimeLocalization::P3());
    CHECK(r3.f == 0);
    CHECK(r3.type == tate::Kodaira::I0);
}

TEST_CASE("idempotence on the minimal model") {
    for (auto [a, b] : {std::pair<long, long>{1, 1}, {3, 5}, {1, -1}, {1, 2}}) {
        auto E = frey::frey_twist(Int(a), Int(b));
        for (const auto* P : {&PrimeLocalization::P2(), &PrimeLocalization::P5()}) {
            auto r1 = tate::tate_local(E, *P);
            auto r2 = tate::tate_local(r1.minimal_model, *P);
            CHECK(r1.f == r2.f);
            CHECK(r1.type == r2.type);
            CHECK(r1.n == r2.n);
            CHECK(r2.rescalings == 0);
            CHECK(r1.v_disc_min == r2.v_disc_min);
        }
    }
}

TEST_CASE("non-integral inputs are rejected") {
    auto E = frey::frey_twist(Int(1), Int(1));
    auto bad = E;
    bad.a4 = QuarticElt(Rat(1, 2));
    CHECK_THROWS(tate::tate_local(bad, PrimeLocalization::P2()));
}

TEST_CASE("nu2 case table over random pairs (d = 2)") {
    // nu2 = 1 -> (8, 2); nu2 = 2 -> (0, 2); nu2 >= 3 -> (4, 2) for equation (4)
    for (int i = 0; i < 3; ++i) {
        auto [a, b] = random_coprime_mult(60, 2);
        auto sc = descent::classify_solution(a, b, 2, 17);
        auto prof = tate::conductor_profile(a, b, 2);
        long want_e5 = (sc.tag == descent::EquationTag::Eq4) ? 2 : 0;
        CHECK(prof.e5 == want_e5);
        if (sc.nu2 == 1) CHECK(prof.e2 == 8);
        if (sc.nu2 == 2) CHECK(prof.e2 == 0);
        if (sc.nu2 >= 3) CHECK(prof.e2 == 4);
        CHECK(prof.matches_expectation);
    }
}

TEST_CASE("multiplicative exponent is 1 at primes above the phi cofactor") {
    for (auto [a, b] : {std::pair<long, long>{1, 3}, {1, 5}, {2, 1}}) {
        auto prof = tate::conductor_profile(Int(a), Int(b), ((a + b) % 2 == 0) ? 2 : 3);
        for (const auto& e : prof.entries) {
            if (e.q == 2 || e.q == 5) continue;
            CHECK(e.f == 1);
            CHECK(e.kodaira[0] == 'I');
        }
    }
}

TEST_CASE("conductor exponent at odd unramified primes is at most 2") {
    // residue characteristic >= 5 additive fibres have no wild part
    for (auto [a, b] : {std::pair<long, long>{1, 3}, {3, 5}, {1, 2}}) {
        auto prof = tate::conductor_profile(Int(a), Int(b), ((a + b) % 2 == 0) ? 2 : 3);
        for (const auto& e : prof.entries)
            if (e.q != 2 && e.q != 5) CHECK(e.f <= 2);
    }
}

TEST_CASE("twist by 2: P2 exponent in {0, 4} when 2 || a+b") {
    auto t11 = tate::twist2_conductor_at_2(Int(1), Int(1));
    CHECK(t11.in_expected_set);
    auto t51 = tate::twist2_conductor_at_2(Int(5), Int(1));
    CHECK(t51.in_expected_set);
    CHECK_THROWS(tate::twist2_conductor_at_2(Int(1), Int(2)));  // nu2 = 0
    CHECK_THROWS(tate::twist2_conductor_at_2(Int(1), Int(3)));  // nu2 = 2
    for (int i = 0; i < 3; ++i) {
        auto [a, b] = random_coprime_mult(40, 2);
        Int s = a + b;
        if (vp(s, 2) != 1) continue;
        CHECK(tate::twist2_conductor_at_2(a, b).in_expected_set);
    }
}

TEST_CASE("trace at P3 is -18 for pairs with 3 | a+b") {
    auto r = counting::trace_at_P3(Int(1), Int(2));
    CHECK(r.count == 100);
    CHECK(r.trace == -18);
    for (int i = 0; i < 10; ++i) {
        auto [a, b] = random_coprime_mult(80, 3);
        if (a == 0 || b == 0) continue;
        auto rr = counting::trace_at_P3(a, b);
        CHECK(rr.count == 100);
        CHECK(rr.trace == -18);
    }
    CHECK_THROWS(counting::trace_at_P3(Int(1), Int(1)));
}

TEST_CASE("Hasse bound and twist behaviour of traces") {
    auto E = frey::frey_twist(Int(1), Int(2));
    for (const Int& q : {Int(41), Int(29), Int(19)}) {
        for (const auto& P : PrimeLocalization::above(q)) {
            if (P.norm() > 100000) continue;
            auto rd = tate::tate_local(E, P);
            if (rd.f != 0) continue;
            auto cr = counting::reduce_and_count(E, P);
            CHECK(cr.trace * cr.trace <= 4 * cr.q);
            // quadratic twist by a residue-square unit keeps the trace; by a
            // non-square it is negated
            const Fq& F = P.res_field;
            for (long dlt = 2; dlt <= 3; ++dlt) {
                QuarticElt delta(dlt);
                if (P.valuation(delta) != 0) continue;
                auto Et = quadratic_twist(rd.minimal_model, delta);
                auto ct = counting::reduce_and_count(Et, P);
                bool sq = F.is_square(P.residue(delta));
                CHECK(ct.trace == (sq ? cr.trace : -cr.trace));
            }
        }
    }
}

TEST_CASE("reduce_and_count rejects bad reduction and oversized fields") {
    auto E = frey::frey_twist(Int(1), Int(1));
    CHECK_THROWS(counting::reduce_and_count(E, PrimeLocalization::P2()));  // additive
    auto E2 = frey::frey_twist(Int(1), Int(2));
    CHECK_THROWS(counting::reduce_and_count(E2, PrimeLocalization::P3(), Int(50)));  // 81 > 50
}

TEST_CASE("twist by 2 at odd a+b: exponents 6 and 8 both occur") {
    // the level-1600 route split for d = 3: exponent 6 forces the trace
    // argument, anything else goes through level lowering
    std::map<long, int> seen;
    for (long a = -9; a <= 9; ++a) {
        for (long b = a; b <= 9; ++b) {
            Int A(a), B(b), g;
            if (a == 0 && b == 0) continue;
            mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
            if (g != 1) continue;
            long s = a + b;
            if (s % 2 == 0 || s % 3 != 0) continue;
            auto E2 = quadratic_twist(frey::frey_twist(A, B), QuarticElt(2));
            auto rd = tate::tate_local(E2, PrimeLocalization::P2());
            seen[rd.f]++;
        }
    }
    CHECK(seen.count(6));
    CHECK(seen.count(8));
    CHECK(seen.size() == 2);
}
