#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quintic/counting.hpp"
#include "quintic/descent.hpp"
#include "quintic/eliminate.hpp"
#include "quintic/frey.hpp"

using namespace quintic;

// The OpenMP kernels must agree with their serial reference implementations.

TEST_CASE("lemma scan: parallel == serial") {
    auto s = descent::lemma_scan_serial(600);
    auto p = descent::lemma_scan(600);
    CHECK(s.ok == p.ok);
    CHECK(s.primes_checked == p.primes_checked);
    CHECK(s.pairs_checked == p.pairs_checked);
}

TEST_CASE("solution search: parallel == serial") {
    for (int d : {2, 3}) {
        auto s = descent::search_solutions_serial(d, 17, 60);
        auto p = descent::search_solutions(d, 17, 60);
        CHECK(s.pairs_scanned == p.pairs_scanned);
        CHECK(s.degenerate_pairs == p.degenerate_pairs);
        REQUIRE(s.hits.size() == p.hits.size());
        for (size_t i = 0; i < s.hits.size(); ++i) {
            CHECK(s.hits[i].a == p.hits[i].a);
            CHECK(s.hits[i].b == p.hits[i].b);
            CHECK(s.hits[i].z == p.hits[i].z);
        }
    }
}

TEST_CASE("point counting: parallel == serial") {
    auto E = frey::frey_twist(Int(1), Int(2));
    auto r3 = tate::tate_local(E, PrimeLocalization::P3());
    REQUIRE(r3.f == 0);
    auto R = counting::reduce(r3.minimal_model, PrimeLocalization::P3());
    CHECK(counting::count_points(R) == counting::count_points_serial(R));

    for (const auto& P : PrimeLocalization::above(Int(1021))) {
        auto rd = tate::tate_local(E, P);
        if (rd.f != 0) continue;
        auto RR = counting::reduce(rd.minimal_model, P);
        CHECK(counting::count_points(RR) == counting::count_points_serial(RR));
    }
}

TEST_CASE("eligible sieve: parallel == serial") {
    for (int d : {2, 3}) {
        auto s = eliminate::eligible_primes_serial(d, Int(300000));
        auto p = eliminate::eligible_primes(d, Int(300000));
        CHECK(s.count == p.count);
        CHECK(s.pi_x == p.pi_x);
        CHECK(s.density == p.density);
    }
}
