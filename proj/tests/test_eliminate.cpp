#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quintic/characters.hpp"
#include "quintic/eliminate.hpp"

#include <complex>
#include <random>
#include <set>

using namespace quintic;
using namespace quintic::eliminate;
using newforms::NewformClass;

namespace {
const char* kDataset = "data/newforms.json";

std::set<long> to_set(const std::vector<Int>& v) {
    std::set<long> s;
    for (const auto& x : v) s.insert(mpz_get_si(x.get_mpz_t()));
    return s;
}

const newforms::NewformRecord& find_form(const newforms::Dataset& ds, const std::string& id) {
    for (const auto& f : ds.forms)
        if (f.id == id) return f;
    throw std::logic_error("missing form " + id);
}
}  // namespace

TEST_CASE("inner twist shapes") {
    CHECK(inner_twist_shape(3) == TwistShape::TMinusIT);
    CHECK(inner_twist_shape(19) == TwistShape::T);
    CHECK(inner_twist_shape(9) == TwistShape::IT);
    CHECK(inner_twist_shape(7) == TwistShape::TPlusIT);
    CHECK(inner_twist_shape(41) == TwistShape::T);
    CHECK_THROWS(inner_twist_shape(10));
    CHECK_THROWS(inner_twist_shape(5));

    // formal consistency: shape(t) == conj(shape(t)) * eps_bar(q)
    for (long q : {41L, 3L, 7L, 9L, 11L, 13L, 17L, 19L}) {
        for (long t : {-2L, 1L, 3L}) {
            GaussianElt v = shape_value(inner_twist_shape(q), t);
            CHECK(v == v.conj() * epsilon_bar()(Int(q)));
        }
    }
}

TEST_CASE("hecke_trace_81 on the pinned values and against the numeric oracle") {
    CHECK(hecke_trace_81(GaussianElt(Rat(-2), Rat(2))) == GaussianElt(14));
    CHECK(hecke_trace_81(GaussianElt(Rat(2), Rat(-2))) == GaussianElt(14));
    CHECK(hecke_trace_81(GaussianElt(Rat(-1), Rat(1))) == GaussianElt(2));
    CHECK(hecke_trace_81(GaussianElt(Rat(1), Rat(-1))) == GaussianElt(2));
    CHECK(hecke_trace_81(GaussianElt(0)) == GaussianElt(-18));

    // oracle: solve x^2 - a3 x - 3i = 0 numerically, compare alpha^4 + beta^4
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int tested = 0;
    while (tested < 100) {
        double re = u(rng) * 2 * std::sqrt(3.0), im = u(rng) * 2 * std::sqrt(3.0);
        if (re * re + im * im > 12.0) continue;
        // exact input with denominator 64
        Rat rre(long(re * 64), 64), rim(long(im * 64), 64);
        rre.canonicalize();
        rim.canonicalize();
        GaussianElt a3(rre, rim);
        GaussianElt exact = hecke_trace_81(a3);

        std::complex<double> e1(rre.get_d(), rim.get_d());
        std::complex<double> e2(0, -3);
        std::complex<double> disc = std::sqrt(e1 * e1 - 4.0 * e2);
        std::complex<double> alpha = (e1 + disc) / 2.0, beta = (e1 - disc) / 2.0;
        std::complex<double> want = std::pow(alpha, 4) + std::pow(beta, 4);
        std::complex<double> got(exact.re.get_d(), exact.im.get_d());
        CHECK(std::abs(got - want) < 1e-9 * std::max(1.0, std::abs(want)));
        ++tested;
    }
}

TEST_CASE("sturm bound examples") {
    CHECK(newforms::sturm_bound(1600, 2) == 480);
    CHECK(newforms::sturm_bound(1, 2) == 1);
    CHECK(newforms::sturm_bound(800, 2) == 240);
}

TEST_CASE("s1 conditions") {
    auto ds = newforms::load_newforms(kDataset);
    const auto& cm4 = find_form(ds, "f1600-s1-a");
    auto r4 = s1_conditions(cm4, 2);
    REQUIRE(r4.congruences.size() == 1);
    CHECK(r4.congruences[0].modulus == 4);
    CHECK(r4.congruences[0].residues == std::set<long>{1});
    CHECK(r4.method == Method::CMSplitCartan);

    const auto& cm20 = find_form(ds, "f1600-s1-c");
    auto r20 = s1_conditions(cm20, 2);
    REQUIRE(r20.congruences.size() == 1);
    CHECK(r20.congruences[0].modulus == 5);
    CHECK(r20.congruences[0].residues == std::set<long>{1, 4});

    // d = 3: the CM(-20) form with a_3 = +-(i-1) goes through the trace route
    auto r20d3 = s1_conditions(cm20, 3);
    CHECK(r20d3.method == Method::TraceAt3);
    CHECK(r20d3.congruences.empty());
    CHECK(to_set(r20d3.exceptional) == std::set<long>{2, 5});

    CHECK_THROWS(s1_conditions(find_form(ds, "f800-s2-a"), 2));
}

TEST_CASE("s2 exceptional primes: pinned worked examples") {
    auto ds = newforms::load_newforms(kDataset);
    // x^2 + 10i at level 400: eliminated for p > 5
    {
        auto r = s2_exceptional_primes(find_form(ds, "f400-s2-a"));
        CHECK(!r.inconclusive);
        CHECK(to_set(r.exceptional) == std::set<long>{2, 3, 5});
    }
    // x^2 +- (2-2i)x + i at level 800: eliminated for p > 73 (sharp set {3,5,29})
    for (const char* id : {"f800-s2-a", "f800-s2-b"}) {
        auto r = s2_exceptional_primes(find_form(ds, id));
        CHECK(!r.inconclusive);
        CHECK(to_set(r.exceptional) == std::set<long>{3, 5, 29});
        for (const auto& p : r.exceptional) CHECK(p <= 73);
    }
    // global soundness: no S2 set contains p = 1 mod 4 with p > 73
    for (const auto& f : ds.forms) {
        if (newforms::classify_newform(f) != NewformClass::S2) continue;
        auto r = s2_exceptional_primes(f);
        CHECK(!r.inconclusive);
        for (const auto& p : r.exceptional)
            CHECK(!(p % 4 == 1 && p > 73));
    }
}

TEST_CASE("s2 on a hypothetical integer c3 gives a finite nonzero set") {
    // c3 = 3 in a quartic field: norms of (3 - t(1-i)) are nonzero
    auto ds = newforms::load_newforms(kDataset);
    const auto& f = find_form(ds, "f400-s2-a");
    NFElt c3 = NFElt::from_rat(f.ctx, Rat(3));
    for (long t = -2; t <= 2; ++t) {
        NFElt target = NFElt::from_gaussian(f.ctx, shape_value(TwistShape::TMinusIT, t));
        CHECK((c3 - target).norm() != 0);
    }
}

TEST_CASE("trace_at_3_eliminate") {
    auto ds = newforms::load_newforms(kDataset);
    // level-800 S3 form with a_3 = 2i-2: trace 14, 14+18 = 32, set {2}
    {
        auto r = trace_at_3_eliminate(find_form(ds, "f800-s3-a"));
        CHECK(r.method == Method::TraceAt3);
        CHECK(to_set(r.exceptional) == std::set<long>{2});
    }
    // a_3 = i-1: trace 2, 2+18 = 20, set {2,5}
    {
        auto r = trace_at_3_eliminate(find_form(ds, "f800-s3-g"));
        CHECK(to_set(r.exceptional) == std::set<long>{2, 5});
    }
}

TEST_CASE("twist_and_match sends every level-1600 S3 form to level 800") {
    auto ds = newforms::load_newforms(kDataset);
    int matched = 0;
    for (const auto& f : ds.forms) {
        if (f.level != 1600 || newforms::classify_newform(f) != NewformClass::S3) continue;
        CHECK(twist_and_match(f, ds) == 800);
        ++matched;
    }
    CHECK(matched == 10);
    // twisting twice returns the original odd coefficients
    const auto& f = find_form(ds, "f1600-s3-a");
    for (long n : {3L, 7L, 9L, 11L, 21L}) {
        auto an = f.a_gaussian(n);
        GaussianElt tw = chi8()(Int(n)) * *an;
        GaussianElt back = chi8()(Int(n)) * tw;
        CHECK(back == *an);
    }
    // CM input rejected
    CHECK_THROWS(twist_and_match(find_form(ds, "f1600-s1-a"), ds));
}

TEST_CASE("s3_eliminate") {
    auto ds = newforms::load_newforms(kDataset);
    S3Route route2{{0, 4}};
    S3Route route3{{0, 4, 6}};
    // d = 2: Carayol, empty exceptional set
    {
        auto r = s3_eliminate(find_form(ds, "f1600-s3-a"), 2, ds, route2);
        CHECK(r.method == Method::TwistCarayol);
        CHECK(r.exceptional.empty());
        CHECK(!r.inconclusive);
    }
    // d = 3, level 800 with a_3 = +-(2i-2): exceptional {2}
    {
        auto r = s3_eliminate(find_form(ds, "f800-s3-d"), 3, ds, route3);
        CHECK(r.method == Method::TraceAt3);
        CHECK(to_set(r.exceptional) == std::set<long>{2});
    }
    // d = 3, level 1600: the exponent-6 branch forces the trace route
    {
        auto r = s3_eliminate(find_form(ds, "f1600-s3-a"), 3, ds, route3);
        CHECK(r.method == Method::TraceAt3);
    }
    // d = 3, level 1600 with no exponent-6 branch: Carayol
    {
        auto r = s3_eliminate(find_form(ds, "f1600-s3-a"), 3, ds, route2);
        CHECK(r.method == Method::TwistCarayol);
    }
}

TEST_CASE("assemble_theorem") {
    auto ds = newforms::load_newforms(kDataset);
    auto t2 = assemble_theorem(2, ds);
    CHECK(t2.p_lower_bound == 13);
    CHECK(t2.density == 0.25);
    CHECK(t2.sound);
    REQUIRE(t2.conditions.size() == 2);
    CHECK(t2.conditions[0].modulus == 4);
    CHECK(t2.conditions[0].residues == std::set<long>{1});
    CHECK(t2.conditions[1].modulus == 5);
    CHECK(t2.conditions[1].residues == std::set<long>{1, 4});
    // levels 1600, 400, 100 only: 30 classes
    CHECK(t2.per_form.size() == 30);

    auto t3 = assemble_theorem(3, ds);
    CHECK(t3.p_lower_bound == 73);
    CHECK(t3.density == 0.5);
    CHECK(t3.sound);
    REQUIRE(t3.conditions.size() == 1);
    CHECK(t3.conditions[0].modulus == 4);
    CHECK(t3.conditions[0].residues == std::set<long>{1});
    CHECK(t3.per_form.size() == 44);

    // every form consumed exactly once
    std::set<std::string> ids;
    for (const auto& r : t3.per_form) CHECK(ids.insert(r.form_id).second);

    CHECK_THROWS(assemble_theorem(4, ds));
}

TEST_CASE("eligible primes") {
    auto e2 = eligible_primes_serial(2, Int(100));
    CHECK(e2.primes == std::vector<long>{29, 41, 61, 89});
    auto e3 = eligible_primes_serial(3, Int(120));
    CHECK(e3.primes == std::vector<long>{89, 97, 101, 109, 113});
    CHECK_THROWS(eligible_primes_serial(2, Int(50)));

    auto big2 = eligible_primes_serial(2, Int(200000));
    CHECK(big2.within_tolerance);
    CHECK(std::abs(big2.density - 0.25) < 0.02);
    auto big3 = eligible_primes_serial(3, Int(200000));
    CHECK(std::abs(big3.density - 0.5) < 0.02);
}

TEST_CASE("inconclusive flags instead of silent passes") {
    auto ds = newforms::load_newforms(kDataset);
    // a quartic-field record whose a_3 literally has the shape t - ti
    {
        newforms::NewformRecord fake = find_form(ds, "f400-s2-a");
        fake.id = "fake-s2";
        fake.an[3] = NFElt::from_gaussian(fake.ctx, GaussianElt(Rat(1), Rat(-1)));
        auto r = s2_exceptional_primes(fake);
        CHECK(r.inconclusive);
    }
    // a Q(i) record with a_3 = 0: the P3 trace equals the curve trace -18
    {
        newforms::NewformRecord fake = find_form(ds, "f800-s3-a");
        fake.id = "fake-s3";
        fake.an[3] = NFElt::zero(fake.ctx);
        auto r = trace_at_3_eliminate(fake);
        CHECK(r.inconclusive);
    }
}
