#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quintic/galois.hpp"
#include "quintic/gaussian.hpp"
#include "quintic/localization.hpp"
#include "quintic/oct_field.hpp"
#include "quintic/polynomial.hpp"

#include <random>

using namespace quintic;

namespace {

std::mt19937_64 rng(20250808);

Rat rand_rat() {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

QuadElt rand_quad() { return {rand_rat(), rand_rat()}; }
QuarticElt rand_quartic() { return {rand_rat(), rand_rat(), rand_rat(), rand_rat()}; }
OctElt rand_oct() { return {rand_quartic(), rand_quartic()}; }
GaussianElt rand_gauss() { return {rand_rat(), rand_rat()}; }

}  // namespace

TEST_CASE("omega constants") {
    CHECK(omega() + omega_bar() == QuadElt(-1));
    CHECK(omega() * omega_bar() == QuadElt(-1));
    CHECK(sqrt5() * sqrt5() == QuadElt(5));
}

TEST_CASE("conj_sqrt5 is a multiplicative involution; rationals fixed") {
    CHECK(conj_sqrt5(omega()) == omega_bar());
    CHECK(conj_sqrt5(QuadElt(7)) == QuadElt(7));
    QuadElt z{Rat(2), Rat(1)};  // 2 + sqrt5
    CHECK(z * conj_sqrt5(z) == QuadElt(-1));
    for (int i = 0; i < 50; ++i) {
        QuadElt a = rand_quad(), b = rand_quad();
        CHECK(conj_sqrt5(conj_sqrt5(a)) == a);
        CHECK(conj_sqrt5(a * b) == conj_sqrt5(a) * conj_sqrt5(b));
    }
}

TEST_CASE("ring axioms on random triples") {
    for (int i = 0; i < 40; ++i) {
        QuarticElt a = rand_quartic(), b = rand_quartic(), c = rand_quartic();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == QuarticElt(1));
        OctElt u = rand_oct(), v = rand_oct(), w = rand_oct();
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        if (!u.is_zero()) CHECK(u * u.inverse() == OctElt(1));
        GaussianElt g = rand_gauss(), h = rand_gauss();
        CHECK((g * h).norm() == g.norm() * h.norm());
    }
}

TEST_CASE("embeddings commute with arithmetic") {
    // Q(sqrt5) -> K is a ring homomorphism with sqrt5 = 2 theta^2 - 5
    QuarticElt s5 = QuarticElt::from_quad(sqrt5());
    CHECK(s5 == QuarticElt(Rat(-5), Rat(0), Rat(2), Rat(0)));
    CHECK(s5 * s5 == QuarticElt(5));
    for (int i = 0; i < 50; ++i) {
        QuadElt a = rand_quad(), b = rand_quad();
        CHECK(QuarticElt::from_quad(a * b) == QuarticElt::from_quad(a) * QuarticElt::from_quad(b));
        CHECK(QuarticElt::from_quad(a + b) == QuarticElt::from_quad(a) + QuarticElt::from_quad(b));
    }
}

TEST_CASE("galois group of K") {
    const auto& G = galois_group_K();
    CHECK(G[0].is_identity());
    // some automorphism sends theta to theta^3 - 3 theta
    QuarticElt root{Rat(0), Rat(-3), Rat(0), Rat(1)};
    bool found = false;
    for (const auto& g : G)
        if (g.t1 == root) found = true;
    CHECK(found);
    // each image is a root of x^4 - 5x^2 + 5 (polynomial root-finding oracle)
    for (const auto& g : G) {
        QuarticElt t = g.t1;
        CHECK(t.pow(4) - Rat(5) * t.pow(2) + QuarticElt(5) == QuarticElt(0));
    }
    // distinctness and group structure
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(!(G[i] == G[j]));
    CHECK(G[1].order() == 4);
    KAut s4 = G[1].compose(G[1]).compose(G[1]).compose(G[1]);
    CHECK(s4.is_identity());
    // restriction to Q(sqrt5) is conj or identity
    QuarticElt s5 = QuarticElt::from_quad(sqrt5());
    for (const auto& g : G) {
        QuarticElt im = g(s5);
        CHECK((im == s5 || im == -s5));
    }
    // matrices have rational entries and first column e1
    auto m = G[1].matrix();
    CHECK(m[0][0] == Rat(1));
    CHECK(m[1][0] == Rat(0));
}

TEST_CASE("galois group of K(sqrt-2)") {
    const auto& G = galois_group_K_sqrtm2();
    CHECK(G.size() == 8);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) CHECK(!(G[i] == G[j]));
    CHECK(sigma1().order() == 2);
    CHECK(sigma0().order() == 4);
    OctAut s04 = sigma0();
    for (int i = 0; i < 3; ++i) s04 = s04.compose(sigma0());
    CHECK(s04.is_identity());
    // sigma0 restricted to Q(sqrt5) is the conjugation
    OctElt s5(QuarticElt::from_quad(sqrt5()));
    CHECK(sigma0()(s5) == -s5);
    CHECK(sigma1()(s5) == s5);
    CHECK(sigma1()(OctElt::sqrt_m2()) == -OctElt::sqrt_m2());
    // closure under composition
    for (const auto& g : G)
        for (const auto& h : G) {
            OctAut gh = g.compose(h);
            bool found = false;
            for (const auto& k : G)
                if (k == gh) found = true;
            CHECK(found);
        }
}

TEST_CASE("norms") {
    CHECK(QuarticElt::theta().norm() == Rat(5));
    CHECK(QuarticElt(2).norm() == Rat(16));
    CHECK((GaussianElt::unit_i() - GaussianElt(1)).norm() == Rat(2));
    CHECK(gamma_value().norm() == Rat(5));
    // norm as product of conjugates agrees with the determinant route
    for (int i = 0; i < 30; ++i) {
        QuarticElt z = rand_quartic();
        CHECK(z.norm() == norm_via_conjugates(z));
    }
    // Galois invariance
    for (int i = 0; i < 20; ++i) {
        QuarticElt z = rand_quartic();
        for (const auto& g : galois_group_K()) CHECK(g(z).norm() == z.norm());
    }
    // multiplicativity
    for (int i = 0; i < 20; ++i) {
        QuarticElt a = rand_quartic(), b = rand_quartic();
        CHECK((a * b).norm() == a.norm() * b.norm());
        OctElt u = rand_oct(), v = rand_oct();
        CHECK((u * v).norm() == u.norm() * v.norm());
    }
    // norm of a rational r in a degree-n field is r^n
    OctElt r(Rat(3));
    CHECK(r.norm() == Rat(6561));  // 3^8
}

TEST_CASE("relative norms") {
    CHECK(relative_norm(OctElt(1), sigma0()) == OctElt(1));
    QuarticElt alpha1{Rat(-5), Rat(0), Rat(2), Rat(0)};
    CHECK(relative_norm(OctElt(alpha1), sigma1()) == OctElt(5));
    CHECK(relative_norm(OctElt::sqrt_m2(), sigma1()) == OctElt(2));
}

TEST_CASE("valuations at the ramified primes") {
    const auto& P2 = PrimeLocalization::P2();
    const auto& P5 = PrimeLocalization::P5();
    CHECK(P2.valuation(QuarticElt(2)) == 2);
    CHECK(P5.valuation(QuarticElt::theta()) == 1);
    CHECK(P5.valuation(QuarticElt(5)) == 4);
    CHECK(P2.valuation(P2.uniformizer()) == 1);
    CHECK(P2.norm() == 4);
    CHECK(P5.norm() == 5);
    // gamma = 2 theta^2 - theta - 5
    CHECK(P2.valuation(gamma_value()) == 0);
    CHECK(P5.valuation(gamma_value()) == 1);
    // additivity and ultrametric inequality on random elements
    for (int i = 0; i < 25; ++i) {
        QuarticElt a = rand_quartic(), b = rand_quartic();
        if (a.is_zero() || b.is_zero()) continue;
        for (const auto* P : {&P2, &P5}) {
            long va = P->valuation(a), vb = P->valuation(b);
            CHECK(P->valuation(a * b) == va + vb);
            if (!(a + b).is_zero()) CHECK(P->valuation(a + b) >= std::min(va, vb));
        }
    }
}

TEST_CASE("valuations at unramified primes") {
    const auto& P3 = PrimeLocalization::P3();
    CHECK(P3.e == 1);
    CHECK(P3.f == 4);
    CHECK(P3.norm() == 81);
    CHECK(P3.valuation(gamma_value()) == 0);
    CHECK(P3.valuation(QuarticElt(3)) == 1);
    CHECK(P3.valuation(QuarticElt(Rat(1, 3))) == -1);

    // splitting structure: 11 = 11 mod 20 gives two degree-2 primes;
    // 41 = 1 mod 20 splits completely; 13 = 13 mod 20 is inert
    CHECK(PrimeLocalization::above(Int(11)).size() == 2);
    for (const auto& P : PrimeLocalization::above(Int(11))) CHECK(P.f == 2);
    CHECK(PrimeLocalization::above(Int(41)).size() == 4);
    for (const auto& P : PrimeLocalization::above(Int(41))) CHECK(P.f == 1);
    CHECK(PrimeLocalization::above(Int(13)).size() == 1);
    CHECK(PrimeLocalization::above(Int(13))[0].f == 4);
}

TEST_CASE("norm valuation equals sum of local valuations") {
    for (const Int& q : {Int(2), Int(5), Int(3), Int(11), Int(41), Int(13)}) {
        auto locs = primes_above(q);
        for (int i = 0; i < 15; ++i) {
            QuarticElt z = rand_quartic();
            if (z.is_zero()) continue;
            long total = 0;
            for (const auto& P : locs) total += P.f * P.valuation(z);
            CHECK(total == vp(z.norm(), q));
        }
    }
}

TEST_CASE("residues") {
    const auto& P2 = PrimeLocalization::P2();
    const auto& P5 = PrimeLocalization::P5();
    const auto& P3 = PrimeLocalization::P3();

    CHECK(P5.residue(QuarticElt::theta()).is_zero());
    CHECK(P3.residue(QuarticElt(5)) == P3.res_field.from_u64(5));
    CHECK_THROWS(P5.residue(QuarticElt(Rat(1, 5))));
    CHECK_THROWS(P2.residue(QuarticElt(Rat(1, 2))));

    // residue is a ring homomorphism (100 random pairs, each prime)
    auto int_quartic = [&]() {
        std::uniform_int_distribution<long> d(-50, 50);
        return QuarticElt{Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
    };
    for (const auto* P : {&P2, &P5, &P3}) {
        for (int i = 0; i < 100; ++i) {
            QuarticElt a = int_quartic(), b = int_quartic();
            CHECK(P->residue(a + b) == P->res_field.add(P->residue(a), P->residue(b)));
            CHECK(P->residue(a * b) == P->res_field.mul(P->residue(a), P->residue(b)));
        }
    }

    // lift is a section of residue
    for (const auto* P : {&P2, &P5, &P3}) {
        for (u64 k = 0; k < std::min<u64>(P->res_field.num_elems(), 30); ++k) {
            FqElem e = P->res_field.elem_at(k);
            CHECK(P->residue(P->lift(e)) == e);
        }
    }

    // ramified denominators: residue of (theta^2-theta-1)^2 / 2 is a unit residue
    QuarticElt pi2 = P2.uniformizer();
    QuarticElt z = pi2 * pi2 * QuarticElt(Rat(1, 2));
    CHECK(P2.valuation(z) == 0);
    CHECK(!P2.residue(z).is_zero());
    QuarticElt z5 = QuarticElt::theta().pow(4) * QuarticElt(Rat(1, 5));
    CHECK(P5.valuation(z5) == 0);
    CHECK(!P5.residue(z5).is_zero());
}

TEST_CASE("frobenius fixes exactly the prime field") {
    const auto& P3 = PrimeLocalization::P3();
    const Fq& F = P3.res_field;
    int fixed = 0;
    for (u64 k = 0; k < F.num_elems(); ++k) {
        FqElem e = F.elem_at(k);
        if (F.pow(e, Int(3)) == e) ++fixed;
    }
    CHECK(fixed == 3);
}

TEST_CASE("norm agrees with the resultant route") {
    // Nm(theta) = Res(x^4 - 5x^2 + 5, x) = 5, the constant term
    Poly<Rat> f(std::vector<Rat>{Rat(5), Rat(0), Rat(-5), Rat(0), Rat(1)});
    CHECK(resultant(f, Poly<Rat>::x()) == Rat(5));
    // and on random elements: Nm(z) = Res(f, z-as-polynomial)
    for (int i = 0; i < 25; ++i) {
        QuarticElt z = rand_quartic();
        if (z.is_zero()) continue;
        Poly<Rat> h(std::vector<Rat>{z.c[0], z.c[1], z.c[2], z.c[3]});
        CHECK(resultant(f, h) == z.norm());
    }
}
