// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Run from the repository root (the dataset path is data/newforms.json).

#include "quintic/characters.hpp"
#include "quintic/counting.hpp"
#include "quintic/descent.hpp"
#include "quintic/eliminate.hpp"
#include "quintic/frey.hpp"
#include "quintic/newforms.hpp"
#include "quintic/quer.hpp"
#include "quintic/tate.hpp"
#include "quintic/weil.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <set>

using namespace quintic;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::mt19937_64 rng(20260808);

std::pair<Int, Int> random_coprime(long H, long mult = 1) {
    std::uniform_int_distribution<long> d(-H, H);
    for (;;) {
        long a = d(rng), b = d(rng);
        if (a == 0 && b == 0) continue;
        if (mult > 1 && ((a + b) % mult != 0 || a + b == 0)) continue;
        Int A(a), B(b), g;
        mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
        if (g == 1) return {A, B};
    }
}

}  // namespace

int main() {
    // 1. descent lemma scan up to 1000
    {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = descent::lemma_scan(1000);
        double secs = seconds_since(t0);
        bool ok = rep.ok && secs < 60.0;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "lemma scan to 1000: %ld primes, %llu residue pairs, %.2fs (< 60s)",
                      rep.primes_checked, (unsigned long long)rep.pairs_checked, secs);
        line(1, ok, buf);
    }

    // 2. discriminant identity on 1000 random coprime pairs up to 10^4
    {
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            auto [a, b] = random_coprime(10000);
            ok = frey::discriminant_check(a, b).ok;
        }
        line(2, ok, "Delta(E) = 2^6 conj(w) phi phi1 exactly on 1000 random pairs, |a|,|b| <= 10^4");
    }

    // 3. isogeny identities on 20 random pairs
    {
        bool ok = true;
        for (int i = 0; i < 20 && ok; ++i) {
            auto [a, b] = random_coprime(300);
            auto r = frey::verify_isogeny(a, b);
            ok = r.mu_ok && r.mu_hat_ok && r.degree2_ok && r.dual_is_pm2_ok;
        }
        line(3, ok, "2-isogeny mu and dual verify symbolically on 20 random pairs");
    }

    // 4. conductors at the witness pairs + the twist-by-2 exponent set
    {
        bool ok = true;
        auto p11 = tate::conductor_profile(Int(1), Int(1), 2);
        ok = ok && p11.e2 == 8 && p11.e5 == 2;
        auto p35 = tate::conductor_profile(Int(3), Int(5), 2);
        ok = ok && p35.e2 == 4 && p35.e5 == 2;
        auto p1m1 = tate::conductor_profile(Int(1), Int(-1), 2);
        ok = ok && p1m1.e2 == 4 && p1m1.e5 == 0;
        auto p12 = tate::conductor_profile(Int(1), Int(2), 3);
        ok = ok && (p12.e2 == 8 || p12.e2 == 6) && p12.e5 == 2;
        bool tw_ok = tate::twist2_conductor_at_2(Int(1), Int(1)).in_expected_set &&
                     tate::twist2_conductor_at_2(Int(5), Int(1)).in_expected_set &&
                     tate::twist2_conductor_at_2(Int(3), Int(-1)).in_expected_set;
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "(1,1)->P2^%ld P5^%ld, (3,5)->P2^%ld P5^%ld, (1,-1)->P2^%ld P5^%ld, (1,2)->P2^%ld "
                      "P5^%ld; twist-by-2 exponents in {0,4}",
                      p11.e2, p11.e5, p35.e2, p35.e5, p1m1.e2, p1m1.e5, p12.e2, p12.e5);
        line(4, ok && tw_ok, buf);
    }

    // 5. restriction-of-scalars bookkeeping
    {
        bool milne_ok = true;
        using descent::EquationTag;
        using weil::Nu2Class;
        for (EquationTag tag : {EquationTag::Eq4, EquationTag::Eq5})
            for (Nu2Class nu : {Nu2Class::Zero, Nu2Class::One, Nu2Class::Two, Nu2Class::ThreePlus})
                for (const auto& ne : weil::curve_conductor_cases(tag, nu)) {
                    auto nb = weil::milne_conductor(ne);
                    long want5 = (tag == EquationTag::Eq4) ? 8 : 6;
                    if (nb.e2 != 2 * ne.e2 + 8 || nb.e5 != want5 || nb.c0exp != 4) milne_ok = false;
                }
        std::set<long> levels;
        for (EquationTag tag : {EquationTag::Eq4, EquationTag::Eq5})
            for (Nu2Class nu : {Nu2Class::Zero, Nu2Class::One, Nu2Class::Two, Nu2Class::ThreePlus})
                levels.insert(weil::serre_parameters(tag, nu).level);
        bool levels_ok = levels == std::set<long>{100, 400, 800, 1600};

        auto diags = weil::conductor_table_diagnostics();
        bool found_eq5_zero = false, found_eq4_three = false;
        int mism = 0;
        for (const auto& d : diags) {
            if (!d.consistent) ++mism;
            if (d.tag == EquationTag::Eq5 && d.nu2 == Nu2Class::Zero && !d.consistent &&
                d.row_product == weil::ConductorIdeal{20, 5, 4})
                found_eq5_zero = true;
            if (d.tag == EquationTag::Eq4 && d.nu2 == Nu2Class::ThreePlus && !d.consistent &&
                d.row_product == weil::ConductorIdeal{24, 8, 4})
                found_eq4_three = true;
        }
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "Milne reproduces all 8 restriction conductors; Serre levels {100,400,800,1600}; the "
                      "(eq5,nu2=0) and (eq4,nu2>=3) product findings reported (%d rows flagged)",
                      mism);
        line(5, milne_ok && levels_ok && found_eq5_zero && found_eq4_three, buf);
    }

    // 6. splitting character and embedding problem
    {
        const auto& eps = epsilon();
        bool eps_ok = eps.order() == 4 && eps.conductor() == 20 &&
                      epsilon_bar()(Int(3)) == GaussianElt(Rat(0), Rat(-1));
        auto cc = quer::cocycle_table_check();
        auto er = quer::embedding_verify();
        auto sp = quer::splitting_map_check();
        bool ok = eps_ok && cc.cocycle_ok && cc.normalized_ok && cc.degree_ok && er.ok && sp.all_rational &&
                  sp.cocycle_ok && sp.zeta == Rat(-1);
        line(6, ok,
             "eps has order 4 and conductor 20 with conj(eps)(3) = -i; 64 cocycle identities; "
             "N_{s0}(a0) = -1, N_{s1}(a1) = 5, compatibility, zeta = -1");
    }

    // 7. trace facts
    {
        bool traces_ok = true;
        for (int i = 0; i < 200 && traces_ok; ++i) {
            auto [a, b] = random_coprime(500, 3);
            auto r = counting::trace_at_P3(a, b);
            traces_ok = (r.count == 100 && r.trace == -18);
        }
        bool pinned = eliminate::hecke_trace_81(GaussianElt(Rat(-2), Rat(2))) == GaussianElt(14) &&
                      eliminate::hecke_trace_81(GaussianElt(Rat(-1), Rat(1))) == GaussianElt(2);
        bool oracle_ok = true;
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        int tested = 0;
        while (tested < 100 && oracle_ok) {
            double re = u(rng) * 3.4, im = u(rng) * 3.4;
            if (re * re + im * im > 12.0) continue;
            Rat rre(long(re * 64), 64), rim(long(im * 64), 64);
            rre.canonicalize();
            rim.canonicalize();
            GaussianElt a3(rre, rim);
            GaussianElt exact = eliminate::hecke_trace_81(a3);
            std::complex<double> e1(rre.get_d(), rim.get_d()), e2(0, -3);
            std::complex<double> disc = std::sqrt(e1 * e1 - 4.0 * e2);
            std::complex<double> alpha = (e1 + disc) / 2.0, beta = (e1 - disc) / 2.0;
            std::complex<double> want = std::pow(alpha, 4) + std::pow(beta, 4);
            std::complex<double> got(exact.re.get_d(), exact.im.get_d());
            oracle_ok = std::abs(got - want) < 1e-9 * std::max(1.0, std::abs(want));
            ++tested;
        }
        line(7, traces_ok && pinned && oracle_ok,
             "a_P3(E_gamma) = -18 on 200 random pairs with 3 | a+b (count 100 over F81); trace values 14 and "
             "2; numeric-root oracle to 1e-9 on 100 inputs");
    }

    // 8. elimination end-to-end on the bundled dataset
    {
        bool ok = true;
        std::string what;
        try {
            auto ds = newforms::load_newforms("data/newforms.json");
            int s1 = 0, s2 = 0, s3 = 0;
            for (long lvl : {1600L, 400L, 100L}) {
                s1 += ds.census.count(lvl, newforms::NewformClass::S1);
                s2 += ds.census.count(lvl, newforms::NewformClass::S2);
                s3 += ds.census.count(lvl, newforms::NewformClass::S3);
            }
            ok = ok && s1 == 8 && s2 == 12 && s3 == 10;
            ok = ok && ds.census.count(800, newforms::NewformClass::S2) == 4 &&
                 ds.census.count(800, newforms::NewformClass::S3) == 10 &&
                 ds.census.count(800, newforms::NewformClass::S1) == 0;

            int twisted = 0;
            for (const auto& f : ds.forms)
                if (f.level == 1600 && newforms::classify_newform(f) == newforms::NewformClass::S3 &&
                    eliminate::twist_and_match(f, ds) == 800)
                    ++twisted;
            ok = ok && twisted == 10;

            // the pinned S2 exceptional sets
            for (const auto& f : ds.forms) {
                if (newforms::classify_newform(f) != newforms::NewformClass::S2) continue;
                auto r = eliminate::s2_exceptional_primes(f);
                if (r.inconclusive) ok = false;
                bool is_x2_10i = (f.field_poly == std::vector<Int>{Int(100), Int(0), Int(0), Int(0), Int(1)});
                for (const auto& p : r.exceptional) {
                    if (is_x2_10i && p > 5) ok = false;       // eliminated for p > 5
                    if (f.level == 800 && p > 73) ok = false;  // eliminated for p > 73
                }
            }

            auto t2 = eliminate::assemble_theorem(2, ds);
            ok = ok && t2.sound && t2.p_lower_bound == 13 && t2.conditions.size() == 2 &&
                 t2.conditions[0].modulus == 4 && t2.conditions[0].residues == std::set<long>{1} &&
                 t2.conditions[1].modulus == 5 && t2.conditions[1].residues == std::set<long>{1, 4};
            auto t3 = eliminate::assemble_theorem(3, ds);
            ok = ok && t3.sound && t3.p_lower_bound == 73 && t3.conditions.size() == 1 &&
                 t3.conditions[0].modulus == 4 && t3.conditions[0].residues == std::set<long>{1};
            what =
                "census 8/12/10 (+4 S2, 10 S3 at 800); 10 twists land at level 800; x^2+10i excluded for p > "
                "5 and the level-800 family for p > 73; conditions {p>13, 1 mod 4, +-1 mod 5} and {p>73, 1 "
                "mod 4}";
        } catch (const std::exception& e) {
            ok = false;
            what = std::string("dataset pipeline threw: ") + e.what();
        }
        line(8, ok, what);
    }

    // 9. exhaustive search at height 200
    {
        auto t0 = std::chrono::steady_clock::now();
        auto r2 = descent::search_solutions(2, 17, 200);
        auto r3 = descent::search_solutions(3, 17, 200);
        double secs = seconds_since(t0);
        bool only_trivial = true;
        for (const auto& h : r2.hits) only_trivial = only_trivial && h.trivial;
        for (const auto& h : r3.hits) only_trivial = only_trivial && h.trivial;
        bool ok = only_trivial && r2.hits.size() == 2 && secs < 120.0;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "search d=2,3 with p=17, H=200: only trivial solutions (%zu + %zu hits), %.2fs (< 120s)",
                      r2.hits.size(), r3.hits.size(), secs);
        line(9, ok, buf);
    }

    // 10. densities at 10^6
    {
        auto e2 = eliminate::eligible_primes(2, Int(1000000));
        auto e3 = eliminate::eligible_primes(3, Int(1000000));
        bool ok = std::abs(e2.density - 0.25) <= 0.02 && std::abs(e3.density - 0.5) <= 0.02;
        char buf[160];
        std::snprintf(buf, sizeof buf, "densities to 10^6: %.4f vs 0.25 and %.4f vs 0.5 (tolerance 0.02)",
                      e2.density, e3.density);
        line(10, ok, buf);
    }

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILURE" : "SUCCESS", failures);
    return failures ? 1 : 0;
}
