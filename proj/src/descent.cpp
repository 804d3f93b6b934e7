#include "quintic/descent.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quintic {
namespace descent {

Int phi(const Int& a, const Int& b) {
    Int a2 = a * a, b2 = b * b;
    return a2 * a2 - a2 * a * b + a2 * b2 - a * b2 * b + b2 * b2;
}

std::pair<QuadElt, QuadElt> phi12(const Int& a, const Int& b) {
    QuadElt ab(Rat(a * b));
    QuadElt s(Rat(a * a + b * b));
    QuadElt p1 = s + omega() * ab;
    QuadElt p2 = s + omega_bar() * ab;
    return {p1, p2};
}

IdentityReport verify_phi_identities(long H) {
    IdentityReport rep;
    for (long a = -H; a <= H; ++a) {
        for (long b = -H; b <= H; ++b) {
            Int A(a), B(b);
            auto [p1, p2] = phi12(A, B);
            QuadElt prod = p1 * p2;
            Int ph = phi(A, B);
            bool ok1 = prod.is_rational() && prod.x == Rat(ph);
            Int s = A + B;
            QuadElt lhs(Rat(s * s));
            QuadElt rhs = -(omega_bar() * p1) - omega() * p2;
            bool ok2 = lhs == rhs;
            ++rep.pairs_checked;
            if (!(ok1 && ok2)) {
                rep.ok = false;
                std::ostringstream os;
                os << "(" << a << ", " << b << ")";
                rep.failure = os.str();
                return rep;
            }
        }
    }
    return rep;
}

namespace {

std::vector<long> primes_up_to(long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<long> out;
    for (long i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

long phi_mod(long a, long b, long l) {
    auto m = [l](long x) { return ((x % l) + l) % l; };
    long a2 = m(a * a), b2 = m(b * b);
    long t = m(a2 * a2) + m(l - m(m(a2 * a) * b)) + m(a2 * b2) + m(l - m(a * m(b2 * b))) + m(b2 * b2);
    return t % l;
}

long pow5_mod(long x, long l) {
    long x2 = ((x * x) % l + l) % l;
    return ((x2 * x2 % l) * (((x % l) + l) % l)) % l;
}

// check one prime; phi and a^5+b^5 are homogeneous, so the projective pairs
// (1, u) and (0, 1) cover every coprime residue pair up to scalars
bool check_prime(long l, unsigned long long& pairs, std::string& cex) {
    auto fail = [&](long a, long b) {
        std::ostringstream os;
        os << "(l=" << l << ", a=" << a << ", b=" << b << ")";
        cex = os.str();
        return false;
    };
    std::vector<std::pair<long, long>> reps;
    reps.reserve(l + 1);
    for (long u = 0; u < l; ++u) reps.emplace_back(1, u);
    reps.emplace_back(0, 1);
    for (auto [a, b] : reps) {
        ++pairs;
        long ph = phi_mod(a, b, l);
        long s = ((a + b) % l + l) % l;
        long quint = (pow5_mod(a, l) + pow5_mod(b, l)) % l;
        if (s == 0 && ph == 0 && l != 5) return fail(a, b);            // (i)
        if (l % 5 != 1 && quint == 0 && s != 0) return fail(a, b);     // (ii)
        if (l != 5 && l % 5 != 1 && ph == 0) return fail(a, b);        // (iii)
    }
    if (l == 5) {
        // v5(phi) = 1 whenever 5 | a+b: phi != 0 mod 25 on coprime pairs
        for (long a = 0; a < 25; ++a) {
            for (long b = 0; b < 25; ++b) {
                if (a % 5 == 0 && b % 5 == 0) continue;
                if ((a + b) % 5 != 0) continue;
                ++pairs;
                long ph25 = 0;
                {
                    auto m = [](long x) { return ((x % 25) + 25) % 25; };
                    long a2 = m(a * a), b2 = m(b * b);
                    ph25 = (m(a2 * a2) + m(25 - m(m(a2 * a) * b)) + m(a2 * b2) + m(25 - m(a * m(b2 * b))) +
                            m(b2 * b2)) %
                           25;
                }
                if (ph25 % 5 != 0) return fail(a, b);
                if (ph25 % 25 == 0) return fail(a, b);
            }
        }
    }
    return true;
}

}  // namespace

LemmaScanReport lemma_scan_serial(long l_max) {
    if (l_max < 7) throw std::domain_error("lemma_scan: l_max must be >= 7");
    LemmaScanReport rep;
    rep.l_max = l_max;
    auto ps = primes_up_to(l_max);
    rep.primes_checked = long(ps.size());
    for (long l : ps) {
        if (!check_prime(l, rep.pairs_checked, rep.counterexample)) {
            rep.ok = false;
            return rep;
        }
    }
    return rep;
}

LemmaScanReport lemma_scan(long l_max) {
    if (l_max < 7) throw std::domain_error("lemma_scan: l_max must be >= 7");
    LemmaScanReport rep;
    rep.l_max = l_max;
    auto ps = primes_up_to(l_max);
    rep.primes_checked = long(ps.size());
    bool ok = true;
    unsigned long long pairs = 0;
    std::string cex;
#pragma omp parallel
    {
        unsigned long long my_pairs = 0;
        std::string my_cex;
        bool my_ok = true;
#pragma omp for schedule(dynamic, 16) nowait
        for (long i = 0; i < long(ps.size()); ++i) {
            if (!my_ok) continue;
            if (!check_prime(ps[i], my_pairs, my_cex)) my_ok = false;
        }
#pragma omp critical
        {
            pairs += my_pairs;
            if (!my_ok && ok) {
                ok = false;
                cex = my_cex;
            }
        }
    }
    rep.pairs_checked = pairs;
    rep.ok = ok;
    rep.counterexample = cex;
    return rep;
}

SolutionCase classify_solution(const Int& a, const Int& b, int d, unsigned long p, bool strict,
                               const Int& trial_bound) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) throw std::domain_error("classify_solution: gcd(a,b) != 1");
    if (d != 2 && d != 3) throw std::domain_error("classify_solution: d must be 2 or 3");
    Int s = a + b;
    if (s != 0 && s % d != 0) throw std::domain_error("classify_solution: d does not divide a+b");

    SolutionCase sc;
    sc.a = a;
    sc.b = b;
    sc.d = d;
    sc.p = p;
    sc.nu2 = (s == 0) ? kNuInfinity : vp(s, 2);
    sc.nu5 = (s == 0) ? kNuInfinity : vp(s, 5);
    bool five_divides = (s == 0) || (s % 5 == 0);
    sc.tag = five_divides ? EquationTag::Eq5 : EquationTag::Eq4;

    Int ph = phi(a, b);
    long v5 = vp(ph, 5);
    Int cof = ph / int_pow(Int(5), (unsigned long)v5);
    bool complete = true;
    Int tail;
    auto fs = factor_trial(cof, trial_bound, &tail);
    Int rad = 1;
    for (auto& [q, e] : fs) rad *= q;
    sc.c0_radical = rad;
    sc.c0_complete = (tail == 1);
    sc.c0_tail = tail;
    (void)complete;

    if (p >= 2) {
        auto root = perfect_pth_root(cof, p);
        sc.cofactor_is_pth_power = root.has_value();
        if (strict && !sc.cofactor_is_pth_power)
            throw std::domain_error("classify_solution: phi cofactor is not a p-th power");
    }
    return sc;
}

namespace {

// scan the band a+b = s for fixed s (multiples of d only, by Lemma 2.2)
void scan_band(long s, long H, int d, unsigned long p, std::vector<SearchHit>& hits, long& degen,
               unsigned long long& scanned) {
    for (long a = -H; a <= H; ++a) {
        long b = s - a;
        if (b < -H || b > H) continue;
        Int A(a), B(b), g;
        mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
        if (g != 1) continue;
        ++scanned;
        if (s == 0) {
            ++degen;  // a^5 + b^5 = 0; only z = 0 works
            continue;
        }
        Int lhs = A * A * A * A * A + B * B * B * B * B;
        if (lhs % d != 0) continue;
        Int zp = lhs / d;
        auto z = perfect_pth_root(zp, p);
        if (!z) continue;
        SearchHit h;
        h.a = A;
        h.b = B;
        h.z = *z;
        h.trivial = (*z == 1 || *z == -1);
        hits.push_back(std::move(h));
    }
}

void sort_hits(std::vector<SearchHit>& hits) {
    std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
}

}  // namespace

SearchResult search_solutions_serial(int d, unsigned long p, long H) {
    if (H < 1) throw std::domain_error("search_solutions: H must be >= 1");
    if (!is_probable_prime(Int(p))) throw std::domain_error("search_solutions: p must be prime");
    SearchResult res;
    for (long s = -2 * H; s <= 2 * H; s += 1) {
        if (s % d != 0) continue;
        scan_band(s, H, d, p, res.hits, res.degenerate_pairs, res.pairs_scanned);
    }
    sort_hits(res.hits);
    return res;
}

SearchResult search_solutions(int d, unsigned long p, long H) {
    if (H < 1) throw std::domain_error("search_solutions: H must be >= 1");
    if (!is_probable_prime(Int(p))) throw std::domain_error("search_solutions: p must be prime");
    SearchResult res;
    std::vector<long> bands;
    for (long s = -2 * H; s <= 2 * H; ++s)
        if (s % d == 0) bands.push_back(s);
#pragma omp parallel
    {
        std::vector<SearchHit> my_hits;
        long my_degen = 0;
        unsigned long long my_scanned = 0;
#pragma omp for schedule(dynamic, 8) nowait
        for (long i = 0; i < long(bands.size()); ++i)
            scan_band(bands[i], H, d, p, my_hits, my_degen, my_scanned);
#pragma omp critical
        {
            for (auto& h : my_hits) res.hits.push_back(std::move(h));
            res.degenerate_pairs += my_degen;
            res.pairs_scanned += my_scanned;
        }
    }
    sort_hits(res.hits);
    return res;
}

}  // namespace descent
}  // namespace quintic
