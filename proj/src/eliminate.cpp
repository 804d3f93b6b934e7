#include "quintic/eliminate.hpp"

#include "quintic/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quintic {
namespace eliminate {

using newforms::Dataset;
using newforms::NewformClass;
using newforms::NewformRecord;

TwistShape inner_twist_shape(long q) {
    long r = ((q % 20) + 20) % 20;
    if (std::gcd(r, 20L) != 1) throw std::domain_error("inner_twist_shape: q shares a factor with 20");
    switch (r) {
        case 1: case 19: return TwistShape::T;
        case 9: case 11: return TwistShape::IT;
        case 3: case 17: return TwistShape::TMinusIT;
        default: return TwistShape::TPlusIT;  // 7, 13
    }
}

GaussianElt shape_value(TwistShape s, long t) {
    Rat tr(t);
    switch (s) {
        case TwistShape::T: return GaussianElt(tr, Rat(0));
        case TwistShape::IT: return GaussianElt(Rat(0), tr);
        case TwistShape::TMinusIT: return GaussianElt(tr, -tr);
        case TwistShape::TPlusIT: return GaussianElt(tr, tr);
    }
    throw std::logic_error("shape_value");
}

std::string shape_name(TwistShape s) {
    switch (s) {
        case TwistShape::T: return "t";
        case TwistShape::IT: return "it";
        case TwistShape::TMinusIT: return "t-it";
        case TwistShape::TPlusIT: return "t+it";
    }
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
        case Method::CMSplitCartan: return "CM-split-Cartan";
        case Method::InnerTwistA3: return "inner-twist-a3";
        case Method::TraceAt3: return "trace-at-3";
        case Method::TwistCarayol: return "twist-Carayol";
    }
    return "?";
}

bool CongruenceCondition::satisfied_by(const Int& p) const {
    Int r = ((p % modulus) + modulus) % modulus;
    return residues.count(mpz_get_si(r.get_mpz_t())) > 0;
}

namespace {

std::vector<Int> prime_divisors_of_rational(const Rat& x) {
    std::set<Int> primes;
    Int num(abs(Int(x.get_num())));
    if (Int(x.get_den()) != 1) throw std::logic_error("exceptional norm is not an integer");
    if (num == 0) throw std::logic_error("prime_divisors_of_rational: zero");
    for (auto& [p, e] : factor_trial(num, Int(1000000))) primes.insert(p);
    return {primes.begin(), primes.end()};
}

void merge_primes(std::vector<Int>& into, const std::vector<Int>& more) {
    for (const auto& p : more)
        if (std::find(into.begin(), into.end(), p) == into.end()) into.push_back(p);
    std::sort(into.begin(), into.end());
}

}  // namespace

EliminationResult s1_conditions(const NewformRecord& f, int d) {
    if (newforms::classify_newform(f) != NewformClass::S1)
        throw std::domain_error("s1_conditions: form is not of class S1");
    EliminationResult res;
    res.form_id = f.id;
    res.method = Method::CMSplitCartan;
    if (f.cm_disc == -4) {
        // eliminated when p splits in Q(i), i.e. p = 1 mod 4 (and p > 13)
        res.congruences.push_back({4, {1}});
        res.notes = "CM by Q(i): excluded for p = 1 mod 4, p > 13";
        return res;
    }
    // CM by Q(sqrt-5)
    if (d == 3) {
        auto a3 = f.a_gaussian(3);
        bool pm_i_minus_1 = a3 && (*a3 == GaussianElt(Rat(-1), Rat(1)) || *a3 == GaussianElt(Rat(1), Rat(-1)));
        if (pm_i_minus_1) {
            EliminationResult tr = trace_at_3_eliminate(f);
            tr.notes = "CM by Q(sqrt-5) with a3 = +-(i-1): eliminated through the P3 trace";
            return tr;
        }
        res.inconclusive = true;
        res.notes = "CM by Q(sqrt-5) but a3 != +-(i-1); no trace route";
        return res;
    }
    // d = 2: eliminated when p is a square in Q(sqrt-5) as well: p = +-1 mod 5
    res.congruences.push_back({5, {1, 4}});
    res.notes = "CM by Q(sqrt-5): excluded for p = +-1 mod 5, p > 13";
    return res;
}

EliminationResult s2_exceptional_primes(const NewformRecord& f) {
    if (newforms::classify_newform(f) != NewformClass::S2)
        throw std::domain_error("s2_exceptional_primes: form is not of class S2");
    EliminationResult res;
    res.form_id = f.id;
    res.method = Method::InnerTwistA3;
    const NFElt& c3 = f.a(3);

    for (long t = -2; t <= 2; ++t) {
        // main norm: Nm(c3 - (t - ti))
        NFElt target = NFElt::from_gaussian(f.ctx, shape_value(TwistShape::TMinusIT, t));
        Rat n1 = (c3 - target).norm();
        if (n1 == 0) {
            res.inconclusive = true;
            res.notes = "c3 is literally of shape t - ti (t = " + std::to_string(t) + ")";
            return res;
        }
        merge_primes(res.exceptional, prime_divisors_of_rational(n1));
        // fourth-power cross-check: Nm(c3^4 + 4 t^4)
        Rat t4(t);
        t4 = t4 * t4 * t4 * t4;
        Rat n2 = (c3.pow(4) + NFElt::from_rat(f.ctx, 4 * t4)).norm();
        if (n2 != 0) merge_primes(res.exceptional, prime_divisors_of_rational(n2));
    }
    // drop the unit norms' empty contribution; keep set sorted
    std::sort(res.exceptional.begin(), res.exceptional.end());
    return res;
}

GaussianElt hecke_trace_81(const GaussianElt& a3) {
    // alpha^4 + beta^4 = e1^4 - 4 e1^2 e2 + 2 e2^2 with e1 = a3, e2 = eps_bar(3)*3 = -3i
    GaussianElt e1 = a3;
    GaussianElt e2 = Rat(3) * epsilon_bar()(Int(3));
    GaussianElt e1sq = e1 * e1;
    return e1sq * e1sq - Rat(4) * (e1sq * e2) + Rat(2) * (e2 * e2);
}

EliminationResult trace_at_3_eliminate(const NewformRecord& f) {
    auto a3 = f.a_gaussian(3);
    if (!a3) throw std::domain_error("trace_at_3_eliminate: a_3 does not lie in Q(i) for " + f.id);
    EliminationResult res;
    res.form_id = f.id;
    res.method = Method::TraceAt3;
    GaussianElt diff = hecke_trace_81(*a3) + GaussianElt(18);
    if (diff.is_zero()) {
        res.inconclusive = true;
        res.notes = "a_{P3}(f) = -18 matches the curve trace";
        return res;
    }
    res.exceptional = prime_divisors_of_rational(diff.norm());
    // Nm over Q(i) of a rational r is r^2; report the sharp radical
    return res;
}

long twist_and_match(const NewformRecord& f, const Dataset& ds) {
    if (newforms::classify_newform(f) != NewformClass::S3)
        throw std::domain_error("twist_and_match: form is not of class S3");
    if (f.level != 1600) throw std::domain_error("twist_and_match: form must have level 1600");
    long bound = newforms::sturm_bound(1600, 2);

    // twisted coefficients at n coprime to 2 (chi8 kills even n)
    std::vector<GaussianElt> twisted(bound + 1);
    for (long n = 1; n <= bound; n += 2) {
        auto an = f.a_gaussian(n);
        if (!an) throw std::domain_error("twist_and_match: coefficients of " + f.id + " not in Q(i)");
        twisted[n] = chi8()(Int(n)) * *an;
    }

    std::vector<const NewformRecord*> matches;
    for (const auto& g : ds.forms) {
        if (g.field_degree() != 2) continue;
        bool same = true;
        for (long n = 1; n <= bound && same; n += 2) {
            auto gn = g.a_gaussian(n);
            if (!gn || !(*gn == twisted[n])) same = false;
        }
        if (same) matches.push_back(&g);
    }
    if (matches.empty()) throw std::domain_error("twist_and_match: no dataset match for " + f.id + " (x) chi8");
    if (matches.size() > 1) throw std::domain_error("twist_and_match: multiple dataset matches for " + f.id);
    return matches[0]->level;
}

EliminationResult s3_eliminate(const NewformRecord& f, int d, const Dataset& ds, const S3Route& route) {
    if (newforms::classify_newform(f) != NewformClass::S3)
        throw std::domain_error("s3_eliminate: form is not of class S3");
    EliminationResult res;
    res.form_id = f.id;

    if (d == 2) {
        long twisted_level = twist_and_match(f, ds);
        if (twisted_level != 800)
            throw std::domain_error("s3_eliminate: twisted level is not 800 for " + f.id);
        // the twisted curve representation lives at level 400 or 100; a
        // congruence with the level-800 twisted newform contradicts the
        // level-lowering constraint
        for (long e : route.twist2_exponents) {
            long lvl = (e == 4) ? 400 : (e == 0) ? 100 : -1;
            if (lvl < 0) {
                res.inconclusive = true;
                res.notes = "unexpected twist conductor exponent " + std::to_string(e);
                return res;
            }
            long v2_800 = 5, v2_lvl = (lvl == 400) ? 4 : 2;
            if (!(v2_lvl < v2_800)) {
                res.inconclusive = true;
                res.notes = "level-lowering constraint does not apply";
                return res;
            }
        }
        res.method = Method::TwistCarayol;
        res.notes = "f (x) chi8 has level 800; the twisted representation has level 400 or 100";
        return res;
    }

    // d = 3
    if (f.level == 800) return trace_at_3_eliminate(f);
    if (f.level != 1600) throw std::domain_error("s3_eliminate: unexpected S3 level for " + f.id);
    long twisted_level = twist_and_match(f, ds);
    if (twisted_level != 800) throw std::domain_error("s3_eliminate: twisted level is not 800 for " + f.id);
    bool need_trace = false;
    for (long e : route.twist2_exponents)
        if (e == 6) need_trace = true;
    if (!need_trace) {
        res.method = Method::TwistCarayol;
        res.notes = "twist conductor exponent differs from 6 in every branch";
        return res;
    }
    // exponent 6 branch: the twisted curve agrees with E_gamma mod P3, so the
    // trace argument applies to f (x) chi8 at level 800; its a_3 is the
    // chi8(3)-twist of a_3(f), and the P3 trace only depends on a_3 up to sign
    EliminationResult tr = trace_at_3_eliminate(f);
    tr.method = Method::TraceAt3;
    tr.notes = "twist conductor exponent 6: eliminated through the P3 trace of the chi8-twist";
    return tr;
}

TheoremReport assemble_theorem(int d, const Dataset& ds) {
    if (d != 2 && d != 3) throw std::domain_error("assemble_theorem: d must be 2 or 3");
    TheoremReport rep;
    rep.d = d;
    rep.p_lower_bound = (d == 2) ? 13 : 73;
    if (d == 2) {
        rep.conditions.push_back({4, {1}});
        rep.conditions.push_back({5, {1, 4}});
        rep.density = 0.25;
    } else {
        rep.conditions.push_back({4, {1}});
        rep.density = 0.5;
    }

    std::set<long> levels = (d == 2) ? std::set<long>{1600, 400, 100} : std::set<long>{1600, 800, 400, 100};
    // twist conductor exponents the elimination has to cover (P2-exponent of
    // E_{gamma,2}): {0,4} plus, for the odd-a+b branch of d=3, possibly 6
    S3Route route;
    route.twist2_exponents = (d == 2) ? std::vector<long>{0, 4} : std::vector<long>{0, 4, 6};

    for (const auto& f : ds.forms) {
        if (!levels.count(f.level)) continue;
        NewformClass c = newforms::classify_newform(f);
        EliminationResult r;
        switch (c) {
            case NewformClass::S1: r = s1_conditions(f, d); break;
            case NewformClass::S2: r = s2_exceptional_primes(f); break;
            case NewformClass::S3: r = s3_eliminate(f, d, ds, route); break;
        }
        if (r.inconclusive)
            throw std::domain_error("assemble_theorem: inconclusive elimination for " + f.id + ": " + r.notes);
        rep.per_form.push_back(std::move(r));
    }

    // soundness: every p satisfying the theorem conditions is eliminated for
    // every form
    rep.sound = true;
    for (const auto& r : rep.per_form) {
        // the form's own congruences must be implied by the theorem conditions
        for (const auto& need : r.congruences) {
            bool implied = false;
            for (const auto& have : rep.conditions)
                if (have.modulus % need.modulus == 0 || need.modulus == have.modulus) {
                    // check inclusion on residues mod lcm
                    long m = std::lcm(need.modulus, have.modulus);
                    bool incl = true;
                    for (long x = 0; x < m; ++x) {
                        if (std::gcd(x, m) != 1) continue;
                        if (have.satisfied_by(Int(x)) && !need.satisfied_by(Int(x))) incl = false;
                    }
                    if (incl) implied = true;
                }
            if (!implied) rep.sound = false;
        }
        for (const auto& p : r.exceptional) {
            bool excluded = (p <= rep.p_lower_bound);
            for (const auto& cond : rep.conditions)
                if (!cond.satisfied_by(p)) excluded = true;
            if (!excluded) {
                rep.sound = false;
            } else if (p > rep.observed_max_exceptional) {
                rep.observed_max_exceptional = p;
            }
        }
    }
    if (!rep.sound) throw std::domain_error("assemble_theorem: stated conditions do not eliminate every form");
    return rep;
}

namespace {

bool eligible(int d, long p) {
    if (d == 2) return p > 13 && p % 4 == 1 && (p % 5 == 1 || p % 5 == 4);
    return p > 73 && p % 4 == 1;
}

EligibleReport finish_report(int d, const Int& X, unsigned long count, unsigned long pix,
                             std::vector<long> primes) {
    EligibleReport rep;
    rep.d = d;
    rep.X = X;
    rep.count = count;
    rep.pi_x = pix;
    rep.primes = std::move(primes);
    rep.density = pix ? double(count) / double(pix) : 0;
    rep.target = (d == 2) ? 0.25 : 0.5;
    rep.tolerance = std::max(0.02, 2.0 / std::sqrt(double(std::max<unsigned long>(pix, 1))));
    rep.within_tolerance = std::abs(rep.density - rep.target) <= rep.tolerance;
    return rep;
}

std::vector<bool> sieve_up_to(long n) {
    std::vector<bool> s(n + 1, true);
    if (n >= 0) s[0] = false;
    if (n >= 1) s[1] = false;
    for (long i = 2; i * i <= n; ++i)
        if (s[i])
            for (long j = i * i; j <= n; j += i) s[j] = false;
    return s;
}

}  // namespace

EligibleReport eligible_primes_serial(int d, const Int& X) {
    if (X < 100) throw std::domain_error("eligible_primes: X must be >= 100");
    long n = mpz_get_si(X.get_mpz_t());
    auto s = sieve_up_to(n);
    unsigned long count = 0, pix = 0;
    std::vector<long> primes;
    for (long p = 2; p <= n; ++p) {
        if (!s[p]) continue;
        ++pix;
        if (eligible(d, p)) {
            ++count;
            if (n <= 10000) primes.push_back(p);
        }
    }
    return finish_report(d, X, count, pix, std::move(primes));
}

EligibleReport eligible_primes(int d, const Int& X) {
    if (X < 100) throw std::domain_error("eligible_primes: X must be >= 100");
    long n = mpz_get_si(X.get_mpz_t());
    auto s = sieve_up_to(n);
    long count = 0, pix = 0;
#pragma omp parallel for schedule(static) reduction(+ : count, pix)
    for (long p = 2; p <= n; ++p) {
        if (!s[p]) continue;
        ++pix;
        if (eligible(d, p)) ++count;
    }
    std::vector<long> primes;
    if (n <= 10000)
        for (long p = 2; p <= n; ++p)
            if (s[p] && eligible(d, p)) primes.push_back(p);
    return finish_report(d, X, (unsigned long)count, (unsigned long)pix, std::move(primes));
}

}  // namespace eliminate
}  // namespace quintic
