// Compares the OpenMP kernels against their serial reference implementations
// on representative workloads: residue scans, solution search, point counting
// and the eligible-prime sieve.

#include "quintic/counting.hpp"
#include "quintic/descent.hpp"
#include "quintic/eliminate.hpp"
#include "quintic/frey.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace quintic;

namespace {

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, same ? "outputs match" : "OUTPUT MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP with %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    {
        descent::LemmaScanReport a, b;
        double ts = time_ms([&] { a = descent::lemma_scan_serial(4000); });
        double tp = time_ms([&] { b = descent::lemma_scan(4000); });
        row("lemma residue scan (4000)", ts, tp, a.ok == b.ok && a.pairs_checked == b.pairs_checked);
    }
    {
        descent::SearchResult a, b;
        double ts = time_ms([&] { a = descent::search_solutions_serial(2, 17, 400); });
        double tp = time_ms([&] { b = descent::search_solutions(2, 17, 400); });
        bool same = a.hits.size() == b.hits.size() && a.pairs_scanned == b.pairs_scanned;
        row("solution search (H=400)", ts, tp, same);
    }
    {
        // point counting over a split-prime residue field of size ~ 10^6
        auto E = frey::frey_twist(Int(1), Int(2));
        Int p(999000);
        bool done = false;
        while (!done) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            if (p % 20 != 1) continue;  // fully split primes only
            for (const auto& P : PrimeLocalization::above(p)) {
                if (P.f != 1) continue;
                auto rd = tate::tate_local(E, P);
                if (rd.f != 0) break;  // bad reduction; try the next prime
                auto R = counting::reduce(rd.minimal_model, P);
                Int a, b;
                double ts = time_ms([&] { a = counting::count_points_serial(R); });
                double tp = time_ms([&] { b = counting::count_points(R); });
                row("point count (q ~ 10^6)", ts, tp, a == b);
                done = true;
                break;
            }
        }
    }
    {
        eliminate::EligibleReport a, b;
        double ts = time_ms([&] { a = eliminate::eligible_primes_serial(2, Int(20000000)); });
        double tp = time_ms([&] { b = eliminate::eligible_primes(2, Int(20000000)); });
        row("eligible sieve (2*10^7)", ts, tp, a.count == b.count && a.pi_x == b.pi_x);
    }
    return 0;
}
