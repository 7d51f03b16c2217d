#include "torsurg/catalog.hpp"
#include "torsurg/homsearch.hpp"

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

// Compares the serial reference kernels with the OpenMP ones: hom enumeration
// into Q8 over the rank-6 closed presentation, and the full Theorem-4.1 sweep.

using namespace torsurg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP not enabled; both columns run serially\n";
#endif

    const ManifoldModel m = builtin_M();
    const Presentation closed = closed_pi1(m, {});
    const FiniteGroup q8 = quaternion_q8();

    auto t0 = Clock::now();
    const auto serial = enumerate_homs_serial(closed, q8);
    auto t1 = Clock::now();
    const auto parallel = enumerate_homs(closed, q8);
    auto t2 = Clock::now();
    std::cout << "hom enumeration (8^6 assignments, " << serial.size() << " homs): serial "
              << seconds(t0, t1) << "s, parallel " << seconds(t1, t2) << "s, match "
              << (serial == parallel ? "yes" : "NO") << "\n";

    const std::vector<long long> ps{-1, 2, 3};
    const auto catalog = group_catalog("q8");
    t0 = Clock::now();
    const SweepTable s1 = reproduce_theorem41_serial(ps, catalog);
    t1 = Clock::now();
    const SweepTable s2 = reproduce_theorem41(ps, catalog);
    t2 = Clock::now();
    bool match = s1.rows.size() == s2.rows.size();
    for (std::size_t i = 0; match && i < s1.rows.size(); ++i)
        match = s1.rows[i].subset == s2.rows[i].subset &&
                verdict_name(s1.rows[i].verdict) == verdict_name(s2.rows[i].verdict);
    std::cout << "classification sweep (" << s1.rows.size() << " rows): serial "
              << seconds(t0, t1) << "s, parallel " << seconds(t1, t2) << "s, match "
              << (match ? "yes" : "NO") << "\n";
    return 0;
}
