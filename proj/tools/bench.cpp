// Timing comparison of the serial reference kernels against the OpenMP ones.

#include <chrono>
#include <cstdio>
#include <functional>

#include <CLI11.hpp>

#include "farey/sweeps.hpp"

#ifdef FAREY_HAVE_OPENMP
#include <omp.h>
#endif

using namespace farey;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel sweep kernels"};
    long qmax_scale = 30;
    long tree_den = 512;
    long oracle_den = 150;
    int soundness_count = 200;
    app.add_option("--qmax-scale", qmax_scale, "crossing scan bound as multiple of N");
    app.add_option("--tree-den", tree_den, "tree scan denominator bound");
    app.add_option("--oracle-den", oracle_den, "oracle scan denominator bound");
    app.add_option("--count", soundness_count, "soundness sample count");
    CLI11_PARSE(app, argc, argv);

#ifdef FAREY_HAVE_OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serial code\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        Modulus mod(5);
        Rational lo(-1), hi(2);
        long q = qmax_scale * 5;
        double s = time_ms([&] { no_crossing_scan_serial(mod, lo, hi, q); });
        double par = time_ms([&] { no_crossing_scan(mod, lo, hi, q); });
        row("no-crossing N=5", s, par);
    }
    {
        double s = time_ms([&] { tree_uniqueness_scan_serial(1, tree_den); });
        double par = time_ms([&] { tree_uniqueness_scan(1, tree_den); });
        row("tree uniqueness l=1", s, par);
    }
    {
        double s = time_ms([&] { oracle_scan_serial(5, 1, oracle_den); });
        double par = time_ms([&] { oracle_scan(5, 1, oracle_den); });
        row("oracle N=5", s, par);
    }
    {
        double s = time_ms([&] { soundness_scan_serial(5, 1, soundness_count, 64, 1); });
        double par = time_ms([&] { soundness_scan(5, 1, soundness_count, 64, 1); });
        row("soundness N=5", s, par);
    }
    {
        double s = time_ms([&] { connectivity_scan_serial(10000); });
        double par = time_ms([&] { connectivity_scan(10000); });
        row("connectivity N<=10^4", s, par);
    }
    return 0;
}
