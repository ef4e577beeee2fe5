#include "farey/sweeps.hpp"

#include <numeric>
#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "farey/expand.hpp"
#include "farey/path.hpp"

#ifdef FAREY_HAVE_OPENMP
#include <omp.h>
#endif

namespace farey {

std::vector<Rational> vertices_in_window(const Modulus& n, const Rational& lo,
                                         const Rational& hi, long qmax) {
    std::vector<Rational> out;
    for (long q = n.value(); q <= qmax; q += n.value()) {
        // num/q in [lo, hi]
        mpz_class nmin, nmax, t;
        t = lo.num() * q;
        mpz_cdiv_q(nmin.get_mpz_t(), t.get_mpz_t(), lo.den().get_mpz_t());
        t = hi.num() * q;
        mpz_fdiv_q(nmax.get_mpz_t(), t.get_mpz_t(), hi.den().get_mpz_t());
        for (mpz_class num = nmin; num <= nmax; ++num) {
            if (gcd(num, mpz_class(q)) == 1)
                out.emplace_back(num, q);
        }
    }
    return out;
}

std::vector<Edge> edges_in_window(const Modulus& n, const Rational& lo,
                                  const Rational& hi, long qmax) {
    std::vector<Edge> out;
    for (const Rational& gate : gates_in_window(n, lo, hi))
        out.push_back(Edge::make(gate, Rational::infinity()));
    for (const Rational& v : vertices_in_window(n, lo, hi, qmax)) {
        for (const Rational& w : neighbors_bounded(v, n, qmax)) {
            if (w.is_infinity())
                continue;   // already covered through the gates
            if (w < v || w < lo || hi < w)
                continue;   // canonical direction and window
            out.push_back(Edge::make(v, w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

CrossingReport crossing_scan_impl(const Modulus& n, const Rational& lo, const Rational& hi,
                                  long qmax, bool parallel) {
    std::vector<Edge> edges = edges_in_window(n, lo, hi, qmax);
    CrossingReport report;
    report.edges = edges.size();
    long m = static_cast<long>(edges.size());
    report.pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;
    std::vector<std::pair<Edge, Edge>> violations;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long i = 0; i < m; ++i) {
        for (long j = i + 1; j < m; ++j) {
            if (edges_cross(edges[i], edges[j])) {
#pragma omp critical
                violations.emplace_back(edges[i], edges[j]);
            }
        }
    }
    std::sort(violations.begin(), violations.end(), [](const auto& a, const auto& b) {
        if (a.first < b.first)
            return true;
        if (b.first < a.first)
            return false;
        return a.second < b.second;
    });
    report.violations = std::move(violations);
    return report;
}

} // namespace

CrossingReport no_crossing_scan(const Modulus& n, const Rational& lo, const Rational& hi,
                                long qmax) {
    return crossing_scan_impl(n, lo, hi, qmax, true);
}

CrossingReport no_crossing_scan_serial(const Modulus& n, const Rational& lo,
                                       const Rational& hi, long qmax) {
    return crossing_scan_impl(n, lo, hi, qmax, false);
}

namespace {

std::vector<Rational> unit_interval_vertices(long n, long den_max) {
    Modulus mod(n);
    std::vector<Rational> out;
    for (long q = n; q <= den_max; q += n) {
        for (long num = 0; num < q; ++num) {
            if (std::gcd(num, q) == 1)
                out.emplace_back(num, q);
        }
    }
    return out;
}

TreeReport tree_scan_impl(int l, long den_max, bool parallel) {
    long n = prime_power_value(2, l);
    std::vector<Rational> xs = unit_interval_vertices(n, den_max);
    TreeReport report;
    report.vertices = xs.size();
    std::vector<std::string> failures;
    long m = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long i = 0; i < m; ++i) {
        const Rational& x = xs[i];
        std::string fail;
        try {
            ExpansionSet set = enumerate_expansions(x, 2, l);
            if (set.expansions.size() != 1) {
                fail = x.str() + ": " + std::to_string(set.expansions.size()) + " expansions";
            } else {
                mpz_class gate = 2 * mul(RealInput(x), RealInput(mpq_class(n / 2))).floor() + 1;
                if (set.expansions[0].b != gate)
                    fail = x.str() + ": gate " + set.expansions[0].b.get_str() +
                           " != closed form " + gate.get_str();
            }
        } catch (const std::exception& e) {
            fail = x.str() + ": " + e.what();
        }
        if (!fail.empty()) {
#pragma omp critical
            failures.push_back(std::move(fail));
        }
    }
    std::sort(failures.begin(), failures.end());
    report.failures = std::move(failures);
    return report;
}

OracleReport oracle_scan_impl(long p, int l, long den_max, bool parallel) {
    long n = prime_power_value(p, l);
    std::vector<Rational> xs = unit_interval_vertices(n, den_max);
    OracleReport report;
    report.vertices = xs.size();
    std::vector<std::string> mismatches;
    std::uint64_t paths = 0;
    long m = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : paths) if (parallel)
    for (long i = 0; i < m; ++i) {
        const Rational& x = xs[i];
        std::string fail;
        try {
            CrossCheckReport r = count_cross_check({x}, p, l);
            paths += r.entries[0].enumerated;
            if (!r.all_match)
                fail = x.str() + ": enumeration " + std::to_string(r.entries[0].enumerated) +
                       " vs search " + std::to_string(r.entries[0].brute);
        } catch (const std::exception& e) {
            fail = x.str() + ": " + e.what();
        }
        if (!fail.empty()) {
#pragma omp critical
            mismatches.push_back(std::move(fail));
        }
    }
    report.paths = paths;
    std::sort(mismatches.begin(), mismatches.end());
    report.mismatches = std::move(mismatches);
    return report;
}

bool prime_power_by_scan(long n) {
    if (n == 1)
        return false;
    for (long p = 2; p <= n; ++p) {
        long m = n;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0)
            return m == 1;   // first prime hit must exhaust n
    }
    return false;
}

ConnectivityReport connectivity_scan_impl(long n_max, bool parallel) {
    ConnectivityReport report;
    report.checked = n_max;
    std::vector<long> bad;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long n = 1; n <= n_max; ++n) {
        bool expected = n == 1 || prime_power_by_scan(n);
        if (is_connected(Modulus(n)) != expected) {
#pragma omp critical
            bad.push_back(n);
        }
    }
    std::sort(bad.begin(), bad.end());
    report.disagreements = std::move(bad);
    return report;
}

SoundnessReport soundness_scan_impl(long p, int l, int count, long max_multiple,
                                    std::uint64_t seed, bool parallel) {
    long n = prime_power_value(p, l);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> mult(1, max_multiple);
    std::vector<Rational> xs;
    xs.reserve(count);
    while (static_cast<int>(xs.size()) < count) {
        long q = n * mult(rng);
        std::uniform_int_distribution<long> nums(-q, 2 * q);
        long num = nums(rng);
        if (std::gcd(std::abs(num), q) != 1)
            continue;
        xs.emplace_back(num, q);
    }
    SoundnessReport report;
    report.tested = xs.size();
    std::vector<std::string> failures;
    long m = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long i = 0; i < m; ++i) {
        const Rational& x = xs[i];
        std::string fail;
        try {
            CFExpansion cf = expand_rational(x, p, l);
            if (evaluate(cf) != x) {
                fail = x.str() + ": expansion value differs";
            } else {
                ExpansionSet set = enumerate_expansions(x, p, l);
                if (std::find(set.expansions.begin(), set.expansions.end(), cf) ==
                    set.expansions.end())
                    fail = x.str() + ": deterministic expansion not in the full set";
            }
        } catch (const std::exception& e) {
            fail = x.str() + ": " + e.what();
        }
        if (!fail.empty()) {
#pragma omp critical
            failures.push_back(std::move(fail));
        }
    }
    std::sort(failures.begin(), failures.end());
    report.failures = std::move(failures);
    return report;
}

} // namespace

TreeReport tree_uniqueness_scan(int l, long den_max) { return tree_scan_impl(l, den_max, true); }
TreeReport tree_uniqueness_scan_serial(int l, long den_max) {
    return tree_scan_impl(l, den_max, false);
}

OracleReport oracle_scan(long p, int l, long den_max) {
    return oracle_scan_impl(p, l, den_max, true);
}
OracleReport oracle_scan_serial(long p, int l, long den_max) {
    return oracle_scan_impl(p, l, den_max, false);
}

ConnectivityReport connectivity_scan(long n_max) { return connectivity_scan_impl(n_max, true); }
ConnectivityReport connectivity_scan_serial(long n_max) {
    return connectivity_scan_impl(n_max, false);
}

SoundnessReport soundness_scan(long p, int l, int count, long max_multiple,
                               std::uint64_t seed) {
    return soundness_scan_impl(p, l, count, max_multiple, seed, true);
}
SoundnessReport soundness_scan_serial(long p, int l, int count, long max_multiple,
                                      std::uint64_t seed) {
    return soundness_scan_impl(p, l, count, max_multiple, seed, false);
}

namespace {

ExhaustiveReport exhaustive_impl(long den_max, bool parallel) {
    struct Row {
        long p;
        int l;
        long q;
    };
    std::vector<Row> rows;
    for (auto [p, l] : std::vector<std::pair<long, int>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {5, 2}, {3, 3}, {5, 3}}) {
        long n = prime_power_value(p, l);
        for (long q = n; q <= den_max; q += n)
            rows.push_back({p, l, q});
    }
    ExhaustiveReport report;
    std::vector<std::string> failures;
    std::uint64_t tested = 0;
    long m = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : tested) if (parallel)
    for (long i = 0; i < m; ++i) {
        const Row& row = rows[i];
        for (long num = 1; num < row.q; ++num) {
            if (std::gcd(num, row.q) != 1)
                continue;
            Rational x(num, row.q);
            std::string fail;
            try {
                // expand_rational re-evaluates internally and throws on any
                // mismatch, so completion is the assertion
                expand_rational(x, row.p, row.l);
                ++tested;
            } catch (const std::exception& e) {
                fail = x.str() + " at level " + std::to_string(prime_power_value(row.p, row.l)) +
                       ": " + e.what();
            }
            if (!fail.empty()) {
#pragma omp critical
                failures.push_back(std::move(fail));
            }
        }
    }
    report.tested = tested;
    std::sort(failures.begin(), failures.end());
    report.failures = std::move(failures);
    return report;
}

} // namespace

ExhaustiveReport exhaustive_soundness_scan(long den_max) {
    return exhaustive_impl(den_max, true);
}
ExhaustiveReport exhaustive_soundness_scan_serial(long den_max) {
    return exhaustive_impl(den_max, false);
}

ReachReport bfs_witness_check(const Modulus& n, long qmax) {
    auto [a, b] = disconnection_witness(n);
    ReachReport report{a, b, 0, false};
    Rational gap_lo(a, n.value());
    Rational gap_hi(b, n.value());
    // window wide enough that any path from outside into the gap must pass
    // through it: finite edges span at most 1/N <= 1
    Rational lo(mpz_class(a) - 2 * n.value(), n.value());
    Rational hi(mpz_class(b) + 2 * n.value(), n.value());
    std::set<std::pair<std::string, std::string>> seen;
    std::deque<Rational> queue;
    auto push = [&](const Rational& v) {
        if (seen.insert({v.num().get_str(), v.den().get_str()}).second)
            queue.push_back(v);
    };
    for (const Rational& gate : gates_in_window(n, lo, hi))
        push(gate);
    while (!queue.empty()) {
        Rational v = queue.front();
        queue.pop_front();
        ++report.visited;
        if (gap_lo < v && v < gap_hi)
            report.reached_gap = true;
        for (const Rational& w : neighbors_bounded(v, n, qmax)) {
            if (w.is_infinity() || w < lo || hi < w)
                continue;
            push(w);
        }
    }
    return report;
}

} // namespace farey
