// End-to-end acceptance: one case per shipped guarantee, each printing a
// pass/fail line with its runtime.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <set>

#include "farey/enumerate.hpp"
#include "farey/expand.hpp"
#include "farey/path.hpp"
#include "farey/sweeps.hpp"

using namespace farey;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int id, const char* what, bool pass, double secs) {
    std::printf("criterion %2d: %s  (%.2fs)  %s\n", id, pass ? "PASS" : "FAIL", secs, what);
    std::fflush(stdout);
    CHECK(pass);
}

} // namespace

TEST_CASE("1: golden enumeration of 11/40 over F_5") {
    Timer t;
    ExpansionSet set = enumerate_expansions(Rational(11, 40), 5, 1);
    std::set<std::string> got;
    for (const CFExpansion& cf : set.expansions)
        got.insert(cf_text(cf));
    std::set<std::string> expected{
        "1/0+ 5/1+ 1/2+ 1/1+ 1/1+ 1/1",
        "1/0+ 5/1+ 1/2+ 1/2+ -1/2",
        "1/0+ 5/1+ 1/2+ 1/1+ 1/2",
        "1/0+ 5/1+ 1/3+ -1/2+ 1/1",
        "1/0+ 5/1+ 1/3+ -1/3",
        "1/0+ 5/2+ -1/2+ -1/2+ 1/2",
        "1/0+ 5/2+ -1/2+ -1/3+ -1/2",
        "1/0+ 5/2+ -1/2+ -1/2+ 1/1+ 1/1",
    };
    bool pass = set.expansions.size() == 8 && got == expected;
    double secs = t.seconds();
    report(1, "the eight expansions of 11/40", pass && secs < 1.0, secs);
}

TEST_CASE("2: golden uniqueness of 7/20 over F_5") {
    Timer t;
    ExpansionSet set = enumerate_expansions(Rational(7, 20), 5, 1);
    bool pass = set.expansions.size() == 1 && set.expansions[0].b == 2;
    double secs = t.seconds();
    report(2, "single expansion of 7/20 with gate 2", pass && secs < 1.0, secs);
}

TEST_CASE("3: well-directedness vectors over F_3") {
    Timer t;
    PathTheta good = parse_path("inf -> 1/3 -> 2/9 -> 5/21", Modulus(3));
    PathTheta bad = parse_path("inf -> 1/3 -> 1/6 -> 2/9 -> 5/21", Modulus(3));
    bool pass = is_well_directed(good) && !is_well_directed(bad) &&
                make_well_directed(bad) == good;
    report(3, "accepts the short path, rejects and repairs the detour", pass, t.seconds());
}

TEST_CASE("4: the F_25 vector evaluating to 2/75") {
    Timer t;
    CFExpansion cf = parse_cf("1/0+ 25/1+ -1/2+ 1/1");
    ConvergentSeq seq = convergents(cf);
    bool pass = evaluate(cf) == Rational(2, 75) && seq.last_index() == 2 &&
                seq.value(0) == Rational(1, 25) && seq.value(1) == Rational(1, 50) &&
                seq.value(2) == Rational(2, 75);
    report(4, "convergents 1/25, 1/50, 2/75", pass, t.seconds());
}

TEST_CASE("5: uniqueness and gate law over the trees F_2, F_4, F_8") {
    Timer t;
    bool pass = true;
    std::uint64_t total = 0;
    for (int l : {1, 2, 3}) {
        TreeReport r = tree_uniqueness_scan(l, 512);
        pass = pass && r.failures.empty();
        total += r.vertices;
    }
    double secs = t.seconds();
    std::string what = "unique expansions for " + std::to_string(total) + " dyadic vertices";
    report(5, what.c_str(), pass && secs < 30.0, secs);
}

TEST_CASE("6: enumeration matches forward search elementwise") {
    Timer t;
    bool pass = true;
    std::uint64_t total = 0;
    for (auto [p, l] : std::vector<std::pair<long, int>>{{3, 1}, {5, 1}, {3, 2}, {5, 2}}) {
        OracleReport r = oracle_scan(p, l, 200);
        pass = pass && r.mismatches.empty();
        total += r.vertices;
    }
    double secs = t.seconds();
    std::string what = "bijection on " + std::to_string(total) + " vertices at levels 3, 5, 9, 25";
    report(6, what.c_str(), pass && secs < 120.0, secs);
}

TEST_CASE("7: exact error identity along surd expansions") {
    Timer t;
    bool pass = true;
    RealInput sqrt2 = RealInput::surd(0, 1, 2);
    RealInput golden = RealInput::surd(mpq_class(1, 2), mpq_class(1, 2), 5);
    for (const RealInput& x : {sqrt2, golden}) {
        for (auto [p, l] : std::vector<std::pair<long, int>>{{5, 1}, {3, 2}}) {
            RealExpansion rx = expand_real(x, p, l, 20);
            pass = pass && !rx.exact && !validate_cf(rx.cf).has_value();
            ConvergentSeq seq = convergents(rx.cf);
            std::vector<RealInput> ys = fins_prefix(rx.cf, x);
            pass = pass && ys.back() == rx.residual_fin;
            RealInput prev_err = RealInput(mpq_class(0));
            for (long n = 0; n <= seq.last_index(); ++n) {
                // error_term itself checks the identity between the direct
                // difference and N|y|/(q_n(q_n + y q_{n-1})) exactly
                RealInput err = error_term(seq, n, ys[n]);
                if (n > 0)
                    pass = pass && err < prev_err;
                prev_err = err;
                pass = pass && seq.at(n).second > seq.at(n - 1).second;
            }
        }
    }
    double secs = t.seconds();
    report(7, "20-term expansions of sqrt(2) and the golden ratio over F_5, F_9",
           pass && secs < 10.0, secs);
}

TEST_CASE("8: connectivity classification and unreachable gaps") {
    Timer t;
    ConnectivityReport r = connectivity_scan(10000);
    bool pass = r.disagreements.empty();
    for (long n : {6L, 10L, 12L, 15L}) {
        ReachReport rr = bfs_witness_check(Modulus(n), 100 * n);
        pass = pass && !rr.reached_gap && rr.visited > 0;
    }
    double secs = t.seconds();
    report(8, "prime-power law to 10^4; witness gaps never reached", pass && secs < 60.0,
           secs);
}

TEST_CASE("9: no two edges cross") {
    Timer t;
    bool pass = true;
    std::uint64_t pairs = 0;
    for (long n : {1L, 3L, 5L, 9L}) {
        CrossingReport r = no_crossing_scan(Modulus(n), Rational(-1), Rational(2), 40 * n);
        pass = pass && r.violations.empty();
        pairs += r.pairs;
    }
    double secs = t.seconds();
    std::string what = std::to_string(pairs) + " edge pairs in [-1,2] at levels 1, 3, 5, 9";
    report(9, what.c_str(), pass && secs < 60.0, secs);
}

TEST_CASE("10: deterministic expander is sound and canonical") {
    Timer t;
    bool pass = true;
    std::uint64_t tested = 0;
    for (auto [p, l] : std::vector<std::pair<long, int>>{
             {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {5, 2}, {3, 3}}) {
        SoundnessReport r = soundness_scan(p, l, 500, 48, 20250811);
        pass = pass && r.failures.empty();
        tested += r.tested;
    }
    double secs = t.seconds();
    std::string what = std::to_string(tested) + " random vertices across seven levels";
    report(10, what.c_str(), pass && secs < 60.0, secs);
}
