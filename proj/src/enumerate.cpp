#include "farey/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "farey/expand.hpp"

namespace farey {

bool cf_less(const CFExpansion& a, const CFExpansion& b) {
    if (a.b != b.b)
        return a.b < b.b;
    size_t k = std::min(a.terms.size(), b.terms.size());
    for (size_t i = 0; i < k; ++i) {
        if (a.terms[i].eps != b.terms[i].eps)
            return a.terms[i].eps < b.terms[i].eps;
        if (a.terms[i].a != b.terms[i].a)
            return a.terms[i].a < b.terms[i].a;
    }
    return a.terms.size() < b.terms.size();
}

namespace {

struct RationalKey {
    mpz_class num, den;
    bool operator<(const RationalKey& o) const {
        int c = cmp(num, o.num);
        if (c != 0)
            return c < 0;
        return den < o.den;
    }
};

RationalKey key_of(const Rational& v) {
    return {v.num(), v.den()};
}

using PathSet = std::vector<PathTheta>;

const PathSet& well_directed_paths(const Rational& x, const Modulus& mod,
                                   std::map<RationalKey, PathSet>& memo) {
    auto it = memo.find(key_of(x));
    if (it != memo.end())
        return it->second;
    PathSet out;
    if (x.den() == mod.value()) {
        out.push_back(PathTheta{mod, {Rational::infinity(), x}});
    } else {
        for (const Rational& pred : neighbors_below(x, mod)) {
            for (const PathTheta& prefix : well_directed_paths(pred, mod, memo)) {
                PathTheta cand = prefix;
                cand.vertices.push_back(x);
                if (is_well_directed(cand))
                    out.push_back(std::move(cand));
            }
        }
    }
    return memo.emplace(key_of(x), std::move(out)).first->second;
}

} // namespace

ExpansionSet enumerate_expansions(const Rational& x, long p, int l) {
    Modulus mod(prime_power_value(p, l));
    if (x.is_infinity() || !in_xn(x, mod))
        throw std::domain_error(x.str() + " is not a finite vertex of F_" +
                                std::to_string(mod.value()));
    std::map<RationalKey, PathSet> memo;
    ExpansionSet out{x, mod, {}};
    for (const PathTheta& path : well_directed_paths(x, mod, memo))
        out.expansions.push_back(path_to_cf(path));
    std::sort(out.expansions.begin(), out.expansions.end(), cf_less);
    return out;
}

namespace {

// |q - x| <= 1/den(q), the reach bound every increasing path into x obeys
bool within_reach(const Rational& q, const Rational& x) {
    mpz_class diff = abs(q.num() * x.den() - x.num() * q.den());
    return diff <= x.den();
}

void extend_search(const PathTheta& path, const Rational& x, const Modulus& mod,
                   std::vector<PathTheta>& found) {
    const Rational& v = path.last();
    if (v == x) {
        found.push_back(path);
        return;
    }
    for (const Rational& q : neighbors_bounded(v, mod, x.den().get_si())) {
        if (q.is_infinity() || q.den() <= v.den() || !within_reach(q, x))
            continue;
        PathTheta cand = path;
        cand.vertices.push_back(q);
        if (is_well_directed(cand))
            extend_search(cand, x, mod, found);
    }
}

} // namespace

std::vector<PathTheta> brute_force_paths(const Rational& x, long p, int l, long den_guard) {
    Modulus mod(prime_power_value(p, l));
    if (x.is_infinity() || !in_xn(x, mod))
        throw std::domain_error(x.str() + " is not a finite vertex of F_" +
                                std::to_string(mod.value()));
    if (x.den() > den_guard)
        throw std::domain_error("denominator beyond the search guard");
    std::vector<PathTheta> found;
    // gates within reach: |b/N - x| <= 1/N
    Rational low(x.num() * mod.value() - x.den(), x.den() * mod.value());
    Rational high(x.num() * mod.value() + x.den(), x.den() * mod.value());
    for (const Rational& gate : gates_in_window(mod, low, high)) {
        PathTheta start{mod, {Rational::infinity(), gate}};
        extend_search(start, x, mod, found);
    }
    auto by_vertices = [](const PathTheta& a, const PathTheta& b) {
        return std::lexicographical_compare(
            a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
            [](const Rational& u, const Rational& v) {
                return key_of(u) < key_of(v);
            });
    };
    std::sort(found.begin(), found.end(), by_vertices);
    return found;
}

CrossCheckReport count_cross_check(const std::vector<Rational>& sample, long p, int l) {
    CrossCheckReport report{{}, true};
    for (const Rational& x : sample) {
        ExpansionSet set = enumerate_expansions(x, p, l);
        std::vector<PathTheta> brute = brute_force_paths(x, p, l);
        bool match = set.expansions.size() == brute.size();
        if (match) {
            std::vector<PathTheta> mapped;
            mapped.reserve(set.expansions.size());
            for (const CFExpansion& cf : set.expansions)
                mapped.push_back(cf_to_path(cf));
            for (const PathTheta& path : mapped) {
                if (std::find(brute.begin(), brute.end(), path) == brute.end()) {
                    match = false;
                    break;
                }
            }
        }
        report.entries.push_back({x, set.expansions.size(), brute.size(), match});
        report.all_match = report.all_match && match;
    }
    return report;
}

} // namespace farey
