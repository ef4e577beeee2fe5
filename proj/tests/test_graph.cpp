#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "farey/graph.hpp"
#include "farey/path.hpp"

using namespace farey;

TEST_CASE("modulus factorization and classification") {
    CHECK(Modulus(1).factorization().empty());
    CHECK(Modulus(1).connected());
    CHECK_FALSE(Modulus(1).prime_power().has_value());

    auto pl = Modulus(27).prime_power();
    REQUIRE(pl.has_value());
    CHECK(pl->first == 3);
    CHECK(pl->second == 3);

    CHECK_FALSE(Modulus(6).prime_power().has_value());
    CHECK(Modulus(9).connected());
    CHECK_FALSE(Modulus(6).connected());
    CHECK_THROWS_AS(Modulus(0), std::domain_error);
}

TEST_CASE("modular inverses") {
    CHECK(mod_inverse(3L, 5L) == 2);
    CHECK(mod_inverse(2L, 3L) == 2);
    CHECK(mod_inverse(7L, 5L) == 3);
    // oracle: exhaustive search
    for (long a = 1; a < 5; ++a) {
        long inv = mod_inverse(a, 5L);
        long brute = 0;
        for (long c = 1; c < 5; ++c)
            if (a * c % 5 == 1)
                brute = c;
        CHECK(inv == brute);
    }
    CHECK_THROWS_AS(mod_inverse(10L, 5L), std::domain_error);
}

TEST_CASE("vertex membership") {
    CHECK(in_xn(Rational(5, 21), Modulus(3)));
    CHECK_FALSE(in_xn(Rational(1, 2), Modulus(5)));
    CHECK_FALSE(in_xn(Rational(5, 10), Modulus(5)));   // reduces to 1/2
    CHECK(in_xn(Rational::infinity(), Modulus(7)));
}

TEST_CASE("adjacency") {
    CHECK(adjacent(Rational(1, 3), Rational(2, 9), Modulus(3)));
    CHECK_FALSE(adjacent(Rational::infinity(), Rational(7, 25), Modulus(5)));
    CHECK(adjacent(Rational::infinity(), Rational(7, 5), Modulus(5)));
    CHECK(adjacent(Rational(3, 10), Rational(4, 15), Modulus(5)));
    CHECK_FALSE(adjacent(Rational(1, 5), Rational(7, 25), Modulus(5)));
}

namespace {

// oracle: all neighbors of x with denominator below den(x), by full scan
std::vector<Rational> scan_below(const Rational& x, long n) {
    std::vector<Rational> out;
    Modulus mod(n);
    for (long s = n; mpz_class(s) < x.den(); s += n) {
        for (mpz_class num = x.num() * s / x.den() - 2; num <= x.num() * s / x.den() + 2;
             ++num) {
            Rational cand(num, s);
            if (cand.den() == s && in_xn(cand, mod) && adjacent(x, cand, mod))
                out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("neighbors below") {
    auto nb = neighbors_below(Rational(11, 40), Modulus(5));
    CHECK(nb == scan_below(Rational(11, 40), 5));
    CHECK(nb == std::vector<Rational>{Rational(4, 15), Rational(7, 25)});

    nb = neighbors_below(Rational(5, 21), Modulus(3));
    CHECK(nb == scan_below(Rational(5, 21), 3));
    CHECK(nb == std::vector<Rational>{Rational(2, 9)});

    nb = neighbors_below(Rational(7, 20), Modulus(5));
    CHECK(nb == scan_below(Rational(7, 20), 5));
    CHECK(nb == std::vector<Rational>{Rational(2, 5)});

    CHECK_THROWS_AS(neighbors_below(Rational(1, 5), Modulus(5)), std::domain_error);
}

TEST_CASE("bounded neighbors") {
    // oracle: the definition scan, which also finds 1/10 next to 1/5
    auto nb = neighbors_bounded(Rational(1, 5), Modulus(5), 15);
    std::vector<Rational> expect{Rational(1, 10), Rational(2, 15), Rational(4, 15),
                                 Rational(3, 10), Rational(2, 5), Rational::infinity()};
    CHECK(nb == expect);
    for (size_t i = 0; i + 1 < nb.size(); ++i)
        CHECK(adjacent(Rational(1, 5), nb[i], Modulus(5)));

    nb = neighbors_bounded(Rational(1, 3), Modulus(3), 3);
    CHECK(nb == std::vector<Rational>{Rational(2, 3), Rational::infinity()});

    CHECK_THROWS_AS(neighbors_bounded(Rational(1, 5), Modulus(5), 4), std::domain_error);
}

TEST_CASE("gates in a window") {
    auto gates = gates_in_window(Modulus(3), Rational(0), Rational(1));
    CHECK(gates == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
    auto farey1 = gates_in_window(Modulus(1), Rational(-1), Rational(1));
    CHECK(farey1 == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
}

TEST_CASE("edge crossing predicate") {
    Modulus m3(3);
    Edge a = Edge::make(Rational(1, 3), Rational(2, 9));
    Edge b = Edge::make(Rational(1, 6), Rational(2, 9));
    CHECK_FALSE(edges_cross(a, b));   // shared endpoint

    Edge c = Edge::make(Rational(0), Rational(1, 3));
    Edge d = Edge::make(Rational(1, 6), Rational(1, 2));
    CHECK(edges_cross(c, d));         // 0 < 1/6 < 1/3 < 1/2

    Edge e = Edge::make(Rational::infinity(), Rational(1, 3));
    CHECK(edges_cross(e, d));         // 1/6 < 1/3 < 1/2
    CHECK_FALSE(edges_cross(e, c));   // shared endpoint 1/3
    Edge f = Edge::make(Rational(2, 3), Rational::infinity());
    CHECK_FALSE(edges_cross(e, f));   // parallel verticals
}

TEST_CASE("connectivity classification") {
    CHECK(is_connected(Modulus(9)));
    CHECK_FALSE(is_connected(Modulus(6)));
    CHECK(is_connected(Modulus(1)));
    CHECK(is_connected(Modulus(128)));
    CHECK_FALSE(is_connected(Modulus(100)));
}

TEST_CASE("disconnection witness") {
    auto check_witness = [](long n, long a_expected, long b_expected) {
        auto [a, b] = disconnection_witness(Modulus(n));
        CHECK(a == a_expected);
        CHECK(b == b_expected);
        // oracle: the witness properties themselves
        CHECK(b == a + 1);
        CHECK(0 < a);
        CHECK(b < n);
        CHECK(std::gcd(a, n) > 1);
        CHECK(std::gcd(b, n) > 1);
    };
    check_witness(6, 3, 4);
    check_witness(15, 5, 6);
    check_witness(12, 3, 4);
    check_witness(10, 5, 6);
    CHECK_THROWS_AS(disconnection_witness(Modulus(25)), std::domain_error);
}

TEST_CASE("ancestor step") {
    CHECK(ancestor_step(Rational(5, 21), Modulus(3)) == Rational(2, 9));
    // when both candidates are vertices the Euclid-normalized one is returned;
    // either way it must be a smaller-denominator neighbor
    Rational a = ancestor_step(Rational(11, 40), Modulus(5));
    auto nb = neighbors_below(Rational(11, 40), Modulus(5));
    CHECK(std::find(nb.begin(), nb.end(), a) != nb.end());
    CHECK(a == Rational(7, 25));

    Rational b = ancestor_step(Rational(3, 10), Modulus(5));
    auto nb2 = neighbors_below(Rational(3, 10), Modulus(5));
    CHECK(std::find(nb2.begin(), nb2.end(), b) != nb2.end());

    CHECK_THROWS_AS(ancestor_step(Rational(1, 6), Modulus(6)), std::domain_error);
}

TEST_CASE("paths from infinity by ancestor steps") {
    PathTheta p = path_from_infinity(Rational(5, 21), Modulus(3));
    CHECK(path_str(p) == "inf -> 1/3 -> 2/9 -> 5/21");
    CHECK(validate_path(p));

    PathTheta q = path_from_infinity(Rational(7, 20), Modulus(5));
    CHECK(path_str(q) == "inf -> 2/5 -> 7/20");

    PathTheta gate = path_from_infinity(Rational(4, 9), Modulus(9));
    CHECK(path_str(gate) == "inf -> 4/9");

    // every vertex with denominator up to 1000 reaches infinity
    for (long n : {5L, 8L, 9L}) {
        Modulus mod(n);
        for (long q2 = n; q2 <= 1000; q2 += n) {
            for (long num = 1; num < q2; num += 11) {
                if (std::gcd(num, q2) != 1)
                    continue;
                PathTheta path = path_from_infinity(Rational(num, q2), mod);
                CHECK(validate_path(path));
                CHECK(path.last() == Rational(num, q2));
            }
        }
    }
}

TEST_CASE("adjacency is symmetric and stays in the vertex set") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> dist(1, 300);
    int done = 0;
    while (done < 400) {
        long n = done % 2 ? 5 : 9;
        long q = n * (dist(rng) % 20 + 1);
        long num = dist(rng);
        if (std::gcd(num, q) != 1)
            continue;
        Rational x(num, q);
        for (const Rational& w : neighbors_bounded(x, Modulus(n), 40 * n)) {
            CHECK(adjacent(x, w, Modulus(n)) == adjacent(w, x, Modulus(n)));
            CHECK(in_xn(w, Modulus(n)));
        }
        ++done;
    }
}

TEST_CASE("mobius action") {
    Mobius id{1, 0, 0, 1};
    CHECK(apply_mobius(id, Rational(5, 21)) == Rational(5, 21));

    Mobius g{1, 0, -3, 1};
    CHECK(apply_mobius(g, Rational(1, 3)) == Rational::infinity());
    CHECK(apply_mobius(g, Rational(5, 21)) == Rational(5, 6));
    CHECK(in_xn(Rational(5, 6), Modulus(3)));
}

TEST_CASE("edge normalization") {
    Modulus m3(3);
    Mobius g = normalize_edge(Rational(1, 3), Rational(2, 9), m3);
    CHECK(g.a == 1);
    CHECK(g.b == 0);
    CHECK(g.c == -3);
    CHECK(g.d == 1);
    CHECK(apply_mobius(g, Rational(1, 3)) == Rational::infinity());
    CHECK(apply_mobius(g, Rational(2, 9)) == Rational(2, 3));

    Modulus m5(5);
    Mobius h = normalize_edge(Rational(1, 5), Rational(3, 10), m5);
    CHECK(apply_mobius(h, Rational(1, 5)) == Rational::infinity());
    Rational img = apply_mobius(h, Rational(3, 10));
    CHECK(img.den() == 5);
    CHECK(gcd(img.num(), mpz_class(5)) == 1);

    CHECK_THROWS_AS(normalize_edge(Rational::infinity(), Rational(1, 5), m5),
                    std::domain_error);
    CHECK_THROWS_AS(normalize_edge(Rational(1, 5), Rational(7, 25), m5), std::domain_error);
}

TEST_CASE("normalization transports whole paths") {
    Modulus m5(5);
    PathTheta p = path_from_infinity(Rational(11, 40), m5);
    // send the first finite edge to (inf, gate); every adjacency survives
    Mobius g = normalize_edge(p.vertices[1], p.vertices[2], m5);
    std::vector<Rational> image;
    for (const Rational& v : p.vertices)
        image.push_back(apply_mobius(g, v));
    CHECK(image[1] == Rational::infinity());
    CHECK(image[2].den() == 5);
    for (size_t i = 1; i < image.size(); ++i) {
        CHECK(in_xn(image[i], m5));
        CHECK(adjacent(image[i - 1], image[i], m5));
    }
}

TEST_CASE("triangles for odd primes, trees for two") {
    for (long n : {3L, 5L, 9L, 25L, 27L}) {
        Modulus mod(n);
        CHECK(adjacent(Rational::infinity(), Rational(1, n), mod));
        CHECK(adjacent(Rational::infinity(), Rational(2, n), mod));
        CHECK(adjacent(Rational(1, n), Rational(2, n), mod));
    }
    // bounded acyclicity for powers of two: inside [0,1] with den <= 64*N the
    // windowed subgraph is a forest (checked by union-find over its edges)
    for (long n : {2L, 4L}) {
        Modulus mod(n);
        long qmax = 64 * n;
        std::vector<Rational> verts;
        for (long q = n; q <= qmax; q += n)
            for (long num = 0; num <= q; ++num)
                if (std::gcd(num, q) == 1)
                    verts.emplace_back(num, q);
        verts.push_back(Rational::infinity());
        std::map<std::string, size_t> index;
        for (size_t i = 0; i < verts.size(); ++i)
            index[verts[i].str()] = i;
        std::vector<size_t> parent(verts.size());
        for (size_t i = 0; i < parent.size(); ++i)
            parent[i] = i;
        std::function<size_t(size_t)> find = [&](size_t v) {
            return parent[v] == v ? v : parent[v] = find(parent[v]);
        };
        bool cycle = false;
        for (const Rational& v : verts) {
            if (v.is_infinity())
                continue;
            std::vector<Rational> nbs = neighbors_bounded(v, mod, qmax);
            for (const Rational& w : nbs) {
                if (!w.is_infinity() && (w < v || w < Rational(0) || Rational(1) < w))
                    continue;
                auto it = index.find(w.str());
                if (it == index.end())
                    continue;
                size_t ra = find(index[v.str()]), rb = find(it->second);
                if (ra == rb) {
                    cycle = true;
                } else {
                    parent[ra] = rb;
                }
            }
        }
        CHECK_FALSE(cycle);
    }
}
