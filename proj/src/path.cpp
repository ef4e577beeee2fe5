#include "farey/path.hpp"

#include <sstream>
#include <stdexcept>

namespace farey {

namespace {

bool denominators_increase(const std::vector<Rational>& vs) {
    for (size_t i = 1; i < vs.size(); ++i) {
        if (vs[i].is_infinity() || vs[i].den() <= vs[i - 1].den())
            return false;
    }
    return true;
}

// direction of the candidate edge x -> q relative to the previous vertex;
// the head at infinity behaves as +inf
EdgeClass classify_triple(const Rational& prev, const Rational& x, const Rational& q) {
    if (prev.is_infinity())
        return q > x ? EdgeClass::Changing : EdgeClass::Retaining;
    bool between = (prev < q && q < x) || (x < q && q < prev);
    return between ? EdgeClass::Changing : EdgeClass::Retaining;
}

bool on_path(const PathTheta& path, const Rational& v) {
    for (const Rational& u : path.vertices)
        if (u == v)
            return true;
    return false;
}

} // namespace

bool validate_path(const PathTheta& path) {
    const auto& vs = path.vertices;
    if (vs.empty() || !vs[0].is_infinity())
        return false;
    if (vs.size() == 1)
        return true;
    if (vs[1].den() != path.modulus.value())
        return false;
    if (!denominators_increase(vs))
        return false;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (!in_xn(vs[i], path.modulus))
            return false;
        if (i > 0 && !adjacent(vs[i - 1], vs[i], path.modulus))
            return false;
    }
    return true;
}

EdgeClass classify_extension(const PathTheta& path, const Rational& q) {
    if (path.vertices.size() < 2)
        throw std::domain_error("classification needs a path with a finite end");
    const Rational& x = path.last();
    if (x.is_infinity() || q.is_infinity())
        throw std::domain_error("classification needs finite vertices");
    if (on_path(path, q))
        throw std::domain_error("extension vertex already on the path");
    if (!adjacent(x, q, path.modulus))
        throw std::domain_error("extension vertex not adjacent to the path end");
    return classify_triple(path.vertices[path.vertices.size() - 2], x, q);
}

namespace {

struct EndPair {
    mpz_class pn, qn;       // path end
    mpz_class pm, qm;       // vertex before it (infinity = (1, 0))
};

EndPair end_pair(const PathTheta& path) {
    const Rational& x = path.last();
    const Rational& prev = path.vertices[path.vertices.size() - 2];
    return {x.num(), x.den(), prev.num(), prev.den()};
}

// residue class of partial quotients excluded on the side eps, i.e. the a
// with a*p_n + eps*p_{n-1} == 0 mod p; nullopt when there is no prime (N=1)
std::optional<long> excluded_residue(const PathTheta& path, const EndPair& e, int eps) {
    auto pl = path.modulus.prime_power();
    if (!pl)
        return std::nullopt;
    long p = pl->first;
    mpz_class t = (-eps * e.pm * mod_inverse(e.pn, mpz_class(p))) % p;
    mpz_class r = (t + p) % p;
    return r.get_si();
}

Rational side_candidate(const EndPair& e, int eps, const mpz_class& a) {
    return Rational(a * e.pn + eps * e.pm, a * e.qn + eps * e.qm);
}

} // namespace

std::pair<EdgeClass, long> semicircle_rank(const PathTheta& path, const Rational& q) {
    if (path.vertices.size() < 2 || path.last().is_infinity() || q.is_infinity())
        throw std::domain_error("semicircle_rank needs a finite path end and vertex");
    if (on_path(path, q))
        throw std::domain_error("vertex already on the path");
    EndPair e = end_pair(path);
    // recover (a, eps) with num = a p_n + eps p_{n-1}, den = a q_n + eps q_{n-1}
    int eps = 0;
    mpz_class a;
    for (int cand : {+1, -1}) {
        mpz_class t = q.den() - cand * e.qm;
        if (t % e.qn != 0)
            continue;
        mpz_class acand = t / e.qn;
        if (acand >= 1 && acand * e.pn + cand * e.pm == q.num()) {
            eps = cand;
            a = acand;
            break;
        }
    }
    if (eps == 0)
        throw std::domain_error(q.str() + " is not adjacent to the path end");
    EdgeClass side = eps == 1 ? EdgeClass::Changing : EdgeClass::Retaining;
    if (classify_triple(path.vertices[path.vertices.size() - 2], path.last(), q) != side)
        throw std::logic_error("sign and geometric classification disagree");
    auto excluded = excluded_residue(path, e, eps);
    long p = excluded ? path.modulus.prime_power()->first : 0;
    long k = 0;
    for (mpz_class cand = 1; cand <= a; ++cand) {
        if (excluded && cand % p == *excluded)
            continue;
        if (on_path(path, side_candidate(e, eps, cand)))
            continue;
        ++k;
    }
    return {side, k};
}

mpz_class coeff_of_rank(const PathTheta& path, EdgeClass side, long k) {
    if (k < 1)
        throw std::domain_error("semicircle rank is 1-based");
    if (path.vertices.size() < 2 || path.last().is_infinity())
        throw std::domain_error("coeff_of_rank needs a finite path end");
    EndPair e = end_pair(path);
    int eps = side == EdgeClass::Changing ? +1 : -1;
    auto excluded = excluded_residue(path, e, eps);
    long p = excluded ? path.modulus.prime_power()->first : 0;
    for (mpz_class a = 1;; ++a) {
        if (excluded && a % p == *excluded)
            continue;
        if (on_path(path, side_candidate(e, eps, a)))
            continue;
        if (--k == 0)
            return a;
    }
}

bool is_well_directed(const PathTheta& path) {
    const auto& vs = path.vertices;
    long n = path.n();
    for (long i = 0; i + 2 <= n; ++i) {
        // triangle P_{i-1} ~ P_{i+1} forces the next edge to change direction
        if (!adjacent(vs[i], vs[i + 2], path.modulus))
            continue;
        if (classify_triple(vs[i + 1], vs[i + 2], vs[i + 3]) != EdgeClass::Changing)
            return false;
    }
    return true;
}

PathTheta make_well_directed(PathTheta path) {
    for (;;) {
        const auto& vs = path.vertices;
        long n = path.n();
        long bad = -1;
        for (long i = 0; i + 2 <= n; ++i) {
            if (adjacent(vs[i], vs[i + 2], path.modulus) &&
                classify_triple(vs[i + 1], vs[i + 2], vs[i + 3]) != EdgeClass::Changing) {
                bad = i;
                break;
            }
        }
        if (bad < 0)
            return path;
        path.vertices.erase(path.vertices.begin() + bad + 1);
    }
}

CFExpansion path_to_cf(const PathTheta& path) {
    if (!validate_path(path) || path.vertices.size() < 2)
        throw std::domain_error("not a valid path from infinity");
    if (!is_well_directed(path))
        throw std::domain_error("path is not well directed");
    CFExpansion cf{path.modulus, path.vertices[1].num(), {}};
    const auto& vs = path.vertices;
    for (size_t i = 2; i < vs.size(); ++i) {
        const mpz_class &pa = vs[i - 2].num(), &qa = vs[i - 2].den();
        const mpz_class &pb = vs[i - 1].num(), &qb = vs[i - 1].den();
        const mpz_class &pc = vs[i].num(), &qc = vs[i].den();
        mpz_class det = pb * qa - pa * qb;
        mpz_class a_num = pc * qa - pa * qc;
        mpz_class e_num = pb * qc - pc * qb;
        if (det == 0 || a_num % det != 0 || e_num % det != 0)
            throw std::logic_error("vertex recurrence has no integer solution");
        mpz_class a = a_num / det;
        mpz_class eps = e_num / det;
        if (a < 1 || (eps != 1 && eps != -1))
            throw std::logic_error("vertex recurrence left the term range");
        cf.terms.push_back(CFTerm{static_cast<int>(eps.get_si()), a});
    }
    if (auto v = validate_cf(cf))
        throw std::logic_error("well directed path produced an invalid expansion: " + v->message);
    return cf;
}

PathTheta cf_to_path(const CFExpansion& cf) {
    ConvergentSeq seq = convergents(cf);
    PathTheta path{cf.modulus, {}};
    path.vertices.reserve(seq.pq.size());
    path.vertices.push_back(Rational::infinity());
    for (long i = 0; i <= seq.last_index(); ++i)
        path.vertices.push_back(seq.value(i));
    if (!is_well_directed(path))
        throw std::logic_error("expansion convergents do not form a well directed path");
    return path;
}

PathTheta path_from_infinity(const Rational& x, const Modulus& n) {
    if (!in_xn(x, n))
        throw std::domain_error(x.str() + " is not a vertex of F_" + std::to_string(n.value()));
    PathTheta path{n, {}};
    std::vector<Rational> chain;
    Rational v = x;
    while (!v.is_infinity() && v.den() > n.value()) {
        chain.push_back(v);
        v = ancestor_step(v, n);
    }
    if (!v.is_infinity())
        chain.push_back(v);
    chain.push_back(Rational::infinity());
    path.vertices.assign(chain.rbegin(), chain.rend());
    return path;
}

std::string path_str(const PathTheta& path) {
    std::ostringstream out;
    for (size_t i = 0; i < path.vertices.size(); ++i) {
        if (i)
            out << " -> ";
        out << path.vertices[i].str();
    }
    return out.str();
}

PathTheta parse_path(std::string_view text, const Modulus& n) {
    PathTheta path{n, {}};
    std::string s(text);
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t arrow = s.find("->", pos);
        std::string tok = s.substr(pos, arrow == std::string::npos ? std::string::npos : arrow - pos);
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty vertex in path");
        path.vertices.push_back(Rational::parse(tok.substr(b, e - b + 1)));
        if (arrow == std::string::npos)
            break;
        pos = arrow + 2;
    }
    return path;
}

} // namespace farey
