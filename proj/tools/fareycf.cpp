#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "farey/enumerate.hpp"
#include "farey/expand.hpp"
#include "farey/path.hpp"
#include "farey/svg.hpp"
#include "farey/sweeps.hpp"

using nlohmann::json;
using namespace farey;

namespace {

json number_or_string(const mpz_class& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

json terms_json(const CFExpansion& cf) {
    json arr = json::array();
    for (const CFTerm& t : cf.terms)
        arr.push_back(json::array({t.eps, number_or_string(t.a)}));
    return arr;
}

json convergents_json(const CFExpansion& cf) {
    json arr = json::array();
    ConvergentSeq seq = convergents(cf);
    for (long i = 0; i <= seq.last_index(); ++i)
        arr.push_back(seq.value(i).str());
    return arr;
}

// canonical machine form of an expansion
json cf_json(const CFExpansion& cf) {
    return json{{"N", cf.modulus.value()},
                {"b", number_or_string(cf.b)},
                {"terms", terms_json(cf)}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::domain_error("cannot open output file " + out_path);
    out << text;
}

// prime-power moduli only; the diagnostic quotes the gap witness
std::pair<long, int> require_prime_power(long n) {
    Modulus mod(n);
    if (auto pl = mod.prime_power())
        return *pl;
    if (n == 1)
        throw std::domain_error("N = 1 supports graph queries only; expansions need N = p^l");
    auto [a, b] = disconnection_witness(mod);
    throw std::domain_error("F_" + std::to_string(n) + " is disconnected: no vertex between " +
                            std::to_string(a) + "/" + std::to_string(n) + " and " +
                            std::to_string(b) + "/" + std::to_string(n) +
                            "; use a prime power modulus");
}

struct ParsedValue {
    RealInput value;
    std::string kind;   // rational | surd | decimal_as_rational
};

ParsedValue parse_value(const std::string& text) {
    if (text.find("sqrt") != std::string::npos)
        return {RealInput::parse(text), "surd"};
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        mpz_class den(1);
        for (size_t i = 0; i < frac_len; ++i)
            den *= 10;
        mpq_class q(mpz_class(digits, 10), den);
        q.canonicalize();
        return {RealInput(q), "decimal_as_rational"};
    }
    return {RealInput(Rational::parse(text).to_mpq()), "rational"};
}

int run_expand(long n_opt, const std::string& value, int max_terms, const std::string& format,
               const std::string& out_path) {
    Modulus mod(n_opt);
    auto [p, l] = require_prime_power(n_opt);
    ParsedValue in = parse_value(value);
    json j{{"command", "expand"}, {"n", n_opt}, {"input", value}, {"input_kind", in.kind}};

    bool member = in.value.is_rational() &&
                  in_xn(Rational::from_mpq(in.value.as_rational()), mod);
    if (in.kind == "rational" && !member)
        throw std::domain_error(value + " is not a vertex of F_" + std::to_string(n_opt) +
                                "; surd and decimal inputs expand as prefixes");
    CFExpansion cf{mod, 0, {}};
    if (member) {
        cf = expand_rational(Rational::from_mpq(in.value.as_rational()), p, l);
        j["exact"] = true;
        j["value"] = evaluate(cf).str();
    } else {
        RealExpansion rx = expand_real(in.value, p, l, max_terms);
        cf = rx.cf;
        j["exact"] = rx.exact;
        if (rx.exact)
            j["value"] = evaluate(cf).str();
        else
            j["residual_fin"] = rx.residual_fin.str();
    }
    j["b"] = number_or_string(cf.b);
    j["terms"] = terms_json(cf);
    j["cf"] = cf_text(cf);
    j["cf_json"] = cf_json(cf);
    j["convergents"] = convergents_json(cf);

    if (format == "text") {
        std::ostringstream t;
        t << "expansion of " << value << " over F_" << n_opt << "\n"
          << "  " << cf_text(cf) << "\n  convergents:";
        for (const auto& c : j["convergents"])
            t << " " << c.get<std::string>();
        t << "\n  " << (j["exact"].get<bool>() ? "exact" : "prefix") << "\n";
        emit(t.str(), out_path);
    } else {
        emit(j.dump(2) + "\n", out_path);
    }
    return 0;
}

int run_enumerate(long n_opt, const std::string& value, const std::string& format,
                  const std::string& out_path) {
    auto [p, l] = require_prime_power(n_opt);
    Rational x = Rational::parse(value);
    ExpansionSet set = enumerate_expansions(x, p, l);
    json j{{"x", x.str()}, {"N", n_opt}, {"count", set.expansions.size()}};
    json arr = json::array();
    for (const CFExpansion& cf : set.expansions)
        arr.push_back(cf_text(cf));
    j["expansions"] = arr;
    if (format == "text") {
        std::ostringstream t;
        t << set.expansions.size() << " expansions of " << x.str() << " over F_" << n_opt << "\n";
        for (const CFExpansion& cf : set.expansions)
            t << "  " << cf_text(cf) << "\n";
        emit(t.str(), out_path);
    } else {
        emit(j.dump(2) + "\n", out_path);
    }
    return 0;
}

int run_path(long n_opt, const std::string& value, const std::string& format,
             const std::string& out_path) {
    auto [p, l] = require_prime_power(n_opt);
    (void)p;
    (void)l;
    Modulus mod(n_opt);
    Rational x = Rational::parse(value);
    PathTheta anc = path_from_infinity(x, mod);
    PathTheta wd = make_well_directed(anc);
    json j{{"command", "path"},
           {"n", n_opt},
           {"x", x.str()},
           {"ancestor_path", path_str(anc)},
           {"ancestor_well_directed", is_well_directed(anc)},
           {"path", path_str(wd)}};
    json verts = json::array();
    for (const Rational& v : wd.vertices)
        verts.push_back(v.str());
    j["vertices"] = verts;
    if (!x.is_infinity() && x.den() >= mod.value())
        j["cf"] = cf_text(path_to_cf(wd));
    if (format == "text") {
        emit(path_str(wd) + "\n", out_path);
    } else {
        emit(j.dump(2) + "\n", out_path);
    }
    return 0;
}

int run_convergents(const std::string& cf_string, const std::string& format,
                    const std::string& out_path) {
    CFExpansion cf = parse_cf(cf_string);
    json j{{"command", "convergents"},
           {"n", cf.modulus.value()},
           {"cf", cf_text(cf)},
           {"b", number_or_string(cf.b)},
           {"terms", terms_json(cf)},
           {"cf_json", cf_json(cf)},
           {"convergents", convergents_json(cf)},
           {"value", evaluate(cf).str()}};
    if (format == "text") {
        std::ostringstream t;
        t << cf_text(cf) << " = " << evaluate(cf).str() << "\n  convergents:";
        for (const auto& c : j["convergents"])
            t << " " << c.get<std::string>();
        t << "\n";
        emit(t.str(), out_path);
    } else {
        emit(j.dump(2) + "\n", out_path);
    }
    return 0;
}

int run_check(const std::string& suite, long n_opt, long qmax, long den_max, int count,
              std::uint64_t seed, bool serial, const std::string& out_path) {
    json j{{"command", "check"}, {"suite", suite}};
    bool pass = true;
    if (suite == "no-crossing") {
        Modulus mod(n_opt);
        long q = qmax > 0 ? qmax : 40 * n_opt;
        CrossingReport r = serial
                               ? no_crossing_scan_serial(mod, Rational(-1), Rational(2), q)
                               : no_crossing_scan(mod, Rational(-1), Rational(2), q);
        pass = r.violations.empty();
        j["n"] = n_opt;
        j["qmax"] = q;
        j["edges"] = r.edges;
        j["pairs"] = r.pairs;
        json viol = json::array();
        for (const auto& [e1, e2] : r.violations)
            viol.push_back({{"first", {e1.lo.str(), e1.hi.str()}},
                            {"second", {e2.lo.str(), e2.hi.str()}}});
        j["violations"] = viol;
    } else if (suite == "tree") {
        Modulus mod(n_opt);
        auto pl = mod.prime_power();
        if (!pl || pl->first != 2)
            throw std::domain_error("tree check needs N = 2^l");
        long dm = den_max > 0 ? den_max : (qmax > 0 ? qmax : 512);
        TreeReport r = serial ? tree_uniqueness_scan_serial(pl->second, dm)
                              : tree_uniqueness_scan(pl->second, dm);
        pass = r.failures.empty();
        j["n"] = n_opt;
        j["den_max"] = dm;
        j["vertices"] = r.vertices;
        j["failures"] = r.failures;
    } else if (suite == "oracle") {
        auto [p, l] = require_prime_power(n_opt);
        long dm = den_max > 0 ? den_max : (qmax > 0 ? qmax : 180);
        OracleReport r = serial ? oracle_scan_serial(p, l, dm) : oracle_scan(p, l, dm);
        pass = r.mismatches.empty();
        j["n"] = n_opt;
        j["den_max"] = dm;
        j["vertices"] = r.vertices;
        j["paths"] = r.paths;
        j["mismatches"] = r.mismatches;
    } else if (suite == "connectivity") {
        long nm = den_max > 0 ? den_max : 10000;
        ConnectivityReport r =
            serial ? connectivity_scan_serial(nm) : connectivity_scan(nm);
        pass = r.disagreements.empty();
        j["n_max"] = nm;
        j["checked"] = r.checked;
        j["disagreements"] = r.disagreements;
        json reach = json::array();
        for (long n : {6L, 10L, 12L, 15L}) {
            ReachReport rr = bfs_witness_check(Modulus(n), 100 * n);
            pass = pass && !rr.reached_gap;
            reach.push_back({{"n", n},
                             {"witness", {rr.witness_a, rr.witness_b}},
                             {"visited", rr.visited},
                             {"reached_gap", rr.reached_gap}});
        }
        j["witness_reach"] = reach;
    } else if (suite == "soundness") {
        auto [p, l] = require_prime_power(n_opt);
        int c = count > 0 ? count : 500;
        SoundnessReport r = serial ? soundness_scan_serial(p, l, c, 64, seed)
                                   : soundness_scan(p, l, c, 64, seed);
        pass = r.failures.empty();
        j["n"] = n_opt;
        j["count"] = c;
        j["failures"] = r.failures;
    } else {
        throw std::domain_error("unknown check suite \"" + suite + "\"");
    }
    j["pass"] = pass;
    emit(j.dump(2) + "\n", out_path);
    return 0;
}

int run_plot(long n_opt, const std::string& xmin, const std::string& xmax, long qmax,
             const std::vector<std::string>& highlights, const std::string& format,
             const std::string& out_path) {
    Modulus mod(n_opt);
    PlotRequest req{mod, Rational::parse(xmin), Rational::parse(xmax),
                    qmax > 0 ? qmax : 30 * n_opt, {}, 600};
    for (const std::string& h : highlights)
        req.highlights.push_back(parse_path(h, mod));
    if (format == "json") {
        std::ostringstream lines;
        for (const Edge& e : edges_in_window(mod, req.xmin, req.xmax, req.qmax)) {
            json je{{"n", n_opt}, {"from", e.lo.str()}, {"to", e.hi.str()}};
            lines << je.dump() << "\n";
        }
        emit(lines.str(), out_path);
    } else {
        emit(render_svg(req), out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Farey subgraph continued fractions"};
    app.require_subcommand(1);

    std::string value, cf_string, format = "json", out_path, xmin = "0", xmax = "1", suite;
    std::vector<std::string> highlights;
    long n_opt = 0, qmax = 0, den_max = 0;
    int max_terms = 24, count = 0;
    std::uint64_t seed = 20250811;
    bool serial = false;

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        auto* opt = cmd->add_option("--n", n_opt, "graph level N");
        if (needs_n)
            opt->required();
        cmd->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    auto* expand_cmd = app.add_subcommand("expand", "continued fraction of a value");
    expand_cmd->add_option("value", value, "p/q, a+b*sqrt(d), or decimal")->required();
    expand_cmd->add_option("--max-terms", max_terms, "prefix length for inexact inputs");
    add_common(expand_cmd, true);

    auto* enum_cmd = app.add_subcommand("enumerate", "all expansions of a vertex");
    enum_cmd->add_option("value", value, "vertex p/q")->required();
    add_common(enum_cmd, true);

    auto* path_cmd = app.add_subcommand("path", "well directed path from infinity");
    path_cmd->add_option("value", value, "vertex p/q")->required();
    add_common(path_cmd, true);

    auto* conv_cmd = app.add_subcommand("convergents", "convergent table of an expansion");
    conv_cmd->add_option("cf", cf_string, "text form, e.g. \"1/0+ 5/1+ 1/2+ -1/3\"")->required();
    add_common(conv_cmd, false);

    auto* check_cmd = app.add_subcommand("check", "property suites");
    check_cmd->add_option("suite", suite, "no-crossing|tree|oracle|connectivity|soundness")
        ->required();
    check_cmd->add_option("--qmax", qmax, "denominator bound");
    check_cmd->add_option("--den-max", den_max, "denominator bound");
    check_cmd->add_option("--count", count, "sample count");
    check_cmd->add_option("--seed", seed, "sample seed");
    check_cmd->add_flag("--serial", serial, "use the serial reference kernels");
    add_common(check_cmd, false);

    auto* plot_cmd = app.add_subcommand("plot", "geodesic diagram of a window");
    plot_cmd->add_option("--xmin", xmin, "left endpoint (rational)");
    plot_cmd->add_option("--xmax", xmax, "right endpoint (rational)");
    plot_cmd->add_option("--qmax", qmax, "denominator bound");
    plot_cmd->add_option("--highlight", highlights, "path overlay \"inf -> 1/3 -> 2/9\"");
    add_common(plot_cmd, true);
    plot_cmd->get_option("--format")->check(CLI::IsMember({"json", "text", "svg"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand_cmd->parsed())
            return run_expand(n_opt, value, max_terms, format, out_path);
        if (enum_cmd->parsed())
            return run_enumerate(n_opt, value, format, out_path);
        if (path_cmd->parsed())
            return run_path(n_opt, value, format, out_path);
        if (conv_cmd->parsed())
            return run_convergents(cf_string, format, out_path);
        if (check_cmd->parsed()) {
            if (suite == "tree" && n_opt == 0)
                n_opt = 2;
            if (suite != "connectivity" && n_opt == 0)
                throw std::domain_error("check suite needs --n");
            return run_check(suite, n_opt, qmax, den_max, count, seed, serial, out_path);
        }
        if (plot_cmd->parsed()) {
            std::string fmt = plot_cmd->get_option("--format")->count() ? format : "svg";
            return run_plot(n_opt, xmin, xmax, qmax, highlights, fmt, out_path);
        }
    } catch (const std::domain_error& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"error", std::string("internal: ") + e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
