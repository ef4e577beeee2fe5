#include "farey/svg.hpp"

#include <sstream>
#include <stdexcept>

#include "farey/sweeps.hpp"

namespace farey {

namespace {

constexpr long kMargin = 24;

// round to the nearest hundredth of a pixel and print with two decimals
std::string px(const mpq_class& value) {
    mpq_class scaled = value * 100;
    mpz_class t;
    mpz_class num = scaled.get_num() * 2 + scaled.get_den();
    mpz_class den = scaled.get_den() * 2;
    mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    bool neg = t < 0;
    mpz_class whole = abs(t) / 100, frac = abs(t) % 100;
    std::string f = frac.get_str();
    if (f.size() < 2)
        f.insert(0, 2 - f.size(), '0');
    return (neg ? "-" : "") + whole.get_str() + "." + f;
}

const char* kPalette[] = {"#c0392b", "#27a05a", "#2a5db0", "#b07c24"};

} // namespace

std::string render_svg(const PlotRequest& req) {
    if (!(req.xmin < req.xmax))
        throw std::domain_error("empty plot interval");
    std::vector<Edge> edges = edges_in_window(req.modulus, req.xmin, req.xmax, req.qmax);

    mpq_class x0 = req.xmin.to_mpq();
    mpq_class span = req.xmax.to_mpq() - x0;
    mpq_class width = span * req.px_per_unit + 2 * kMargin;
    // tallest needed arc, at least a stub for pictures with vertical edges only
    mpq_class max_r(0);
    for (const Edge& e : edges) {
        if (e.hi.is_infinity())
            continue;
        mpq_class r = (e.hi.to_mpq() - e.lo.to_mpq()) / 2 * req.px_per_unit;
        if (r > max_r)
            max_r = r;
    }
    if (max_r < 60)
        max_r = 60;
    mpq_class height = max_r + 2 * kMargin;

    auto xpx = [&](const Rational& v) {
        return px((v.to_mpq() - x0) * req.px_per_unit + kMargin);
    };
    mpq_class baseline_q = height - kMargin;
    std::string baseline = px(baseline_q);
    std::string top = px(mpq_class(kMargin));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\""
        << px(height) << "\" viewBox=\"0 0 " << px(width) << " " << px(height) << "\">\n";
    out << "<style>\n"
        << ".axis{stroke:#222;stroke-width:1;}\n"
        << ".edge{stroke:#8a8a8a;stroke-width:1;fill:none;}\n";
    for (size_t i = 0; i < req.highlights.size(); ++i)
        out << ".path" << i << "{stroke:" << kPalette[i % 4]
            << ";stroke-width:2.25;fill:none;}\n";
    out << "</style>\n";
    out << "<line class=\"axis\" x1=\"" << px(mpq_class(0)) << "\" y1=\"" << baseline
        << "\" x2=\"" << px(width) << "\" y2=\"" << baseline << "\"/>\n";

    auto draw_edge = [&](const Edge& e, const std::string& cls) {
        if (e.hi.is_infinity()) {
            out << "<line class=\"" << cls << "\" x1=\"" << xpx(e.lo) << "\" y1=\"" << baseline
                << "\" x2=\"" << xpx(e.lo) << "\" y2=\"" << top << "\"/>\n";
            return;
        }
        mpq_class r = (e.hi.to_mpq() - e.lo.to_mpq()) / 2 * req.px_per_unit;
        std::string rs = px(r);
        out << "<path class=\"" << cls << "\" d=\"M " << xpx(e.lo) << " " << baseline << " A "
            << rs << " " << rs << " 0 0 1 " << xpx(e.hi) << " " << baseline << "\"/>\n";
    };

    for (const Edge& e : edges)
        draw_edge(e, "edge");
    for (size_t i = 0; i < req.highlights.size(); ++i) {
        const auto& vs = req.highlights[i].vertices;
        for (size_t j = 1; j < vs.size(); ++j)
            draw_edge(Edge::make(vs[j - 1], vs[j]), "path" + std::to_string(i));
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace farey
