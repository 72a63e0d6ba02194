#include "tauchart/io/render.hpp"

#include <cstdio>
#include <sstream>

namespace tauchart {

namespace {

constexpr double kCell = 40.0;
constexpr double kMargin = 48.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string at(Bidegree d) { return std::to_string(d.x) + "," + std::to_string(d.y); }

std::string tag_color(const std::string& tag) {
    if (tag == "drop") return "orange";
    if (tag == "line-crossing") return "#c00000";
    return "black";
}

struct Frame {
    i64 x0, x1, y0, y1;
    double px(double x) const { return kMargin + (x - static_cast<double>(x0)) * kCell + kCell / 2; }
    double py(double y) const { return kMargin + (static_cast<double>(y1) - y) * kCell + kCell / 2; }
    double width() const { return 2 * kMargin + static_cast<double>(x1 - x0 + 1) * kCell; }
    double height() const { return 2 * kMargin + static_cast<double>(y1 - y0 + 1) * kCell; }
    bool shows(Bidegree d) const { return d.x >= x0 && d.x <= x1 && d.y >= y0 && d.y <= y1; }
};

}  // namespace

std::string render_svg(const SpectralChart& chart, const RenderOptions& opts) {
    const Window& w = chart.bss.window;
    Frame f{w.x0, w.x1, w.y0, w.y1};
    if (opts.stems) {
        f.x0 = std::max(f.x0, opts.stems->first);
        f.x1 = std::min(f.x1, opts.stems->second);
        if (f.x1 < f.x0) f.x1 = f.x0;
    }
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(f.width()) << "\" height=\""
       << num(f.height()) << "\" viewBox=\"0 0 " << num(f.width()) << " " << num(f.height()) << "\">\n";
    if (!opts.title.empty()) os << "<title>" << escape(opts.title) << "</title>\n";
    os << "<defs>\n"
       << "<clipPath id=\"plot\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
       << num(f.width() - 2 * kMargin) << "\" height=\"" << num(f.height() - 2 * kMargin) << "\"/></clipPath>\n";
    for (const char* c : {"black", "orange", "#c00000"}) {
        std::string id = std::string("head-") + (c[0] == '#' ? "red" : c);
        os << "<marker id=\"" << id
           << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
           << "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << c << "\"/></marker>\n";
    }
    os << "</defs>\n";
    os << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << num(f.width()) << "\" height=\"" << num(f.height())
       << "\" fill=\"white\"/>\n";

    // Grid and axis labels.
    os << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
    for (i64 x = f.x0; x <= f.x1 + 1; ++x) {
        const double gx = f.px(static_cast<double>(x) - 0.5);
        os << "<line x1=\"" << num(gx) << "\" y1=\"" << num(kMargin) << "\" x2=\"" << num(gx) << "\" y2=\""
           << num(f.height() - kMargin) << "\"/>\n";
    }
    for (i64 y = f.y0; y <= f.y1 + 1; ++y) {
        const double gy = f.py(static_cast<double>(y) - 0.5);
        os << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(gy) << "\" x2=\"" << num(f.width() - kMargin)
           << "\" y2=\"" << num(gy) << "\"/>\n";
    }
    os << "</g>\n<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#555555\" "
          "text-anchor=\"middle\">\n";
    for (i64 x = f.x0; x <= f.x1; ++x)
        os << "<text x=\"" << num(f.px(static_cast<double>(x))) << "\" y=\"" << num(f.height() - kMargin + 14) << "\">"
           << x << "</text>\n";
    for (i64 y = f.y0; y <= f.y1; ++y)
        os << "<text x=\"" << num(kMargin - 12) << "\" y=\"" << num(f.py(static_cast<double>(y)) + 3) << "\">" << y
           << "</text>\n";
    os << "</g>\n";

    // Reference lines.
    if (opts.line) {
        const double a = opts.line->slope().to_double();
        const double xa = static_cast<double>(f.x0) - 0.5, xb = static_cast<double>(f.x1) + 0.5;
        os << "<g class=\"reference\" clip-path=\"url(#plot)\" stroke=\"green\" stroke-width=\"1.2\" fill=\"none\">\n";
        os << "<line class=\"line\" data-slope=\"" << opts.line->to_string() << "\" x1=\"" << num(f.px(xa)) << "\" y1=\""
           << num(f.py(a * xa)) << "\" x2=\"" << num(f.px(xb)) << "\" y2=\"" << num(f.py(a * xb)) << "\"/>\n";
        os << "<line class=\"iso-line\" stroke-dasharray=\"5,3\" x1=\"" << num(f.px(xa)) << "\" y1=\""
           << num(f.py(a * (xa - 1) - 2)) << "\" x2=\"" << num(f.px(xb)) << "\" y2=\"" << num(f.py(a * (xb - 1) - 2))
           << "\"/>\n";
        os << "</g>\n";
    }

    // Generators: E2 when there are pages, else homotopy.
    const bool pages = !chart.bss.e2.empty() || !chart.has_pi;
    const std::map<Bidegree, AbGroup>& cells = pages ? chart.bss.e2 : chart.pi.cells;
    auto offset = [](std::size_t i, std::size_t n) { return (static_cast<double>(i) - (n - 1) / 2.0) * 9.0; };
    os << "<g class=\"generators\">\n";
    for (const auto& [d, g] : cells) {
        if (!f.shows(d)) continue;
        auto colors = chart.deco.colors.find(d);
        for (std::size_t i = 0; i < g.ngens(); ++i) {
            const std::string color =
                pages && colors != chart.deco.colors.end() ? colors->second[i] : std::string("black");
            const double cx = f.px(static_cast<double>(d.x)) + offset(i, g.ngens());
            const double cy = f.py(static_cast<double>(d.y));
            const std::string common = "data-at=\"" + at(d) + "\" data-gen=\"" + escape(g.name(i)) + "\"";
            if (g.order(i) == 0) {
                os << "<rect class=\"gen square\" " << common << " x=\"" << num(cx - 4) << "\" y=\"" << num(cy - 4)
                   << "\" width=\"8\" height=\"8\" fill=\"" << escape(color) << "\"/>\n";
            } else if (g.order(i) == 2) {
                os << "<circle class=\"gen dot\" " << common << " cx=\"" << num(cx) << "\" cy=\"" << num(cy)
                   << "\" r=\"3.5\" fill=\"" << escape(color) << "\"/>\n";
            } else {
                os << "<g class=\"gen torsion\" " << common << "><circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
                   << "\" r=\"6\" fill=\"white\" stroke=\"" << escape(color) << "\"/><text x=\"" << num(cx)
                   << "\" y=\"" << num(cy + 3) << "\" font-family=\"sans-serif\" font-size=\"7\" text-anchor=\"middle\">"
                   << g.order(i).get_str() << "</text></g>\n";
            }
        }
    }
    os << "</g>\n";

    // Differentials.
    os << "<g class=\"differentials\" stroke-width=\"1.2\">\n";
    if (pages && !chart.bss.e2.empty()) {
        const int through = opts.through > 0 ? opts.through : chart.bss.max_page;
        try {
            PageStack ps = chart.pages(through);
            for (int r = 2; r < ps.last_page() && r <= through; ++r)
                for (const auto& [d, m] : ps.page(r).d) {
                    const Bidegree t = d_target(d, r);
                    if (m.is_zero() || !f.shows(d) || !f.shows(t)) continue;
                    auto tag = chart.deco.differential_tags.find({r, d});
                    const std::string name = tag == chart.deco.differential_tags.end() ? "" : tag->second;
                    const std::string color = tag_color(name);
                    const std::string head = color == "orange" ? "head-orange" : color == "black" ? "head-black" : "head-red";
                    os << "<line class=\"diff d" << r << "\" data-r=\"" << r << "\" data-at=\"" << at(d) << "\"";
                    if (!name.empty()) os << " data-tag=\"" << escape(name) << "\"";
                    os << " x1=\"" << num(f.px(static_cast<double>(d.x))) << "\" y1=\""
                       << num(f.py(static_cast<double>(d.y))) << "\" x2=\"" << num(f.px(static_cast<double>(t.x)))
                       << "\" y2=\"" << num(f.py(static_cast<double>(t.y))) << "\" stroke=\"" << color
                       << "\" marker-end=\"url(#" << head << ")\"/>\n";
                }
        } catch (const MathError& e) {
            os << "<!-- differentials omitted: " << escape(e.what()) << " -->\n";
        }
    }
    os << "</g>\n";

    // Structure lines.
    os << "<g class=\"structure-lines\" stroke=\"#444444\" stroke-width=\"0.8\" fill=\"none\">\n";
    for (const StructureLine& l : chart.deco.lines) {
        if (!f.shows(l.from) || !f.shows(l.to)) continue;
        os << "<line class=\"structure " << escape(l.kind) << "\" data-from=\"" << at(l.from) << "\" data-to=\""
           << at(l.to) << "\" x1=\"" << num(f.px(static_cast<double>(l.from.x))) << "\" y1=\""
           << num(f.py(static_cast<double>(l.from.y))) << "\" x2=\"" << num(f.px(static_cast<double>(l.to.x)))
           << "\" y2=\"" << num(f.py(static_cast<double>(l.to.y))) << "\"";
        if (l.hidden) os << " stroke-dasharray=\"3,2\"";
        os << "/>\n";
        if (l.jump != 0)
            os << "<text class=\"jump\" x=\"" << num((f.px(static_cast<double>(l.from.x)) + f.px(static_cast<double>(l.to.x))) / 2)
               << "\" y=\"" << num((f.py(static_cast<double>(l.from.y)) + f.py(static_cast<double>(l.to.y))) / 2 - 3)
               << "\" font-family=\"sans-serif\" font-size=\"7\" fill=\"#444444\" stroke=\"none\">" << l.jump
               << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace tauchart
