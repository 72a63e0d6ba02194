#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tauchart/io/document.hpp"
#include "tauchart/io/render.hpp"

using namespace tauchart;

namespace {

// The transcribed ko charts: E2 with homotopy, before and after the cover.
struct Ko {
    SpectralChart figure1, figure2;
    nlohmann::json manifest;
    Ko() {
        const std::string dir = fixture_dir() + "/ko/";
        figure1 = expect<SpectralChart>(read_document(dir + "figure1.json"), "chart");
        figure2 = expect<SpectralChart>(read_document(dir + "figure2.json"), "chart");
        std::ifstream in(dir + "TRANSCRIPTION.json");
        manifest = nlohmann::json::parse(in);
    }
};

const Ko& ko() {
    static const Ko k;
    return k;
}

const Line kHalf(Rational(1, 2));

Bidegree at(const nlohmann::json& j) { return {j[0].get<i64>(), j[1].get<i64>()}; }

using Element = std::map<std::string, std::string>;

// Parses SVG as XML and flattens every element with its attributes; the tag is under "".
std::vector<Element> elements(const std::string& svg) {
    namespace pt = boost::property_tree;
    std::istringstream in(svg);
    pt::ptree tree;
    pt::read_xml(in, tree);
    std::vector<Element> out;
    std::function<void(const std::string&, const pt::ptree&)> walk = [&](const std::string& tag, const pt::ptree& t) {
        Element e{{"", tag}};
        for (const auto& [k, v] : t) {
            if (k == "<xmlattr>") {
                for (const auto& [a, val] : v) e[a] = val.data();
            } else if (k != "<xmlcomment>") {
                walk(k, v);
            }
        }
        out.push_back(e);
    };
    for (const auto& [k, v] : tree) walk(k, v);
    return out;
}

bool has_class(const Element& e, const std::string& c) {
    auto it = e.find("class");
    if (it == e.end()) return false;
    std::istringstream ss(it->second);
    for (std::string w; ss >> w;)
        if (w == c) return true;
    return false;
}

std::string pos(Bidegree d) { return std::to_string(d.x) + "," + std::to_string(d.y); }

}  // namespace

TEST(Ko, FixtureMatchesManifest) {
    const auto& k = ko();
    for (const char* fig : {"figure1", "figure2"}) {
        const SpectralChart& c = std::string(fig) == "figure1" ? k.figure1 : k.figure2;
        std::size_t squares = 0, dots = 0;
        for (const auto& [d, g] : c.bss.e2)
            for (std::size_t i = 0; i < g.ngens(); ++i) (g.order(i) == 0 ? squares : dots) += 1;
        EXPECT_EQ(squares, k.manifest[fig]["squares"].size()) << fig;
        EXPECT_EQ(dots, k.manifest[fig]["dots"].size()) << fig;
        for (const auto& s : k.manifest[fig]["squares"])
            EXPECT_EQ(c.bss.e2_at(at(s["at"]))->index_of(s["name"]) >= 0, true) << s.dump();
        std::size_t arrows = 0;
        for (const auto& [r, table] : c.bss.differentials) arrows += table.size();
        EXPECT_EQ(arrows, k.manifest[fig]["arrows"].size()) << fig;
        EXPECT_TRUE(check_les_consistency(c).ok()) << fig;
    }
}

TEST(Ko, ChartQueries) {
    const TauChart& pi = ko().figure1.pi;
    EXPECT_EQ(is_strongly_complete(pi), Verdict::yes);
    auto inv = tau_invert(pi);
    ASSERT_TRUE(inv.at(4).has_value());
    EXPECT_EQ(inv.at(4)->type().to_string(), "Z");
    ASSERT_TRUE(inv.at(3).has_value());
    EXPECT_TRUE(inv.at(3)->is_zero());

    PageStack ps = ko().figure1.pages(3);
    EXPECT_FALSE(ps.cell(3, {3, 3})->group().is_zero());
    EXPECT_TRUE(ps.cell(4, {3, 3})->group().is_zero());
    // Only twice the generator at (4,0) survives.
    auto perm = ps.permanent_cycles({4, 0});
    ASSERT_TRUE(perm.has_value());
    EXPECT_EQ(*perm, Lattice::span(1, {Vec{Int(2)}}));
    EXPECT_EQ(ps.e_infinity({4, 0})->group().type().to_string(), "Z");

    EXPECT_EQ(vanishing_line_check(ko().figure1.bss, kHalf), Verdict::no);
    EXPECT_EQ(vanishing_line_check(ko().figure2.bss, kHalf), Verdict::yes);
}

TEST(Ko, PredictedCoverReproducesSecondChart) {
    const auto& k = ko();
    CoverPrediction p = predict_cover(k.figure1, kHalf);
    DiffOptions o;
    o.stems = {{0, 20}};
    auto diffs = compare_charts(p.map.source, k.figure2, o);
    EXPECT_TRUE(diffs.empty()) << diffs.size() << " differences, first at " << diffs.front().at.to_string();

    std::set<Bidegree> drops;
    for (const auto& d : p.drops) drops.insert(d.on_line());
    for (Bidegree d : {Bidegree{1, 0}, Bidegree{2, 1}, Bidegree{17, 8}, Bidegree{18, 9}}) EXPECT_TRUE(drops.count(d));
    EXPECT_EQ(p.map.e2_at({4, 0}), Matrix::from_rows({{Int(2)}}, 1));
    for (Bidegree s : {Bidegree{18, 6}, Bidegree{19, 7}})
        EXPECT_NE(std::find(p.differentials.begin(), p.differentials.end(), TaggedDifferential{2, s, "drop"}),
                  p.differentials.end());
    EXPECT_NE(std::find(p.line_crossing.begin(), p.line_crossing.end(), TaggedDifferential{3, {4, 0}, "line-crossing"}),
              p.line_crossing.end());
    for (const auto& t : k.manifest["figure2_tags"])
        EXPECT_EQ(p.map.source.deco.differential_tags.at({t["r"].get<int>(), at(t["from"])}), t["tag"]);

    // The unit lifts to the cover; eta does not.
    for (const auto& [name, entry] : k.manifest["lifts"].items()) {
        const Bidegree d = at(entry["at"]);
        auto g = k.figure1.pi.group(d);
        ASSERT_EQ(g->ngens(), 1u) << name;
        EXPECT_EQ(lifts(p.map, d, unit_vector(1, 0)), entry["lifts"].get<bool>()) << name;
    }
}

TEST(Render, EmptyChartIsValidSvg) {
    SpectralChart c;
    c.has_pi = true;
    auto els = elements(render_svg(c, {}));
    EXPECT_EQ(els.back().at(""), "svg");
    for (const auto& e : els) EXPECT_FALSE(has_class(e, "gen") || has_class(e, "diff"));
    std::size_t grid = 0;
    for (const auto& e : els) grid += e.at("") == "line";
    EXPECT_EQ(grid, 4u);
}

TEST(Render, FirstChartInventory) {
    const auto& k = ko();
    RenderOptions o;
    o.line = kHalf;
    const std::string svg = render_svg(k.figure1, o);
    EXPECT_EQ(svg, render_svg(k.figure1, o));
    std::set<std::pair<std::string, std::string>> squares, dots;
    std::set<std::string> arrows;
    for (const auto& e : elements(svg)) {
        if (has_class(e, "square")) squares.insert({e.at("data-at"), e.at("data-gen")});
        if (has_class(e, "dot")) dots.insert({e.at("data-at"), e.at("data-gen")});
        if (has_class(e, "diff")) arrows.insert(e.at("data-r") + "@" + e.at("data-at"));
    }
    std::set<std::pair<std::string, std::string>> want_squares, want_dots;
    std::set<std::string> want_arrows;
    for (const auto& s : k.manifest["figure1"]["squares"]) want_squares.insert({pos(at(s["at"])), s["name"]});
    for (const auto& s : k.manifest["figure1"]["dots"]) want_dots.insert({pos(at(s["at"])), s["name"]});
    for (const auto& a : k.manifest["figure1"]["arrows"])
        want_arrows.insert(std::to_string(a["r"].get<int>()) + "@" + pos(at(a["from"])));
    EXPECT_EQ(squares, want_squares);
    EXPECT_EQ(dots, want_dots);
    EXPECT_EQ(arrows, want_arrows);
}

TEST(Render, PredictedCoverColors) {
    CoverPrediction p = predict_cover(ko().figure1, kHalf);
    RenderOptions o;
    o.line = kHalf;
    std::set<std::string> orange_gens, orange_arrows;
    for (const auto& e : elements(render_svg(p.map.source, o))) {
        if (has_class(e, "gen") && e.count("fill") && e.at("fill") == "orange") orange_gens.insert(e.at("data-at"));
        if (has_class(e, "diff") && e.at("stroke") == "orange") orange_arrows.insert(e.at("data-r") + "@" + e.at("data-at"));
    }
    EXPECT_EQ(orange_gens, (std::set<std::string>{"1,0", "2,1", "17,8", "18,9"}));
    EXPECT_EQ(orange_arrows, (std::set<std::string>{"2@18,6", "2@19,7"}));
}
