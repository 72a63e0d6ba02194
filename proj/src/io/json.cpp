#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tauchart/io/document.hpp"

namespace tauchart {

using json = nlohmann::json;

namespace {

// ---------------------------------------------------------------- reading

std::string escape_token(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

const char* type_label(const json& j) {
    switch (j.type()) {
        case json::value_t::object: return "an object";
        case json::value_t::array: return "an array";
        case json::value_t::string: return "a string";
        case json::value_t::boolean: return "a boolean";
        case json::value_t::null: return "null";
        case json::value_t::number_float: return "a non-integer number";
        default: return "a number";
    }
}

// A JSON value together with its location in the document.
class Node {
public:
    Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const json& raw() const { return j_; }
    const std::string& path() const { return path_; }
    [[noreturn]] void fail(const std::string& what) const { throw DocumentError(path_.empty() ? "/" : path_, what); }

    // Checks that this is an object whose keys all lie in required + optional.
    const Node& object(std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) const {
        if (!j_.is_object()) fail(std::string("expected an object, found ") + type_label(j_));
        std::set<std::string> allowed;
        for (const char* k : required) {
            allowed.insert(k);
            if (!j_.contains(k)) fail(std::string("missing field \"") + k + "\"");
        }
        for (const char* k : optional) allowed.insert(k);
        for (const auto& [k, v] : j_.items())
            if (!allowed.count(k)) Node(v, path_ + "/" + escape_token(k)).fail("unknown field \"" + k + "\"");
        return *this;
    }

    bool has(const char* key) const { return j_.contains(key); }
    Node operator[](const char* key) const { return Node(j_.at(key), path_ + "/" + escape_token(key)); }
    Node operator[](std::size_t i) const { return Node(j_.at(i), path_ + "/" + std::to_string(i)); }

    std::vector<Node> array() const {
        if (!j_.is_array()) fail(std::string("expected an array, found ") + type_label(j_));
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_.size(); ++i) out.push_back((*this)[i]);
        return out;
    }
    std::vector<std::pair<std::string, Node>> entries() const {
        if (!j_.is_object()) fail(std::string("expected an object, found ") + type_label(j_));
        std::vector<std::pair<std::string, Node>> out;
        for (const auto& [k, v] : j_.items()) out.emplace_back(k, Node(v, path_ + "/" + escape_token(k)));
        return out;
    }

    std::string str() const {
        if (!j_.is_string()) fail(std::string("expected a string, found ") + type_label(j_));
        return j_.get<std::string>();
    }
    bool boolean() const {
        if (!j_.is_boolean()) fail(std::string("expected a boolean, found ") + type_label(j_));
        return j_.get<bool>();
    }
    i64 integer() const {
        if (j_.is_number_integer() && !j_.is_number_unsigned()) return j_.get<i64>();
        if (j_.is_number_unsigned()) {
            auto u = j_.get<std::uint64_t>();
            if (u > static_cast<std::uint64_t>(std::numeric_limits<i64>::max())) fail("integer out of range");
            return static_cast<i64>(u);
        }
        fail(std::string("expected an integer, found ") + type_label(j_));
    }
    int small() const {
        i64 v = integer();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail("integer out of range");
        return static_cast<int>(v);
    }
    std::size_t count() const {
        i64 v = integer();
        if (v < 0) fail("expected a nonnegative integer");
        return static_cast<std::size_t>(v);
    }
    // Arbitrary precision: a JSON integer or a decimal string.
    Int big() const {
        if (j_.is_number_integer()) {
            if (j_.is_number_unsigned()) return Int(std::to_string(j_.get<std::uint64_t>()));
            return Int(std::to_string(j_.get<i64>()));
        }
        if (j_.is_string()) {
            const std::string s = j_.get<std::string>();
            Int out;
            const bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                                s.find('-', 1) == std::string::npos && s != "-";
            if (!digits || out.set_str(s, 10) != 0) fail("\"" + s + "\" is not a decimal integer");
            return out;
        }
        fail(std::string("expected an integer, found ") + type_label(j_));
    }

private:
    const json& j_;
    std::string path_;
};

template <class F>
auto guarded(const Node& n, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const MathError& e) {
        n.fail(e.what());
    }
}

Bidegree read_degree(const Node& n) {
    auto a = n.array();
    if (a.size() != 2) n.fail("a bidegree is a pair [x, y]");
    return {a[0].integer(), a[1].integer()};
}

Window read_window(const Node& n) {
    n.object({"x", "y", "left", "right", "top", "bottom"});
    Window w;
    auto x = n["x"].array(), y = n["y"].array();
    if (x.size() != 2) n["x"].fail("expected [x0, x1]");
    if (y.size() != 2) n["y"].fail("expected [y0, y1]");
    w.x0 = x[0].integer();
    w.x1 = x[1].integer();
    w.y0 = y[0].integer();
    w.y1 = y[1].integer();
    auto edge = [&](const char* k) { return guarded(n[k], [&] { return edge_from_string(n[k].str()); }); };
    w.left = edge("left");
    w.right = edge("right");
    w.top = edge("top");
    w.bottom = edge("bottom");
    guarded(n, [&] { w.validate(); });
    return w;
}

AbGroup read_group(const Node& n) {
    std::vector<std::string> names;
    Vec orders;
    std::set<std::string> seen;
    for (const Node& g : n.array()) {
        g.object({"name", "order"});
        std::string name = g["name"].str();
        if (!seen.insert(name).second) g["name"].fail("duplicate generator name \"" + name + "\"");
        Int o = g["order"].big();
        if (o < 0 || o == 1) g["order"].fail("order must be 0 (infinite) or at least 2");
        names.push_back(name);
        orders.push_back(o);
    }
    return AbGroup(names, orders);
}

std::map<Bidegree, AbGroup> read_cells(const Node& n, const Window& w) {
    std::map<Bidegree, AbGroup> out;
    for (const Node& c : n.array()) {
        c.object({"at", "gens"});
        Bidegree d = read_degree(c["at"]);
        if (!w.contains(d)) c["at"].fail("degree " + d.to_string() + " lies outside the window");
        if (out.count(d)) c["at"].fail("degree " + d.to_string() + " listed twice");
        out[d] = read_group(c["gens"]);
    }
    return out;
}

// {"source name": {"target name": coefficient}}
Matrix read_named_hom(const Node& n, const AbGroup& source, const AbGroup& target) {
    Matrix m(target.ngens(), source.ngens());
    for (const auto& [s, col] : n.entries()) {
        int j = source.index_of(s);
        if (j < 0) col.fail("no source generator named \"" + s + "\"");
        for (const auto& [t, coeff] : col.entries()) {
            int i = target.index_of(t);
            if (i < 0) coeff.fail("no target generator named \"" + t + "\"");
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coeff.big();
        }
    }
    return m;
}

template <class SourceAt, class TargetAt>
std::map<Bidegree, Matrix> read_hom_table(const Node& n, const char* key, SourceAt source_at, TargetAt target_at) {
    std::map<Bidegree, Matrix> out;
    for (const Node& e : n.array()) {
        e.object({key, "images"});
        Bidegree d = read_degree(e[key]);
        if (out.count(d)) e[key].fail("degree " + d.to_string() + " listed twice");
        std::optional<AbGroup> s = source_at(d), t = target_at(d);
        if (!s) e[key].fail("source group at " + d.to_string() + " is undetermined");
        if (!t) e[key].fail("target group of the map at " + d.to_string() + " is undetermined");
        out[d] = read_named_hom(e["images"], *s, *t);
    }
    return out;
}

// Dense matrix as a list of rows with a known shape.
Matrix read_matrix(const Node& n, std::size_t rows, std::size_t cols) {
    auto r = n.array();
    if (r.size() != rows) n.fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(r.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto row = r[i].array();
        if (row.size() != cols)
            r[i].fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j].big();
    }
    return m;
}

// Dense matrix whose shape is read off the data; must have at least one row.
Matrix read_matrix(const Node& n) {
    auto r = n.array();
    if (r.empty()) n.fail("a differential matrix needs at least one row");
    return read_matrix(n, r.size(), r[0].array().size());
}

ChainComplex read_complex(const Node& n) {
    n.object({"ranks", "d"});
    ChainComplex c;
    for (const Node& e : n["ranks"].array()) {
        auto p = e.array();
        if (p.size() != 2) e.fail("a rank entry is [degree, rank]");
        i64 k = p[0].integer();
        std::size_t r = p[1].count();
        if (c.ranks.count(k)) p[0].fail("degree listed twice");
        if (r == 0) p[1].fail("zero ranks are omitted");
        c.ranks[k] = r;
    }
    for (const Node& e : n["d"].array()) {
        e.object({"k", "matrix"});
        i64 k = e["k"].integer();
        if (c.d.count(k)) e["k"].fail("degree listed twice");
        Matrix m = read_matrix(e["matrix"], c.rank(k - 1), c.rank(k));
        if (m.is_zero()) e["matrix"].fail("zero differentials are omitted");
        c.d[k] = m;
    }
    guarded(n, [&] { c.validate(); });
    return c;
}

ChainMap read_chain_map(const Node& n, const ChainComplex& a, const ChainComplex& b) {
    ChainMap f;
    for (const Node& e : n.array()) {
        e.object({"k", "matrix"});
        i64 k = e["k"].integer();
        if (f.f.count(k)) e["k"].fail("degree listed twice");
        f.f[k] = read_matrix(e["matrix"], b.rank(k), a.rank(k));
    }
    return f;
}

FilteredComplex read_tower(const Node& n) {
    n.object({"N0", "N1", "levels", "maps"});
    FilteredComplex x;
    x.N0 = n["N0"].integer();
    x.N1 = n["N1"].integer();
    for (const Node& l : n["levels"].array()) x.levels.push_back(read_complex(l));
    auto maps = n["maps"].array();
    const std::size_t count = x.N1 >= x.N0 ? static_cast<std::size_t>(x.N1 - x.N0 + 1) : 0;
    if (x.levels.size() != count) n["levels"].fail("expected " + std::to_string(count) + " levels for N0..N1");
    if (maps.size() + 1 != std::max<std::size_t>(count, 1))
        n["maps"].fail("expected " + std::to_string(count ? count - 1 : 0) + " structure maps");
    for (std::size_t i = 0; i < maps.size(); ++i) x.maps.push_back(read_chain_map(maps[i], x.levels[i + 1], x.levels[i]));
    guarded(n, [&] { x.validate(); });
    return x;
}

Decorations read_display(const Node& n, const BssPages& bss) {
    n.object({}, {"colors", "tags", "lines"});
    Decorations deco;
    if (n.has("colors"))
        for (const Node& e : n["colors"].array()) {
            e.object({"at", "colors"});
            Bidegree d = read_degree(e["at"]);
            std::vector<std::string> cs;
            for (const Node& c : e["colors"].array()) cs.push_back(c.str());
            auto g = bss.e2_at(d);
            if (!g || g->ngens() != cs.size()) e["colors"].fail("one color per E2 generator is required");
            deco.colors[d] = cs;
        }
    if (n.has("tags"))
        for (const Node& e : n["tags"].array()) {
            e.object({"r", "from", "tag"});
            deco.differential_tags[{e["r"].small(), read_degree(e["from"])}] = e["tag"].str();
        }
    if (n.has("lines"))
        for (const Node& e : n["lines"].array()) {
            e.object({"from", "to"}, {"kind", "hidden", "jump", "note"});
            StructureLine l;
            l.from = read_degree(e["from"]);
            l.to = read_degree(e["to"]);
            if (e.has("kind")) l.kind = e["kind"].str();
            if (e.has("hidden")) l.hidden = e["hidden"].boolean();
            if (e.has("jump")) l.jump = e["jump"].small();
            if (e.has("note")) l.note = e["note"].str();
            deco.lines.push_back(l);
        }
    return deco;
}

TauChart read_pi(const Node& cells, const Node& tau, const Window& w) {
    TauChart pi;
    pi.window = w;
    pi.cells = read_cells(cells, w);
    pi.tau = read_hom_table(
        tau, "from", [&](Bidegree d) { return pi.group(d); },
        [&](Bidegree d) { return pi.group({d.x, d.y - 1}); });
    return pi;
}

SpectralChart read_tau_chart(const Node& n) {
    n.object({"window", "cells", "tau"}, {"display"});
    SpectralChart c;
    c.has_pi = true;
    c.pi = read_pi(n["cells"], n["tau"], read_window(n["window"]));
    c.bss.window = c.pi.window;
    if (n.has("display")) c.deco = read_display(n["display"], c.bss);
    guarded(n, [&] { c.validate(); });
    return c;
}

SpectralChart read_bss(const Node& n) {
    n.object({"window", "e2", "max_page", "complete"}, {"pi", "les", "differentials", "display"});
    SpectralChart c;
    c.bss.window = read_window(n["window"]);
    if (n.has("pi")) {
        Node p = n["pi"];
        p.object({"cells", "tau"});
        c.has_pi = true;
        c.pi = read_pi(p["cells"], p["tau"], c.bss.window);
    }
    c.bss.e2 = read_cells(n["e2"], c.bss.window);
    c.bss.max_page = n["max_page"].small();
    c.bss.complete = n["complete"].boolean();
    if (n.has("les")) {
        Node l = n["les"];
        l.object({"proj", "delta"});
        if (!c.has_pi) l.fail("exact couple maps need the homotopy chart \"pi\"");
        LesMaps les;
        les.proj = read_hom_table(
            l["proj"], "at", [&](Bidegree d) { return c.pi.group(d); }, [&](Bidegree d) { return c.bss.e2_at(d); });
        les.delta = read_hom_table(
            l["delta"], "at", [&](Bidegree d) { return c.bss.e2_at(d); },
            [&](Bidegree d) { return c.pi.group({d.x - 1, d.y + 2}); });
        c.bss.les = les;
    }
    if (n.has("differentials"))
        for (const Node& e : n["differentials"].array()) {
            e.object({"r", "from", "matrix"});
            int r = e["r"].small();
            Bidegree d = read_degree(e["from"]);
            if (c.bss.differentials[r].count(d)) e["from"].fail("differential listed twice");
            c.bss.differentials[r][d] = read_matrix(e["matrix"]);
        }
    if (n.has("display")) c.deco = read_display(n["display"], c.bss);
    guarded(n, [&] { c.validate(); });
    return c;
}

ChartMap read_chart_map(const Node& n) {
    n.object({"source", "target", "pi", "e2"});
    ChartMap f;
    f.source = read_bss(n["source"]);
    f.target = read_bss(n["target"]);
    f.pi = read_hom_table(
        n["pi"], "at", [&](Bidegree d) { return f.source.pi.group(d); },
        [&](Bidegree d) { return f.target.pi.group(d); });
    f.e2 = read_hom_table(
        n["e2"], "at", [&](Bidegree d) { return f.source.bss.e2_at(d); },
        [&](Bidegree d) { return f.target.bss.e2_at(d); });
    guarded(n, [&] { f.validate(); });
    return f;
}

GroupData read_group_data(const Node& n) {
    n.object({"name", "chain", "restriction"});
    std::vector<SubgroupInfo> chain;
    for (const Node& s : n["chain"].array()) {
        s.object({"name", "order", "irreps"});
        SubgroupInfo info{s["name"].str(), s["order"].small(), {}};
        for (const Node& i : s["irreps"].array()) {
            i.object({"name", "dim", "endomorphism_rank"});
            info.irreps.push_back({i["name"].str(), i["dim"].small(), i["endomorphism_rank"].small()});
        }
        chain.push_back(info);
    }
    auto index = [&](const Node& name) {
        std::string s = name.str();
        for (std::size_t h = 0; h < chain.size(); ++h)
            if (chain[h].name == s) return h;
        name.fail("no subgroup named \"" + s + "\" in the chain");
    };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<int>>> res;
    for (const Node& t : n["restriction"].array()) {
        t.object({"from", "to", "table"});
        std::size_t h = index(t["from"]), k = index(t["to"]);
        std::vector<std::vector<int>> table;
        for (const Node& row : t["table"].array()) {
            std::vector<int> r;
            for (const Node& a : row.array()) r.push_back(a.small());
            table.push_back(r);
        }
        if (!res.emplace(std::make_pair(h, k), table).second) t.fail("restriction table listed twice");
    }
    return guarded(n, [&] { return GroupData(n["name"].str(), chain, res); });
}

std::shared_ptr<const GroupData> read_group_ref(const Node& n) {
    if (n.raw().is_string()) {
        try {
            return resolve_group(n.str());
        } catch (const std::exception& e) {
            n.fail(e.what());
        }
    }
    return std::make_shared<const GroupData>(read_group_data(n));
}

std::size_t read_subgroup(const Node& n, const GroupData& g) {
    return guarded(n, [&] { return g.index_of(n.str()); });
}

VirtualRep read_rep(const Node& n, const std::shared_ptr<const GroupData>& g, std::size_t h) {
    return guarded(n, [&] { return VirtualRep::parse(g, h, n.str()); });
}

GeomFamily read_family(const Node& n) {
    n.object({"group", "members"});
    GeomFamily fam;
    fam.group = read_group_ref(n["group"]);
    for (const Node& m : n["members"].array()) {
        m.object({"subgroup"}, {"tower", "chart"});
        std::size_t h = read_subgroup(m["subgroup"], *fam.group);
        if (fam.members.count(h)) m["subgroup"].fail("subgroup listed twice");
        GeomMember member;
        if (m.has("tower")) member.tower = read_tower(m["tower"]);
        if (m.has("chart")) member.chart = read_bss(m["chart"]);
        if (member.tower.has_value() == member.chart.has_value()) m.fail("give exactly one of \"tower\" and \"chart\"");
        fam.members[h] = member;
    }
    guarded(n, [&] { fam.validate(); });
    return fam;
}

ROFiltered read_ro(const Node& n) {
    n.object({"group", "subgroup", "values", "maps"}, {"constant_axes"});
    ROFiltered x;
    x.group = read_group_ref(n["group"]);
    x.subgroup = read_subgroup(n["subgroup"], *x.group);
    for (const Node& v : n["values"].array()) {
        v.object({"rep", "complex"});
        VirtualRep rep = read_rep(v["rep"], x.group, x.subgroup);
        if (x.values.count(rep)) v["rep"].fail("representation listed twice");
        x.values[rep] = read_complex(v["complex"]);
    }
    for (const Node& m : n["maps"].array()) {
        m.object({"from", "to", "map"});
        VirtualRep w = read_rep(m["from"], x.group, x.subgroup), v = read_rep(m["to"], x.group, x.subgroup);
        auto iw = x.values.find(w), iv = x.values.find(v);
        if (iw == x.values.end()) m["from"].fail("not in the support");
        if (iv == x.values.end()) m["to"].fail("not in the support");
        if (x.maps.count({w, v})) m.fail("map listed twice");
        x.maps[{w, v}] = read_chain_map(m["map"], iw->second, iv->second);
    }
    if (n.has("constant_axes")) {
        const auto& irreps = x.group->subgroup(x.subgroup).irreps;
        for (const Node& a : n["constant_axes"].array()) {
            std::string s = a.str();
            bool known = false;
            for (const auto& i : irreps) known = known || i.name == s;
            if (!known) a.fail("no irreducible named \"" + s + "\"");
            x.constant_axes.push_back(s);
        }
    }
    guarded(n, [&] { x.validate(); });
    return x;
}

SphereSymbol read_sphere(const Node& n) {
    n.object({"group", "subgroup", "V", "s"});
    auto g = read_group_ref(n["group"]);
    std::size_t h = read_subgroup(n["subgroup"], *g);
    return {read_rep(n["V"], g, h), n["s"].integer()};
}

RepSupport read_support(const Node& n) {
    n.object({"group", "subgroup", "reps"});
    RepSupport s;
    s.group = read_group_ref(n["group"]);
    s.subgroup = read_subgroup(n["subgroup"], *s.group);
    for (const Node& r : n["reps"].array()) s.reps.push_back(read_rep(r, s.group, s.subgroup));
    return s;
}

// ---------------------------------------------------------------- writing

json big(const Int& a) {
    if (a.fits_slong_p()) return json(static_cast<i64>(a.get_si()));
    return json(a.get_str());
}

json degree(Bidegree d) { return json::array({d.x, d.y}); }

json write_window(const Window& w) {
    return {{"x", json::array({w.x0, w.x1})}, {"y", json::array({w.y0, w.y1})},   {"left", to_string(w.left)},
            {"right", to_string(w.right)},    {"top", to_string(w.top)},          {"bottom", to_string(w.bottom)}};
}

json write_group(const AbGroup& g) {
    std::set<std::string> seen;
    json out = json::array();
    for (std::size_t i = 0; i < g.ngens(); ++i) {
        if (!seen.insert(g.name(i)).second)
            throw std::logic_error("cannot serialize a group with repeated generator name " + g.name(i));
        out.push_back({{"name", g.name(i)}, {"order", big(g.order(i))}});
    }
    return out;
}

json write_cells(const std::map<Bidegree, AbGroup>& cells) {
    json out = json::array();
    for (const auto& [d, g] : cells) out.push_back({{"at", degree(d)}, {"gens", write_group(g)}});
    return out;
}

json write_named_hom(const Matrix& m, const AbGroup& source, const AbGroup& target) {
    json out = json::object();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        json col = json::object();
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) col[target.name(i)] = big(m(i, j));
        if (!col.empty()) out[source.name(j)] = col;
    }
    return out;
}

template <class SourceAt, class TargetAt>
json write_hom_table(const std::map<Bidegree, Matrix>& table, const char* key, SourceAt source_at,
                     TargetAt target_at) {
    json out = json::array();
    for (const auto& [d, m] : table)
        out.push_back({{key, degree(d)}, {"images", write_named_hom(m, *source_at(d), *target_at(d))}});
    return out;
}

json write_matrix(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(big(m(i, j)));
        out.push_back(row);
    }
    return out;
}

json write_complex(const ChainComplex& c) {
    json ranks = json::array(), d = json::array();
    for (const auto& [k, r] : c.ranks) ranks.push_back(json::array({k, r}));
    for (const auto& [k, m] : c.d) d.push_back({{"k", k}, {"matrix", write_matrix(m)}});
    return {{"ranks", ranks}, {"d", d}};
}

json write_chain_map(const ChainMap& f) {
    json out = json::array();
    for (const auto& [k, m] : f.f) out.push_back({{"k", k}, {"matrix", write_matrix(m)}});
    return out;
}

json write_tower(const FilteredComplex& x) {
    json levels = json::array(), maps = json::array();
    for (const auto& l : x.levels) levels.push_back(write_complex(l));
    for (const auto& m : x.maps) maps.push_back(write_chain_map(m));
    return {{"N0", x.N0}, {"N1", x.N1}, {"levels", levels}, {"maps", maps}};
}

json write_display(const Decorations& deco) {
    json colors = json::array(), tags = json::array(), lines = json::array();
    for (const auto& [d, cs] : deco.colors) colors.push_back({{"at", degree(d)}, {"colors", cs}});
    for (const auto& [key, tag] : deco.differential_tags)
        tags.push_back({{"r", key.first}, {"from", degree(key.second)}, {"tag", tag}});
    for (const auto& l : deco.lines)
        lines.push_back({{"from", degree(l.from)},
                         {"to", degree(l.to)},
                         {"kind", l.kind},
                         {"hidden", l.hidden},
                         {"jump", l.jump},
                         {"note", l.note}});
    return {{"colors", colors}, {"tags", tags}, {"lines", lines}};
}

bool decorated(const Decorations& d) { return !d.colors.empty() || !d.differential_tags.empty() || !d.lines.empty(); }

json write_pi(const TauChart& pi) {
    return {{"cells", write_cells(pi.cells)},
            {"tau", write_hom_table(
                        pi.tau, "from", [&](Bidegree d) { return pi.group(d); },
                        [&](Bidegree d) { return pi.group({d.x, d.y - 1}); })}};
}

bool homotopy_only(const SpectralChart& c) {
    return c.has_pi && c.bss.e2.empty() && !c.bss.les && c.bss.differentials.empty() && c.bss.max_page == 2 &&
           !c.bss.complete && c.bss.window == c.pi.window;
}

json write_tau_chart(const SpectralChart& c) {
    json out = write_pi(c.pi);
    out["window"] = write_window(c.pi.window);
    if (decorated(c.deco)) out["display"] = write_display(c.deco);
    return out;
}

json write_bss(const SpectralChart& c) {
    json out = {{"window", write_window(c.bss.window)},
                {"e2", write_cells(c.bss.e2)},
                {"max_page", c.bss.max_page},
                {"complete", c.bss.complete}};
    if (c.has_pi) out["pi"] = write_pi(c.pi);
    if (c.bss.les) {
        const LesMaps& les = *c.bss.les;
        out["les"] = {{"proj", write_hom_table(
                                   les.proj, "at", [&](Bidegree d) { return c.pi.group(d); },
                                   [&](Bidegree d) { return c.bss.e2_at(d); })},
                      {"delta", write_hom_table(
                                    les.delta, "at", [&](Bidegree d) { return c.bss.e2_at(d); },
                                    [&](Bidegree d) { return c.pi.group({d.x - 1, d.y + 2}); })}};
    }
    if (!c.bss.differentials.empty()) {
        json ds = json::array();
        for (const auto& [r, table] : c.bss.differentials)
            for (const auto& [d, m] : table) ds.push_back({{"r", r}, {"from", degree(d)}, {"matrix", write_matrix(m)}});
        out["differentials"] = ds;
    }
    if (decorated(c.deco)) out["display"] = write_display(c.deco);
    return out;
}

json write_chart_map(const ChartMap& f) {
    return {{"source", write_bss(f.source)},
            {"target", write_bss(f.target)},
            {"pi", write_hom_table(
                       f.pi, "at", [&](Bidegree d) { return f.source.pi.group(d); },
                       [&](Bidegree d) { return f.target.pi.group(d); })},
            {"e2", write_hom_table(
                       f.e2, "at", [&](Bidegree d) { return f.source.bss.e2_at(d); },
                       [&](Bidegree d) { return f.target.bss.e2_at(d); })}};
}

json write_group_data(const GroupData& g) {
    json chain = json::array(), res = json::array();
    for (std::size_t h = 0; h < g.chain_length(); ++h) {
        const SubgroupInfo& s = g.subgroup(h);
        json irreps = json::array();
        for (const Irrep& i : s.irreps)
            irreps.push_back({{"name", i.name}, {"dim", i.dim}, {"endomorphism_rank", i.endomorphism_rank}});
        chain.push_back({{"name", s.name}, {"order", s.order}, {"irreps", irreps}});
    }
    for (const auto& [key, table] : g.restriction_tables())
        res.push_back({{"from", g.subgroup(key.first).name}, {"to", g.subgroup(key.second).name}, {"table", table}});
    return {{"name", g.name()}, {"chain", chain}, {"restriction", res}};
}

// A reference by name when the shipped data has an identical group.
json write_group_ref(const std::shared_ptr<const GroupData>& g) {
    try {
        auto shipped = resolve_group(g->name());
        if (*shipped == *g) return g->name();
    } catch (const std::exception&) {
    }
    return write_group_data(*g);
}

json write_family(const GeomFamily& fam) {
    json members = json::array();
    for (const auto& [h, m] : fam.members) {
        json e = {{"subgroup", fam.group->subgroup(h).name}};
        if (m.tower) e["tower"] = write_tower(*m.tower);
        if (m.chart) e["chart"] = write_bss(*m.chart);
        members.push_back(e);
    }
    return {{"group", write_group_ref(fam.group)}, {"members", members}};
}

json write_ro(const ROFiltered& x) {
    json values = json::array(), maps = json::array();
    for (const auto& [v, c] : x.values) values.push_back({{"rep", v.to_string()}, {"complex", write_complex(c)}});
    for (const auto& [key, m] : x.maps)
        maps.push_back({{"from", key.first.to_string()}, {"to", key.second.to_string()}, {"map", write_chain_map(m)}});
    json out = {{"group", write_group_ref(x.group)},
                {"subgroup", x.group->subgroup(x.subgroup).name},
                {"values", values},
                {"maps", maps}};
    if (!x.constant_axes.empty()) out["constant_axes"] = x.constant_axes;
    return out;
}

json write_sphere(const SphereSymbol& s) {
    const auto& g = s.V.group();
    return {{"group", write_group_ref(g)}, {"subgroup", g->subgroup(s.ambient()).name}, {"V", s.V.to_string()},
            {"s", s.s}};
}

json write_support(const RepSupport& s) {
    json reps = json::array();
    for (const auto& v : s.reps) reps.push_back(v.to_string());
    return {{"group", write_group_ref(s.group)}, {"subgroup", s.group->subgroup(s.subgroup).name}, {"reps", reps}};
}

std::string env_or(const char* var, const char* fallback) {
    const char* v = std::getenv(var);
    return (v && *v) ? std::string(v) : std::string(fallback);
}

}  // namespace

const std::vector<std::string>& document_kinds() {
    static const std::vector<std::string> kinds = {"tau-chart",   "bss-pages",    "filtered-complex", "geom-family",
                                                   "ro-filtered", "group-data",   "sphere-symbol",    "chart-map",
                                                   "rep-support"};
    return kinds;
}

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // Convert the byte offset into line and column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        auto p = msg.find(": ");
        throw DocumentError("line " + std::to_string(line) + ", column " + std::to_string(col),
                            p == std::string::npos ? msg : msg.substr(p + 2));
    }
    Node root(j, "");
    root.object({"schema", "kind", "payload"});
    if (root["schema"].integer() != kSchemaVersion)
        root["schema"].fail("unsupported schema version " + std::to_string(root["schema"].integer()));
    Document doc;
    doc.kind = root["kind"].str();
    Node p = root["payload"];
    if (doc.kind == "tau-chart")
        doc.payload = read_tau_chart(p);
    else if (doc.kind == "bss-pages")
        doc.payload = read_bss(p);
    else if (doc.kind == "filtered-complex")
        doc.payload = read_tower(p);
    else if (doc.kind == "geom-family")
        doc.payload = read_family(p);
    else if (doc.kind == "ro-filtered")
        doc.payload = read_ro(p);
    else if (doc.kind == "group-data")
        doc.payload = read_group_data(p);
    else if (doc.kind == "sphere-symbol")
        doc.payload = read_sphere(p);
    else if (doc.kind == "chart-map")
        doc.payload = read_chart_map(p);
    else if (doc.kind == "rep-support")
        doc.payload = read_support(p);
    else
        root["kind"].fail("unknown document kind \"" + doc.kind + "\"");
    return doc;
}

std::string serialize(const Document& doc) {
    json payload = std::visit(
        [&](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, SpectralChart>)
                return doc.kind == "tau-chart" ? write_tau_chart(p) : write_bss(p);
            else if constexpr (std::is_same_v<T, FilteredComplex>)
                return write_tower(p);
            else if constexpr (std::is_same_v<T, GeomFamily>)
                return write_family(p);
            else if constexpr (std::is_same_v<T, ROFiltered>)
                return write_ro(p);
            else if constexpr (std::is_same_v<T, GroupData>)
                return write_group_data(p);
            else if constexpr (std::is_same_v<T, SphereSymbol>)
                return write_sphere(p);
            else if constexpr (std::is_same_v<T, ChartMap>)
                return write_chart_map(p);
            else
                return write_support(p);
        },
        doc.payload);
    json root = {{"schema", kSchemaVersion}, {"kind", doc.kind}, {"payload", payload}};
    return root.dump(2) + "\n";
}

Document read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document(ss.str());
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.where, std::string(e.what()).substr(e.where.size() + 2));
    }
}

void write_document(const std::string& path, const Document& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError(path, "cannot open file for writing");
    out << serialize(doc);
}

Document make_document(SpectralChart c) {
    std::string kind = homotopy_only(c) ? "tau-chart" : "bss-pages";
    return {kind, std::move(c)};
}
Document make_document(FilteredComplex x) { return {"filtered-complex", std::move(x)}; }
Document make_document(GeomFamily f) { return {"geom-family", std::move(f)}; }
Document make_document(ROFiltered x) { return {"ro-filtered", std::move(x)}; }
Document make_document(GroupData g) { return {"group-data", std::move(g)}; }
Document make_document(SphereSymbol s) { return {"sphere-symbol", std::move(s)}; }
Document make_document(ChartMap m) { return {"chart-map", std::move(m)}; }
Document make_document(RepSupport s) { return {"rep-support", std::move(s)}; }

std::string data_dir() { return env_or("TAUCHART_DATA", TAUCHART_DATA_DIR); }
std::string fixture_dir() { return env_or("TAUCHART_FIXTURES", TAUCHART_FIXTURE_DIR); }

std::shared_ptr<const GroupData> resolve_group(const std::string& name) {
    static std::map<std::string, std::shared_ptr<const GroupData>> cache;
    const std::string path = data_dir() + "/groups/" + name + ".json";
    auto it = cache.find(path);
    if (it != cache.end()) return it->second;
    if (!std::filesystem::exists(path)) throw DocumentError(path, "no group data named \"" + name + "\"");
    Document d = read_document(path);
    auto g = std::make_shared<const GroupData>(expect<GroupData>(d, "group-data"));
    if (g->name() != name) throw DocumentError(path, "file describes group " + g->name());
    cache[path] = g;
    return g;
}

}  // namespace tauchart
