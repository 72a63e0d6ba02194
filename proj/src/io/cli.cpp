#include "tauchart/io/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tauchart/io/document.hpp"
#include "tauchart/io/render.hpp"

namespace tauchart {

using json = nlohmann::json;

namespace {

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::yes: return exit_ok;
        case Verdict::no: return exit_no;
        default: return exit_indeterminate;
    }
}

json degree(Bidegree d) { return json::array({d.x, d.y}); }

json findings(const std::vector<Finding>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back({{"at", degree(f.at)}, {"what", f.what}});
    return out;
}

json report_json(const CoverReport& r) {
    json conds = json::array();
    for (const auto& [c, v] : r.verdicts) {
        auto it = r.witnesses.find(c);
        conds.push_back({{"condition", to_string(c)},
                         {"verdict", to_string(v)},
                         {"witnesses", it == r.witnesses.end() ? json::array() : findings(it->second)}});
    }
    return {{"conditions", conds},
            {"certified", to_string(r.certified())},
            {"consistent", r.consistent()},
            {"pages_checked", r.pages_checked}};
}

json tagged_json(const std::vector<TaggedDifferential>& ds) {
    json out = json::array();
    for (const auto& d : ds) out.push_back({{"r", d.r}, {"from", degree(d.source)}, {"tag", d.tag}});
    return out;
}

json drops_json(const std::vector<DropRecord>& drops) {
    json out = json::array();
    for (const auto& d : drops) {
        out.push_back({{"at", degree(d.at)},
                       {"generator", d.name},
                       {"l", d.l},
                       {"on_line", degree(d.on_line())},
                       {"lift", d.lift_name()},
                       {"height", d.height ? json(*d.height) : json(nullptr)},
                       {"indeterminate", d.indeterminate}});
    }
    return out;
}

json page_json(const PageStack& ps, int r) {
    json cells = json::array();
    const Page& p = ps.page(r);
    for (const auto& [d, sq] : p.cells)
        if (!sq.group().is_zero()) cells.push_back({{"at", degree(d)}, {"group", sq.group().type().to_string()}});
    json unknown = json::array();
    for (const auto& d : p.unknown) unknown.push_back(degree(d));
    json diffs = json::array();
    for (const auto& [d, m] : p.d)
        if (!m.is_zero())
            diffs.push_back({{"from", degree(d)}, {"image", image_type(ps.cell(r, d_target(d, r))->group(), m).to_string()}});
    return {{"r", r}, {"cells", cells}, {"undetermined", unknown}, {"differentials", diffs}};
}

std::pair<i64, i64> parse_range(const std::string& s) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument(s);
        std::size_t u1 = 0, u2 = 0;
        std::string a = s.substr(0, colon), b = s.substr(colon + 1);
        i64 lo = std::stoll(a, &u1), hi = std::stoll(b, &u2);
        if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--stems", "expected A:B with integers, got " + s);
    }
}

Line parse_line(const std::string& s) {
    try {
        return Line::parse(s);
    } catch (const MathError& e) {
        throw CLI::ValidationError("--line", e.what());
    }
}

SpectralChart load_chart(const std::string& path) {
    return expect<SpectralChart>(read_document(path), "a tau-chart or bss-pages document");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Charts of filtered spectra: connective covers, Bockstein pages and grading tools", "tauchart"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("tauchart 1.0"));

    int code = exit_ok;
    std::function<void()> action;

    std::string in, out_path, report_path, line_text, map_path, family_path, support_path, kind, stems, title;
    std::string a_path, b_path;
    i64 n = 1, shift_a = 0, shift_s = 0;
    int pages = 0, through = 0;
    std::uint64_t seed = 0;
    bool no_deco = false;
    RandomTowerOptions ropts;

    auto emit_doc = [&](const Document& d) {
        if (out_path.empty())
            out << serialize(d);
        else
            write_document(out_path, d);
    };
    // Reports go to --report, else to stdout unless the document already went there.
    auto emit_report = [&](const json& r) {
        if (!report_path.empty()) {
            std::ofstream f(report_path, std::ios::binary);
            if (!f) throw DocumentError(report_path, "cannot open file for writing");
            f << r.dump(2) << "\n";
        } else if (!out_path.empty()) {
            out << r.dump(2) << "\n";
        }
    };
    auto print = [&](const json& r) {
        if (!report_path.empty()) {
            std::ofstream f(report_path, std::ios::binary);
            if (!f) throw DocumentError(report_path, "cannot open file for writing");
            f << r.dump(2) << "\n";
        }
        out << r.dump(2) << "\n";
    };
    auto with_line = [&](CLI::App* c) { c->add_option("--line", line_text, "slope P/Q of the line y = alpha x")->required(); };
    auto with_in = [&](CLI::App* c, const std::string& what) { c->add_option("--in", in, what)->required(); };
    auto with_out = [&](CLI::App* c) { c->add_option("--out", out_path, "output document (default: stdout)"); };
    auto with_report = [&](CLI::App* c) { c->add_option("--report", report_path, "also write the report here"); };

    auto* cover = app.add_subcommand("cover", "predict the connective cover of a chart from its exact couple");
    with_line(cover);
    with_in(cover, "chart with homotopy and exact couple maps");
    with_out(cover);
    with_report(cover);
    cover->add_option("--map", map_path, "also write the chart map from the cover to the input");
    cover->callback([&] {
        action = [&] {
            Line line = parse_line(line_text);
            CoverPrediction p;
            try {
                p = predict_cover(load_chart(in), line);
            } catch (const MathError& e) {
                print({{"error", e.what()}});
                code = std::string(e.what()).find("inconsistent") != std::string::npos ? exit_no : exit_data;
                return;
            }
            emit_doc(make_document(p.map.source));
            if (!map_path.empty()) write_document(map_path, make_document(p.map));
            emit_report({{"line", line.to_string()},
                         {"drops", drops_json(p.drops)},
                         {"differentials", tagged_json(p.differentials)},
                         {"line_crossing", tagged_json(p.line_crossing)},
                         {"verification", report_json(p.report)}});
        };
    });

    auto* cover_fcc = app.add_subcommand("cover-fcc", "the connective cover of an explicit tower, level by level");
    with_line(cover_fcc);
    with_in(cover_fcc, "filtered-complex document");
    with_out(cover_fcc);
    cover_fcc->add_option("--pages", pages, "last differential computed (default 6)");
    cover_fcc->callback([&] {
        action = [&] {
            FilteredComplex x = expect<FilteredComplex>(read_document(in), "a filtered-complex document");
            emit_doc(make_document(spectral_chart(linear_cover_fcc(x, parse_line(line_text)), pages > 0 ? pages : 6)));
        };
    });

    auto* verify = app.add_subcommand("verify", "check the characterization of connective covers on a chart map");
    with_line(verify);
    verify->add_option("--map", map_path, "chart-map document")->required();
    with_report(verify);
    verify->callback([&] {
        action = [&] {
            ChartMap f = expect<ChartMap>(read_document(map_path), "a chart-map document");
            CoverReport r = verify_cover_map(f, parse_line(line_text));
            print(report_json(r));
            code = r.consistent() ? exit_for(r.certified()) : exit_no;
        };
    });

    auto* dilate = app.add_subcommand("dilate", "dilate a tower: level m becomes level ceil(m / n)");
    dilate->add_option("--n", n, "dilation factor")->required()->check(CLI::PositiveNumber);
    with_in(dilate, "filtered-complex document");
    with_out(dilate);
    dilate->callback([&] {
        action = [&] {
            emit_doc(make_document(dilate_fcc(expect<FilteredComplex>(read_document(in), "a filtered-complex document"), n)));
        };
    });

    auto* shift = app.add_subcommand("shift", "shift a tower homologically by A and in level by A + S");
    shift->add_option("--a", shift_a, "homological shift")->required();
    shift->add_option("--s", shift_s, "extra level shift")->required();
    with_in(shift, "filtered-complex document");
    with_out(shift);
    shift->callback([&] {
        action = [&] {
            emit_doc(make_document(
                shift_fcc(expect<FilteredComplex>(read_document(in), "a filtered-complex document"), shift_a, shift_s)));
        };
    });

    auto* total_cmd = app.add_subcommand("total", "sum RO-indexed data by dimension into a tower");
    with_in(total_cmd, "ro-filtered document");
    with_out(total_cmd);
    total_cmd->callback([&] {
        action = [&] { emit_doc(make_document(total(expect<ROFiltered>(read_document(in), "an ro-filtered document")))); };
    });

    auto* dimstar = app.add_subcommand("dimstar", "pull a tower back along the dimension map");
    with_in(dimstar, "filtered-complex document");
    dimstar->add_option("--support", support_path, "rep-support document")->required();
    with_out(dimstar);
    dimstar->callback([&] {
        action = [&] {
            FilteredComplex z = expect<FilteredComplex>(read_document(in), "a filtered-complex document");
            RepSupport s = expect<RepSupport>(read_document(support_path), "a rep-support document");
            emit_doc(make_document(dim_pullback(z, s.group, s.subgroup, s.reps)));
        };
    });

    auto* check = app.add_subcommand("check", "slice or o-slice connectivity of a geometric family");
    check->add_option("--kind", kind, "slice or o-slice")->required()->check(CLI::IsMember({"slice", "o-slice"}));
    check->add_option("--family", family_path, "geom-family document")->required();
    with_report(check);
    check->callback([&] {
        action = [&] {
            GeomFamily fam = expect<GeomFamily>(read_document(family_path), "a geom-family document");
            SliceCheck c = slice_check(fam, kind == "slice" ? SliceKind::slice : SliceKind::o_slice);
            json members = json::array();
            for (const auto& m : c.members) {
                json w = json::array();
                for (const auto& d : m.witnesses) w.push_back(degree(d));
                members.push_back({{"subgroup", fam.group->subgroup(m.subgroup).name},
                                   {"line", slice_line(*fam.group, m.subgroup).to_string()},
                                   {"verdict", to_string(m.verdict)},
                                   {"missing", m.missing},
                                   {"witnesses", w}});
            }
            print({{"check", kind}, {"verdict", to_string(c.verdict)}, {"members", members}});
            code = exit_for(c.verdict);
        };
    });

    auto* bss = app.add_subcommand("bss", "compute Bockstein pages of a tower or chart");
    bss->add_option("--pages", pages, "last differential computed")->required()->check(CLI::Range(2, 64));
    with_in(bss, "filtered-complex, or chart with exact couple maps");
    with_out(bss);
    with_report(bss);
    bss->callback([&] {
        action = [&] {
            Document d = read_document(in);
            SpectralChart c;
            if (auto* x = std::get_if<FilteredComplex>(&d.payload)) {
                c = spectral_chart(*x, pages);
            } else {
                c = expect<SpectralChart>(d, "a filtered-complex or chart document");
                if (!c.has_les()) throw DocumentError(in, "computing pages needs homotopy and exact couple maps");
                PageStack ps = PageStack::from_les(c.pi, c.bss, pages);
                c.bss.differentials = ps.differential_table();
                c.bss.max_page = pages;
                c.bss.complete = true;
            }
            PageStack ps = c.pages(pages);
            json summary = json::array();
            for (int r = 2; r < ps.last_page(); ++r) summary.push_back(page_json(ps, r));
            emit_doc(make_document(c));
            emit_report({{"pages", summary}});
        };
    });

    auto* drops = app.add_subcommand("drops", "list the classes whose lifts drop to the line");
    with_line(drops);
    with_in(drops, "chart with homotopy");
    drops->callback([&] {
        action = [&] {
            SpectralChart c = load_chart(in);
            if (!c.has_pi) throw DocumentError(in, "the chart has no homotopy");
            print({{"line", line_text}, {"drops", drops_json(find_drops(c.pi, parse_line(line_text)))}});
        };
    });

    auto* vanishing = app.add_subcommand("vanishing", "whether E2 vanishes above the line");
    with_line(vanishing);
    with_in(vanishing, "chart");
    vanishing->callback([&] {
        action = [&] {
            Verdict v = vanishing_line_check(load_chart(in).bss, parse_line(line_text));
            print({{"check", "vanishing"}, {"line", line_text}, {"verdict", to_string(v)}});
            code = exit_for(v);
        };
    });

    auto* les = app.add_subcommand("les", "check a chart against its long exact sequence");
    with_in(les, "chart");
    les->callback([&] {
        action = [&] {
            LesReport r = check_les_consistency(load_chart(in));
            json unchecked = json::array();
            for (const auto& d : r.unchecked) unchecked.push_back(degree(d));
            print({{"ok", r.ok()}, {"failures", findings(r.failures)}, {"unchecked", unchecked},
                   {"exact_maps", r.exact_maps}});
            code = r.ok() ? exit_ok : exit_no;
        };
    });

    auto* diff = app.add_subcommand("diff", "compare two charts by isomorphism type, page by page");
    diff->add_option("a", a_path, "first chart")->required();
    diff->add_option("b", b_path, "second chart")->required();
    diff->add_option("--stems", stems, "restrict to stems A:B");
    diff->add_option("--through", through, "last differential compared");
    diff->add_flag("--no-decorations", no_deco, "ignore colors and tags");
    diff->callback([&] {
        action = [&] {
            DiffOptions o;
            o.through = through;
            o.decorations = !no_deco;
            if (!stems.empty()) o.stems = parse_range(stems);
            auto ds = compare_charts(load_chart(a_path), load_chart(b_path), o);
            json list = json::array();
            for (const auto& d : ds)
                list.push_back({{"kind", d.kind}, {"page", d.page}, {"at", degree(d.at)}, {"a", d.left}, {"b", d.right}});
            print({{"differences", list}});
            code = ds.empty() ? exit_ok : exit_no;
        };
    });

    auto* render = app.add_subcommand("render", "draw a chart as SVG");
    with_in(render, "chart");
    render->add_option("--out", out_path, "SVG file (default: stdout)");
    render->add_option("--line", line_text, "draw the line y = alpha x and its isomorphism-range line");
    render->add_option("--through", through, "last page of differentials drawn");
    render->add_option("--stems", stems, "restrict to stems A:B");
    render->add_option("--title", title, "title element");
    render->callback([&] {
        action = [&] {
            RenderOptions o;
            if (!line_text.empty()) o.line = parse_line(line_text);
            if (!stems.empty()) o.stems = parse_range(stems);
            o.through = through;
            o.title = title;
            std::string svg = render_svg(load_chart(in), o);
            if (out_path.empty()) {
                out << svg;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw DocumentError(out_path, "cannot open file for writing");
                f << svg;
            }
        };
    });

    auto* random = app.add_subcommand("random", "a seeded random tower");
    random->add_option("--seed", seed, "seed")->required();
    random->add_option("--levels", ropts.max_levels, "maximum number of levels");
    random->add_option("--span", ropts.max_degree_span, "maximum chain degree span");
    random->add_option("--rank", ropts.max_rank, "maximum rank per degree");
    random->add_option("--entry", ropts.max_entry, "maximum absolute matrix entry");
    with_out(random);
    random->callback([&] { action = [&] { emit_doc(make_document(random_tower(seed, ropts))); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_usage;
    }
    try {
        action();
        return code;
    } catch (const DocumentError& e) {
        err << "tauchart: " << e.what() << "\n";
        return exit_data;
    } catch (const MathError& e) {
        err << "tauchart: " << e.what() << "\n";
        return exit_data;
    } catch (const CLI::ValidationError& e) {
        err << "tauchart: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "tauchart: internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace tauchart
