#pragma once

#include <map>
#include <string>
#include <vector>

#include "tauchart/chart/pages.hpp"

namespace tauchart {

// Drawing metadata carried through unchanged by the engine.
struct StructureLine {
    Bidegree from;
    Bidegree to;
    std::string kind = "eta";
    bool hidden = false;
    int jump = 0;
    std::string note;
    bool operator==(const StructureLine&) const = default;
};

struct Decorations {
    // One color per E2 generator ("black", "blue", "orange", ...).
    std::map<Bidegree, std::vector<std::string>> colors;
    // Tag per (page, source) differential ("lifted", "drop", "line-crossing", ...).
    std::map<std::pair<int, Bidegree>, std::string> differential_tags;
    std::vector<StructureLine> lines;
    bool operator==(const Decorations&) const = default;
};

// A tau-chart together with its Bockstein pages.
struct SpectralChart {
    bool has_pi = false;
    TauChart pi;
    BssPages bss;
    Decorations deco;

    bool has_les() const { return has_pi && bss.les.has_value(); }
    // Uses the exact couple when available, else the declared differentials.
    PageStack pages(int through) const;
    void validate() const;
};

// A map of charts: components on homotopy and on E2 (absent entries are zero).
struct ChartMap {
    SpectralChart source;
    SpectralChart target;
    std::map<Bidegree, Matrix> pi;
    std::map<Bidegree, Matrix> e2;

    std::optional<Matrix> pi_at(Bidegree d) const;
    std::optional<Matrix> e2_at(Bidegree d) const;
    void validate() const;
};

}  // namespace tauchart
