#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tauchart/chart/ops.hpp"
#include "tauchart/fcc/filtered_complex.hpp"

namespace tauchart {

// A generator b of pi_{x,y} Y above the line, not divisible by tau, whose
// image tau^l b on the line y = floor(alpha x) is nonzero.
struct DropRecord {
    Bidegree at;
    std::size_t generator = 0;
    std::string name;
    i64 l = 0;
    std::optional<i64> height;  // least k with tau^k b = 0; empty when tau-free
    bool indeterminate = false;  // the tower leaves the window through an unknown edge
    Vec image;                  // tau^l b in pi_{x, floor(alpha x)} Y
    Bidegree on_line() const { return {at.x, at.y - l}; }
    std::string lift_name() const { return "drop(" + name + "," + std::to_string(l) + ")"; }
};

std::vector<DropRecord> find_drops(const TauChart& y, const Line& line);

struct TaggedDifferential {
    int r = 2;
    Bidegree source;
    std::string tag;  // "lifted" | "drop" | "line-crossing"
    bool operator==(const TaggedDifferential&) const = default;
};

// Nonzero differentials of a chart that cross the line.
std::vector<TaggedDifferential> line_crossing_differentials(const PageStack& pages, const Line& line);

enum class Condition { strongly_complete, connective_mod_tau, tau_inverted, iso_and_image, injective, dropped_lift,
                       kernel_on_line, drop_differentials, differential_origin };
std::string to_string(Condition c);

struct CoverReport {
    std::map<Condition, Verdict> verdicts;
    std::map<Condition, std::vector<Finding>> witnesses;
    std::vector<TaggedDifferential> source_differentials;  // every nonzero d_r of the source, tagged
    int pages_checked = 0;

    // Conditions (1)-(4) hold, so the map is a connective cover.
    Verdict certified() const;
    // No checked condition failed.
    bool consistent() const;
    std::string summary() const;
};

CoverReport verify_cover_map(const ChartMap& f, const Line& line);

struct CoverPrediction {
    ChartMap map;  // source: the predicted cover; target: the input, window extended
    std::vector<DropRecord> drops;
    std::vector<TaggedDifferential> differentials;   // of the cover
    std::vector<TaggedDifferential> line_crossing;   // of the input
    CoverReport report;
};

// The cover's homotopy, E2 and exact couple maps, and the pages they force;
// every condition of the characterization is checked on the result and any
// inconsistency is a hard error.
CoverPrediction predict_cover(const SpectralChart& y, const Line& line);

// Whether x lies in the image of f on homotopy in degree d.
bool lifts(const ChartMap& f, Bidegree d, const Vec& x);

// Mod-tau criterion for connectivity, checked against the homotopy when present.
struct ConnectivityResult {
    Verdict via_gr = Verdict::indeterminate;
    std::optional<Verdict> via_pi;
    std::vector<Bidegree> witnesses;
};
ConnectivityResult connectivity_via_gr(const SpectralChart& x, const Line& line);

// E2 vanishes above the line inside the window.
Verdict vanishing_line_check(const BssPages& pages, const Line& line);

// Minimal internal degree of the s-fold tensor power of generators in the given degrees.
i64 cobar_support_bound(const std::vector<i64>& generator_degrees, i64 s);
// The vanishing line y = x / (m - 1) implied by generators in degrees >= m >= 2.
Line cobar_line(i64 m);

struct CoverCriterion {
    bool condition1 = false;  // quasi-isomorphism on the constant range
    bool condition2 = false;  // associated graded agree above the thresholds
    bool holds() const { return condition1 && condition2; }
    bool covers_equivalent = false;  // checked directly, level by level
    std::vector<std::string> notes;
};
CoverCriterion cover_criterion(const FilteredMap& f, const Line& line);

}  // namespace tauchart
