#pragma once

#include <set>
#include <string>
#include <vector>

#include "tauchart/chart/spectral_chart.hpp"

namespace tauchart {

struct Finding {
    Bidegree at;
    std::string what;
};

struct LesReport {
    std::vector<Finding> failures;
    std::set<Bidegree> unchecked;
    bool exact_maps = false;  // true when checked against explicit proj/delta
    bool ok() const { return failures.empty(); }
};

// With explicit exact couple maps: exactness at every spot of the long exact
// sequence (including the rows and columns just outside the window, which
// checks the edge semantics) and agreement of declared differentials with the
// ones the exact couple forces. Without them: Smith-level compatibility of E2
// with coker(tau) and ker(tau).
LesReport check_les_consistency(const SpectralChart& chart);

// Necessary conditions for an extension 0 -> sub -> total -> quot -> 0.
bool extension_compatible(const GroupType& sub, const GroupType& quot, const GroupType& total);

// Heuristic on bounded windows; see the README for the rules.
Verdict is_strongly_complete(const TauChart& chart);

// Colimit of each column along tau, when it is determined by the bottom edge.
std::map<i64, std::optional<AbGroup>> tau_invert(const TauChart& chart);

// Isomorphism types of image and kernel of d_r from a degree.
struct DifferentialSummary {
    GroupType image;
    GroupType kernel;
    bool operator==(const DifferentialSummary&) const = default;
};
std::optional<DifferentialSummary> differential_summary(const PageStack& pages, int r, Bidegree source);

// Coker and ker types of homomorphisms between normalized groups.
GroupType cokernel_type(const AbGroup& target, const Matrix& f);
GroupType kernel_type(const AbGroup& source, const AbGroup& target, const Matrix& f);
GroupType image_type(const AbGroup& target, const Matrix& f);

// One disagreement between two charts: kind is "pi", "E", "d", "color" or "tag".
struct ChartDifference {
    std::string kind;
    int page = 0;
    Bidegree at;
    std::string left;
    std::string right;
};

struct DiffOptions {
    int through = 0;  // last differential compared; 0 means the larger declared page bound
    std::optional<std::pair<i64, i64>> stems;
    bool decorations = true;
};

// Compares homotopy, pages and differentials by isomorphism type, plus colors
// and differential tags. Degrees undetermined on either side are skipped.
std::vector<ChartDifference> compare_charts(const SpectralChart& a, const SpectralChart& b,
                                            const DiffOptions& opts = {});

}  // namespace tauchart
