#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "tauchart/chart/tau_chart.hpp"

namespace tauchart {

inline Bidegree d_target(Bidegree d, i64 r) { return {d.x - 1, d.y + r}; }
inline Bidegree d_source_into(Bidegree d, i64 r) { return {d.x + 1, d.y - r}; }

// The two maps that, together with tau, form the long exact sequence
//   pi(x,y+1) -tau-> pi(x,y) -proj-> E2(x,y) -delta-> pi(x-1,y+2) -tau-> pi(x-1,y+1).
struct LesMaps {
    std::map<Bidegree, Matrix> proj;   // pi(d) -> E2(d)
    std::map<Bidegree, Matrix> delta;  // E2(d) -> pi(d.x - 1, d.y + 2)
};

// Bockstein spectral sequence data: the E2 page, optionally the exact couple
// maps, and declared differentials (matrices on the canonical E_r generators).
class BssPages {
public:
    Window window;
    std::map<Bidegree, AbGroup> e2;
    std::optional<LesMaps> les;
    std::map<int, std::map<Bidegree, Matrix>> differentials;
    int max_page = 2;
    bool complete = false;

    std::optional<AbGroup> e2_at(Bidegree d) const;
    std::optional<Matrix> proj_at(const TauChart& chart, Bidegree d) const;
    std::optional<Matrix> delta_at(const TauChart& chart, Bidegree d) const;
    void validate() const;
};

// One page: E_r at each in-window degree as a subquotient of E_2, and d_r.
struct Page {
    int r = 2;
    std::map<Bidegree, Subquotient> cells;  // determined degrees with E_2 nonzero
    std::set<Bidegree> unknown;             // in-window degrees left undetermined
    std::map<Bidegree, Matrix> d;           // d_r keyed by source (determined, both ends nonzero)
    std::set<Bidegree> d_unknown;
};

class PageStack {
public:
    // Pages E_2 .. E_{last+1} with d_2 .. d_last derived from the exact couple.
    static PageStack from_les(const TauChart& chart, const BssPages& bss, int last);
    // Pages from the declared differentials d_2 .. d_{max_page}.
    static PageStack from_differentials(const BssPages& bss);

    int first_page() const { return 2; }
    int last_page() const { return static_cast<int>(pages_.size()) + 1; }
    const Page& page(int r) const { return pages_.at(static_cast<std::size_t>(r - 2)); }
    const Window& window() const { return bss_->window; }
    const BssPages& bss() const { return *bss_; }
    bool has_les() const { return chart_ != nullptr; }
    const TauChart* chart() const { return chart_.get(); }

    // E_r at any degree (zero outside the window when edges allow it).
    std::optional<Subquotient> cell(int r, Bidegree d) const;
    // d_r from d; zero when either end is zero.
    std::optional<Matrix> diff(int r, Bidegree d) const;
    // Permanent cycles (in E2 coordinates) and E_infinity.
    std::optional<Lattice> permanent_cycles(Bidegree d) const;
    std::optional<Lattice> infinite_boundaries(Bidegree d) const;
    std::optional<Subquotient> e_infinity(Bidegree d) const;

    // Declared differentials in the file format (page -> source -> matrix).
    std::map<int, std::map<Bidegree, Matrix>> differential_table() const;

private:
    std::shared_ptr<const BssPages> bss_;
    std::shared_ptr<const TauChart> chart_;
    std::vector<Page> pages_;
};

// E_{r+1} from E_r and d_r. Throws if d_r o d_r != 0 or a matrix is malformed.
Page turn_page(const Page& er, const BssPages& bss);

// E_r(d) computed directly from the exact couple: Z_r / B_r.
std::optional<Subquotient> les_page_cell(const TauChart& chart, const BssPages& bss, Bidegree d, int r);

}  // namespace tauchart
