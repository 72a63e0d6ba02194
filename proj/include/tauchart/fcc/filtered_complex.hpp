#pragma once

#include <cstdint>
#include <vector>

#include "tauchart/chart/spectral_chart.hpp"
#include "tauchart/fcc/chain_complex.hpp"

namespace tauchart {

// A tower ... -> X^{n+1} -> X^n -> ... of chain complexes with explicit levels
// N0..N1. Below N0 the tower is constant (X^n = X^{N0}, identity maps); above
// N1 it is zero. An empty tower has N1 < N0.
class FilteredComplex {
public:
    i64 N0 = 0;
    i64 N1 = -1;
    std::vector<ChainComplex> levels;  // levels[n - N0]
    std::vector<ChainMap> maps;        // maps[n - N0] : X^{n+1} -> X^n, n in [N0, N1)

    static FilteredComplex empty() { return {}; }
    // Z[0] at levels <= k, zero above.
    static FilteredComplex yoneda(i64 k);
    // The constant tower on c, cut off above level top.
    static FilteredComplex constant(const ChainComplex& c, i64 top);

    bool is_empty() const { return N1 < N0; }
    const ChainComplex& level(i64 n) const;
    // Structure map X^{n+1} -> X^n.
    ChainMap structure(i64 n) const;
    // Composite X^m -> X^n for m >= n.
    ChainMap structure(i64 m, i64 n) const;

    std::optional<std::pair<i64, i64>> degree_range() const;
    void validate() const;
    // Drops redundant explicit levels so that equal towers compare equal.
    FilteredComplex canonical() const;

    bool operator==(const FilteredComplex&) const = default;
};

// A map of towers: a chain map on each level, commuting with structure maps.
// Components below N0 repeat the one at N0; levels absent from either side use
// the conventions above.
struct FilteredMap {
    FilteredComplex source;
    FilteredComplex target;
    i64 N0 = 0;
    i64 N1 = -1;
    std::vector<ChainMap> components;  // components[n - N0]

    ChainMap at(i64 n) const;
    void validate() const;
    static FilteredMap identity(const FilteredComplex& x);
};

// The window in which a tower's chart is fully determined with zero or stable edges.
Window default_window(const FilteredComplex& x);

// pi_{x,y} = H_x(X^{x+y}) with tau induced by the structure maps.
TauChart homotopy_chart(const FilteredComplex& x, const Window& w);
TauChart homotopy_chart(const FilteredComplex& x);

// gr^n = cone(X^{n+1} -> X^n), for n in [N0 - 1, N1].
std::map<i64, ChainComplex> gr(const FilteredComplex& x);
ChainComplex gr_level(const FilteredComplex& x, i64 n);

// E2 = H(gr), with the exact couple maps and derived differentials d_2..d_R.
SpectralChart spectral_chart(const FilteredComplex& x, int R, const Window& w);
SpectralChart spectral_chart(const FilteredComplex& x, int R);
BssPages bss_pages(const FilteredComplex& x, int R, const Window& w);

// Level n of the cover is the smart truncation of X^n at cover_threshold(n).
FilteredComplex linear_cover_fcc(const FilteredComplex& x, const Line& line);
// The canonical map from the cover.
FilteredMap linear_cover_map(const FilteredComplex& x, const Line& line);

// (D^n X)^m = X^{ceil(m/n)}.
FilteredComplex dilate_fcc(const FilteredComplex& x, i64 n);
// Homological shift by a, level shift by a + s.
FilteredComplex shift_fcc(const FilteredComplex& x, i64 a, i64 s);
// Least N with X^{-n} -> X^{-n-1} an equality for all n >= N.
i64 eventually_constant_bound(const FilteredComplex& x);
// tau_{>= n} c at level n: the Whitehead tower of a bounded complex.
FilteredComplex whitehead_tower(const ChainComplex& c);

FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b);

struct RandomTowerOptions {
    int max_levels = 8;
    int max_degree_span = 4;   // chain degrees lo..lo+span, within [-1, 9]
    std::size_t max_rank = 4;  // per degree and level
    int max_entry = 3;
};
FilteredComplex random_tower(std::uint64_t seed, const RandomTowerOptions& opts = {});

}  // namespace tauchart
