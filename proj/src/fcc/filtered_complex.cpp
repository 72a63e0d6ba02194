#include "tauchart/fcc/filtered_complex.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tauchart/linalg/normal_forms.hpp"

namespace tauchart {

namespace {

const ChainComplex& zero_complex() {
    static const ChainComplex z;
    return z;
}

}  // namespace

FilteredComplex FilteredComplex::yoneda(i64 k) {
    ChainComplex c;
    c.ranks[0] = 1;
    return constant(c, k);
}

FilteredComplex FilteredComplex::constant(const ChainComplex& c, i64 top) {
    FilteredComplex x;
    x.N0 = x.N1 = top;
    x.levels = {c};
    return x;
}

const ChainComplex& FilteredComplex::level(i64 n) const {
    if (is_empty() || n > N1) return zero_complex();
    if (n < N0) return levels.front();
    return levels[static_cast<std::size_t>(n - N0)];
}

ChainMap FilteredComplex::structure(i64 n) const {
    if (is_empty() || n >= N1) return {};
    if (n < N0) return ChainMap::identity(levels.front());
    return maps[static_cast<std::size_t>(n - N0)];
}

ChainMap FilteredComplex::structure(i64 m, i64 n) const {
    if (m < n) throw MathError("structure map goes down in level");
    ChainMap acc = ChainMap::identity(level(m));
    for (i64 j = m - 1; j >= n; --j) acc = ChainMap::compose(structure(j), acc, level(m), level(j + 1), level(j));
    return acc;
}

std::optional<std::pair<i64, i64>> FilteredComplex::degree_range() const {
    std::optional<std::pair<i64, i64>> r;
    for (const auto& c : levels) {
        auto cr = c.degree_range();
        if (!cr) continue;
        if (!r)
            r = cr;
        else
            r = std::make_pair(std::min(r->first, cr->first), std::max(r->second, cr->second));
    }
    return r;
}

void FilteredComplex::validate() const {
    if (is_empty()) {
        if (!levels.empty() || !maps.empty()) throw MathError("empty tower carries levels");
        return;
    }
    const auto count = static_cast<std::size_t>(N1 - N0 + 1);
    if (levels.size() != count) throw MathError("tower has the wrong number of levels");
    if (maps.size() != count - 1) throw MathError("tower has the wrong number of structure maps");
    for (std::size_t i = 0; i < count; ++i) {
        try {
            levels[i].validate();
        } catch (const MathError& e) {
            throw MathError("level " + std::to_string(N0 + static_cast<i64>(i)) + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i + 1 < count; ++i)
        if (!is_chain_map(levels[i + 1], levels[i], maps[i]))
            throw MathError("structure map into level " + std::to_string(N0 + static_cast<i64>(i)) +
                            " is not a chain map");
}

FilteredComplex FilteredComplex::canonical() const {
    FilteredComplex c = *this;
    while (!c.is_empty() && c.levels.back().is_zero()) {
        c.levels.pop_back();
        if (!c.maps.empty()) c.maps.pop_back();
        --c.N1;
    }
    if (c.is_empty()) return {};
    while (c.N1 > c.N0 && c.levels[1] == c.levels[0] && c.maps[0] == ChainMap::identity(c.levels[0])) {
        c.levels.erase(c.levels.begin());
        c.maps.erase(c.maps.begin());
        ++c.N0;
    }
    return c;
}

ChainMap FilteredMap::at(i64 n) const {
    if (N1 < N0 || n > N1) return {};
    if (n < N0) return components.front();
    return components[static_cast<std::size_t>(n - N0)];
}

void FilteredMap::validate() const {
    source.validate();
    target.validate();
    if (N1 >= N0 && components.size() != static_cast<std::size_t>(N1 - N0 + 1))
        throw MathError("filtered map has the wrong number of components");
    i64 lo = std::min({N0, source.N0, target.N0}) - 1;
    i64 hi = std::max({N1, source.N1, target.N1}) + 1;
    for (i64 n = lo; n <= hi; ++n) {
        if (!is_chain_map(source.level(n), target.level(n), at(n)))
            throw MathError("filtered map is not a chain map at level " + std::to_string(n));
        ChainMap a = ChainMap::compose(target.structure(n), at(n + 1), source.level(n + 1), target.level(n + 1),
                                       target.level(n));
        ChainMap b = ChainMap::compose(at(n), source.structure(n), source.level(n + 1), source.level(n),
                                       target.level(n));
        if (!(a == b)) throw MathError("filtered map does not commute with structure maps at level " + std::to_string(n));
    }
}

FilteredMap FilteredMap::identity(const FilteredComplex& x) {
    FilteredMap f;
    f.source = f.target = x;
    f.N0 = x.N0;
    f.N1 = x.N1;
    for (const auto& c : x.levels) f.components.push_back(ChainMap::identity(c));
    return f;
}

Window default_window(const FilteredComplex& x) {
    Window w{0, 0, 0, 0, Edge::zero, Edge::zero, Edge::zero, Edge::zero};
    auto dr = x.degree_range();
    if (x.is_empty() || !dr) return w;
    w.x0 = dr->first;
    w.x1 = dr->second + 1;
    w.y0 = x.N0 - w.x1 - 1;
    w.y1 = x.N1 - w.x0;
    w.bottom = Edge::stable;
    return w;
}

namespace {

// Homology of each (level, degree), sharing the constant range below N0.
class HomologyCache {
public:
    explicit HomologyCache(const FilteredComplex& x) : x_(x) {}

    const Subquotient& get(i64 n, i64 k) {
        n = clamp(n);
        auto key = std::make_pair(n, k);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, homology(x_.level(n), k)).first;
        return it->second;
    }
    i64 clamp(i64 n) const { return x_.is_empty() ? n : std::max(n, x_.N0 - 1); }

private:
    const FilteredComplex& x_;
    std::map<std::pair<i64, i64>, Subquotient> cache_;
};

Matrix top_inclusion(std::size_t cone_rank, std::size_t b_rank) {
    Matrix m(cone_rank, b_rank);
    for (std::size_t i = 0; i < b_rank; ++i) m(i, i) = 1;
    return m;
}

Matrix bottom_projection(std::size_t cone_rank, std::size_t b_rank) {
    Matrix m(cone_rank - b_rank, cone_rank);
    for (std::size_t i = 0; i + b_rank < cone_rank; ++i) m(i, b_rank + i) = 1;
    return m;
}

}  // namespace

TauChart homotopy_chart(const FilteredComplex& x, const Window& w) {
    TauChart t;
    t.window = w;
    HomologyCache h(x);
    for (i64 a = w.x0; a <= w.x1; ++a)
        for (i64 b = w.y0; b <= w.y1; ++b) {
            const Subquotient& sq = h.get(a + b, a);
            if (!sq.group().is_zero()) t.cells[{a, b}] = sq.group();
        }
    for (i64 a = w.x0; a <= w.x1; ++a)
        for (i64 b = w.y0 + 1; b <= w.y1; ++b) {
            const i64 n = a + b - 1;
            const Subquotient& src = h.get(n + 1, a);
            const Subquotient& tgt = h.get(n, a);
            if (src.group().is_zero() || tgt.group().is_zero()) continue;
            Matrix m = src.induced(tgt, x.structure(n).at(a, x.level(n + 1), x.level(n)));
            if (!m.is_zero()) t.tau[{a, b}] = std::move(m);
        }
    return t;
}

TauChart homotopy_chart(const FilteredComplex& x) { return homotopy_chart(x, default_window(x)); }

ChainComplex gr_level(const FilteredComplex& x, i64 n) {
    return cone(x.level(n + 1), x.level(n), x.structure(n));
}

std::map<i64, ChainComplex> gr(const FilteredComplex& x) {
    std::map<i64, ChainComplex> out;
    if (x.is_empty()) return out;
    for (i64 n = x.N0 - 1; n <= x.N1; ++n) out[n] = gr_level(x, n);
    return out;
}

SpectralChart spectral_chart(const FilteredComplex& x, int R, const Window& w) {
    if (R < 2) throw MathError("page bound must be at least 2");
    SpectralChart sc;
    sc.has_pi = true;
    sc.pi = homotopy_chart(x, w);
    BssPages& bss = sc.bss;
    bss.window = w;
    bss.les = LesMaps{};
    HomologyCache h(x);
    std::map<i64, ChainComplex> cones;
    auto cone_at = [&](i64 n) -> const ChainComplex& {
        n = h.clamp(n);
        auto it = cones.find(n);
        if (it == cones.end()) it = cones.emplace(n, gr_level(x, n)).first;
        return it->second;
    };
    for (i64 a = w.x0; a <= w.x1; ++a)
        for (i64 b = w.y0; b <= w.y1; ++b) {
            const i64 n = a + b;
            const ChainComplex& c = cone_at(n);
            Subquotient e = homology(c, a);
            if (e.group().is_zero()) continue;
            bss.e2[{a, b}] = e.group();
            const Subquotient& p = h.get(n, a);
            if (!p.group().is_zero()) {
                Matrix m = p.induced(e, top_inclusion(c.rank(a), x.level(n).rank(a)));
                if (!m.is_zero()) bss.les->proj[{a, b}] = std::move(m);
            }
            if (w.contains({a - 1, b + 2})) {
                const Subquotient& q = h.get(n + 1, a - 1);
                if (!q.group().is_zero()) {
                    Matrix m = e.induced(q, bottom_projection(c.rank(a), x.level(n).rank(a)));
                    if (!m.is_zero()) bss.les->delta[{a, b}] = std::move(m);
                }
            }
        }
    bss.max_page = R;
    bss.complete = x.is_empty() || R >= x.N1 - x.N0 + 1;
    bss.differentials = PageStack::from_les(sc.pi, bss, R).differential_table();
    return sc;
}

SpectralChart spectral_chart(const FilteredComplex& x, int R) { return spectral_chart(x, R, default_window(x)); }

BssPages bss_pages(const FilteredComplex& x, int R, const Window& w) { return spectral_chart(x, R, w).bss; }

namespace {

struct Truncated {
    ChainComplex c;
    ChainMap inc;
    i64 k;
};

i64 cover_bottom_level(const FilteredComplex& x, const Line& line) {
    auto dr = x.degree_range();
    i64 n = x.N0;
    if (!dr) return n;
    while (line.cover_threshold(n) > dr->first) --n;
    return n;
}

}  // namespace

FilteredMap linear_cover_map(const FilteredComplex& x, const Line& line) {
    FilteredMap out;
    out.target = x;
    if (x.is_empty()) {
        out.source = x;
        return out;
    }
    const i64 N0 = cover_bottom_level(x, line);
    std::vector<Truncated> levels;
    for (i64 n = N0; n <= x.N1; ++n) {
        const i64 k = line.cover_threshold(n);
        auto [c, inc] = smart_truncation(x.level(n), k);
        levels.push_back({std::move(c), std::move(inc), k});
    }
    FilteredComplex& cov = out.source;
    cov.N0 = N0;
    cov.N1 = x.N1;
    for (const auto& t : levels) cov.levels.push_back(t.c);
    for (i64 n = N0; n < x.N1; ++n) {
        const Truncated& src = levels[static_cast<std::size_t>(n + 1 - N0)];
        const Truncated& tgt = levels[static_cast<std::size_t>(n - N0)];
        ChainMap f = x.structure(n);
        ChainMap g;
        for (const auto& [j, r] : src.c.ranks) {
            Matrix m = f.at(j, x.level(n + 1), x.level(n)) * src.inc.at(j, src.c, x.level(n + 1));
            if (j == tgt.k) {
                Matrix basis = tgt.inc.at(j, tgt.c, x.level(n));
                Matrix coords(basis.cols(), r);
                if (basis.cols() > 0) {
                    IntegerSolver solver(basis);
                    for (std::size_t col = 0; col < r; ++col) {
                        auto sol = solver.solve(m.column(col));
                        if (!sol) throw MathError("structure map does not preserve cycles in the cut degree");
                        coords.set_column(col, *sol);
                    }
                }
                m = coords;
            }
            g.set(j, std::move(m));
        }
        cov.maps.push_back(std::move(g));
    }
    out.N0 = N0;
    out.N1 = x.N1;
    for (const auto& t : levels) out.components.push_back(t.inc);
    return out;
}

FilteredComplex linear_cover_fcc(const FilteredComplex& x, const Line& line) {
    return linear_cover_map(x, line).source;
}

FilteredComplex dilate_fcc(const FilteredComplex& x, i64 n) {
    if (n < 1) throw MathError("dilation factor must be at least 1");
    if (x.is_empty()) return x;
    FilteredComplex out;
    out.N0 = n * (x.N0 - 1) + 1;
    out.N1 = n * x.N1;
    for (i64 m = out.N0; m <= out.N1; ++m) out.levels.push_back(x.level(ceil_div(m, n)));
    for (i64 m = out.N0; m < out.N1; ++m) {
        const i64 hi = ceil_div(m + 1, n), lo = ceil_div(m, n);
        out.maps.push_back(hi == lo ? ChainMap::identity(x.level(lo)) : x.structure(lo));
    }
    return out;
}

FilteredComplex shift_fcc(const FilteredComplex& x, i64 a, i64 s) {
    if (x.is_empty()) return x;
    FilteredComplex out;
    out.N0 = x.N0 + a + s;
    out.N1 = x.N1 + a + s;
    for (const auto& c : x.levels) out.levels.push_back(c.shifted(a));
    for (const auto& m : x.maps) {
        ChainMap g;
        for (const auto& [k, f] : m.f) g.f[k + a] = f;
        out.maps.push_back(std::move(g));
    }
    return out;
}

i64 eventually_constant_bound(const FilteredComplex& x) { return -x.canonical().N0; }

FilteredComplex whitehead_tower(const ChainComplex& c) {
    auto dr = c.degree_range();
    if (!dr) return {};
    return linear_cover_fcc(FilteredComplex::constant(c, dr->second), Line(Rational(0, 1)));
}

namespace {

ChainMap block_sum(const ChainMap& f, const ChainMap& g, const ChainComplex& a1, const ChainComplex& b1,
                   const ChainComplex& a2, const ChainComplex& b2) {
    ChainMap out;
    std::set<i64> degrees;
    for (const auto& [k, r] : a1.ranks) degrees.insert(k);
    for (const auto& [k, r] : a2.ranks) degrees.insert(k);
    for (i64 k : degrees) {
        Matrix m(b1.rank(k) + b2.rank(k), a1.rank(k) + a2.rank(k));
        Matrix x = f.at(k, a1, b1), y = g.at(k, a2, b2);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j) m(b1.rank(k) + i, a1.rank(k) + j) = y(i, j);
        out.set(k, std::move(m));
    }
    return out;
}

}  // namespace

FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    FilteredComplex out;
    out.N0 = std::min(a.N0, b.N0);
    out.N1 = std::max(a.N1, b.N1);
    for (i64 n = out.N0; n <= out.N1; ++n) out.levels.push_back(direct_sum(a.level(n), b.level(n)));
    for (i64 n = out.N0; n < out.N1; ++n)
        out.maps.push_back(block_sum(a.structure(n), b.structure(n), a.level(n + 1), a.level(n), b.level(n + 1),
                                     b.level(n)));
    return out;
}

// Random towers are built from elementary pieces (a sphere Z[k], or a disk
// Z[k+1] -m-> Z[k]) joined by chain maps that are compatible piece by piece,
// then conjugated by small unimodular basis changes in every degree.
namespace {

struct Piece {
    bool disk = false;
    i64 k = 0;
    Int m = 1;
};

using Pieces = std::vector<Piece>;

struct Rng {
    std::mt19937_64 gen;
    i64 uniform(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(gen); }
    bool coin(double p) { return std::bernoulli_distribution(p)(gen); }
    i64 nonzero(i64 bound) {
        i64 v = uniform(1, bound);
        return coin(0.5) ? v : -v;
    }
};

std::map<i64, std::size_t> piece_ranks(const Pieces& ps) {
    std::map<i64, std::size_t> r;
    for (const auto& p : ps) {
        ++r[p.k];
        if (p.disk) ++r[p.k + 1];
    }
    return r;
}

bool fits(const Pieces& ps, const Piece& p, std::size_t cap) {
    auto r = piece_ranks(ps);
    if (r[p.k] + 1 > cap) return false;
    if (p.disk && r[p.k + 1] + 1 > cap) return false;
    return true;
}

Pieces random_pieces(Rng& rng, i64 lo, i64 span, std::size_t cap, int max_entry, Pieces start = {}) {
    const int count = static_cast<int>(rng.uniform(0, 3));
    for (int i = 0; i < count; ++i) {
        Piece p;
        p.disk = span > 0 && rng.coin(0.45);
        p.k = rng.uniform(lo, lo + span - (p.disk ? 1 : 0));
        p.m = p.disk ? Int(rng.uniform(1, std::max(1, max_entry))) : Int(1);
        if (fits(start, p, cap)) start.push_back(p);
    }
    return start;
}

// Position of each piece's basis vectors inside its degrees.
struct Layout {
    ChainComplex c;
    std::vector<std::size_t> bottom, top;
};

Layout layout(const Pieces& ps) {
    Layout l;
    std::map<i64, std::size_t> next;
    for (const auto& p : ps) {
        l.bottom.push_back(next[p.k]++);
        l.top.push_back(p.disk ? next[p.k + 1]++ : 0);
    }
    for (const auto& [k, r] : next)
        if (r > 0) l.c.ranks[k] = r;
    std::map<i64, Matrix> d;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!ps[i].disk) continue;
        const i64 k = ps[i].k + 1;
        auto it = d.find(k);
        if (it == d.end()) it = d.emplace(k, Matrix(l.c.rank(k - 1), l.c.rank(k))).first;
        it->second(l.bottom[i], l.top[i]) = ps[i].m;
    }
    for (auto& [k, m] : d) l.c.set_diff(k, std::move(m));
    return l;
}

struct Entry {
    i64 degree;
    std::size_t row, col;
    Int value;
};

// All nonzero chain-map components between two pieces, chosen at random.
void piece_map(Rng& rng, const Piece& p, std::size_t pi, const Layout& lp, const Piece& q, std::size_t qi,
               const Layout& lq, int max_entry, std::vector<Entry>& out) {
    auto c = [&] { return Int(rng.nonzero(max_entry)); };
    if (!p.disk && !q.disk && p.k == q.k) {
        out.push_back({p.k, lq.bottom[qi], lp.bottom[pi], c()});
    } else if (!p.disk && q.disk && p.k == q.k) {
        out.push_back({p.k, lq.bottom[qi], lp.bottom[pi], c()});
    } else if (p.disk && !q.disk && q.k == p.k + 1) {
        out.push_back({q.k, lq.bottom[qi], lp.top[pi], c()});
    } else if (p.disk && q.disk && p.k == q.k) {
        Int g = gcd(p.m, q.m);
        Int t = rng.nonzero(2);
        out.push_back({p.k + 1, lq.top[qi], lp.top[pi], t * p.m / g});
        out.push_back({p.k, lq.bottom[qi], lp.bottom[pi], t * q.m / g});
    } else if (p.disk && q.disk && q.k == p.k + 1) {
        out.push_back({q.k, lq.bottom[qi], lp.top[pi], c()});
    }
}

ChainMap assemble(const std::vector<Entry>& entries, const ChainComplex& a, const ChainComplex& b) {
    std::map<i64, Matrix> f;
    for (const auto& e : entries) {
        auto it = f.find(e.degree);
        if (it == f.end()) it = f.emplace(e.degree, Matrix(b.rank(e.degree), a.rank(e.degree))).first;
        it->second(e.row, e.col) += e.value;
    }
    ChainMap m;
    for (auto& [k, mat] : f) m.set(k, std::move(mat));
    return m;
}

struct BasisChange {
    std::map<i64, Matrix> u, u_inv;
};

BasisChange random_basis_change(Rng& rng, const ChainComplex& c) {
    BasisChange b;
    for (const auto& [k, r] : c.ranks) {
        Matrix u = Matrix::identity(r), ui = Matrix::identity(r);
        if (r > 1) {
            const int ops = static_cast<int>(rng.uniform(0, 2));
            for (int o = 0; o < ops; ++o) {
                auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<i64>(r) - 1));
                auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<i64>(r) - 2));
                if (j >= i) ++j;
                Int s = rng.coin(0.5) ? 1 : -1;
                u.add_row(i, j, s);
                ui.add_col(j, i, -s);
            }
        }
        b.u[k] = u;
        b.u_inv[k] = ui;
    }
    return b;
}

Matrix conj(const BasisChange& tgt, i64 kt, const Matrix& m, const BasisChange& src, i64 ks) {
    auto a = tgt.u.find(kt);
    auto b = src.u_inv.find(ks);
    Matrix out = m;
    if (a != tgt.u.end()) out = a->second * out;
    if (b != src.u_inv.end()) out = out * b->second;
    return out;
}

}  // namespace

FilteredComplex random_tower(std::uint64_t seed, const RandomTowerOptions& opts) {
    Rng rng{std::mt19937_64(seed)};
    const i64 nlev = rng.uniform(1, opts.max_levels);
    const i64 N0 = rng.uniform(-3, 1);
    const i64 lo = rng.uniform(-1, 1);
    const i64 span = rng.uniform(0, opts.max_degree_span);
    const std::size_t cap = opts.max_rank;

    std::vector<Pieces> pieces(static_cast<std::size_t>(nlev));
    std::vector<std::vector<Entry>> entries(static_cast<std::size_t>(nlev - 1));
    pieces.back() = random_pieces(rng, lo, span, cap, opts.max_entry);
    while (pieces.back().empty()) pieces.back() = random_pieces(rng, lo, span, cap, opts.max_entry);
    for (i64 i = nlev - 2; i >= 0; --i) {
        const Pieces& above = pieces[static_cast<std::size_t>(i + 1)];
        Pieces& here = pieces[static_cast<std::size_t>(i)];
        const i64 mode = rng.uniform(0, 3);
        std::vector<std::pair<std::size_t, std::size_t>> identity_pairs;
        if (mode == 0) {
            here = above;  // inclusion of a summand
            for (std::size_t j = 0; j < above.size(); ++j) identity_pairs.emplace_back(j, j);
            here = random_pieces(rng, lo, span, cap, opts.max_entry, here);
        } else if (mode == 1) {
            for (std::size_t j = 0; j < above.size(); ++j)  // projection onto a summand
                if (rng.coin(0.6)) {
                    identity_pairs.emplace_back(j, here.size());
                    here.push_back(above[j]);
                }
        } else {
            here = random_pieces(rng, lo, span, cap, opts.max_entry);
        }
        Layout la = layout(above), lh = layout(here);
        auto& es = entries[static_cast<std::size_t>(i)];
        for (auto [s, t] : identity_pairs) {
            es.push_back({above[s].k, lh.bottom[t], la.bottom[s], 1});
            if (above[s].disk) es.push_back({above[s].k + 1, lh.top[t], la.top[s], 1});
        }
        if (mode >= 2) {
            for (std::size_t s = 0; s < above.size(); ++s)
                for (std::size_t t = 0; t < here.size(); ++t)
                    if (rng.coin(0.5)) piece_map(rng, above[s], s, la, here[t], t, lh, opts.max_entry, es);
        }
    }

    FilteredComplex x;
    x.N0 = N0;
    x.N1 = N0 + nlev - 1;
    std::vector<Layout> lays;
    std::vector<BasisChange> changes;
    for (const auto& ps : pieces) {
        lays.push_back(layout(ps));
        changes.push_back(random_basis_change(rng, lays.back().c));
    }
    for (std::size_t i = 0; i < lays.size(); ++i) {
        ChainComplex c;
        c.ranks = lays[i].c.ranks;
        for (const auto& [k, m] : lays[i].c.d) c.set_diff(k, conj(changes[i], k - 1, m, changes[i], k));
        x.levels.push_back(std::move(c));
    }
    for (std::size_t i = 0; i + 1 < lays.size(); ++i) {
        ChainMap raw = assemble(entries[i], lays[i + 1].c, lays[i].c);
        ChainMap m;
        for (const auto& [k, f] : raw.f) m.set(k, conj(changes[i], k, f, changes[i + 1], k));
        x.maps.push_back(std::move(m));
    }
    x.validate();
    return x;
}

}  // namespace tauchart
