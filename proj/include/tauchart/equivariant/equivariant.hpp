#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tauchart/cover/cover.hpp"
#include "tauchart/grading/representation.hpp"

namespace tauchart {

// Geometric fixed points of one object, one member per subgroup in the chain.
// A member is either an explicit tower or a chart supplied by the user.
struct GeomMember {
    std::optional<FilteredComplex> tower;
    std::optional<SpectralChart> chart;
};

struct GeomFamily {
    std::shared_ptr<const GroupData> group;
    std::map<std::size_t, GeomMember> members;  // keyed by position in the subgroup chain; 0 is e
    void validate() const;
};

// y = (|H| - 1) x for the subgroup at position h.
Line slice_line(const GroupData& g, std::size_t h);

// Connectivity of one member with respect to a line, with the degrees above
// the line where it fails.
struct MemberCheck {
    std::size_t subgroup = 0;
    Verdict verdict = Verdict::indeterminate;
    std::vector<Bidegree> witnesses;
    bool missing = false;
};
MemberCheck check_member(const GeomMember& m, const Line& line);
Verdict member_connective(const GeomMember& m, const Line& line);

Verdict slice_connective(const GeomFamily& fam);
// As above but the trivial subgroup is exempt.
Verdict o_slice_connective(const GeomFamily& fam);

enum class SliceKind { slice, o_slice };
struct SliceCheck {
    Verdict verdict = Verdict::yes;
    std::vector<MemberCheck> members;
};
SliceCheck slice_check(const GeomFamily& fam, SliceKind kind);
// The t-structure seen after restricting to the trivial subgroup.
struct RestrictedLine {
    bool trivial = false;  // every object is connective
    Line line;
};
RestrictedLine restricted_line(SliceKind kind);

// The filtered sphere with value S^V from level |V| + s downward.
struct SphereSymbol {
    VirtualRep V;
    i64 s = 0;
    std::size_t ambient() const { return V.subgroup(); }
    bool operator==(const SphereSymbol&) const = default;
    std::string to_string() const;
};

SphereSymbol norm_sphere(std::size_t h, std::size_t g, const SphereSymbol& sym);

struct GeometricSphere {
    i64 dim = 0;    // of the fixed points V^K
    i64 start = 0;  // top nonzero level
    bool operator==(const GeometricSphere&) const = default;
};
GeometricSphere geometric_sphere_chart(const SphereSymbol& sym, std::size_t k);
// The constant tower Z[dim] at levels <= start.
FilteredComplex sphere_tower(const GeometricSphere& s);
// Reads dimension and start back from a tower of that shape.
GeometricSphere read_sphere_tower(const FilteredComplex& x);

// Geometric fixed points of a norm against the dilated geometric fixed points,
// the right-hand side computed by dilating the explicit tower.
struct DilationCheck {
    GeometricSphere lhs;
    GeometricSphere rhs;
    bool holds() const { return lhs == rhs; }
};
DilationCheck dilation_relation_check(std::size_t h, std::size_t g, const SphereSymbol& sym);

// Finitely supported data indexed by virtual representations of one subgroup:
// a complex per support element and maps X^W -> X^V for V <= W of adjacent dimension.
struct ROFiltered {
    std::shared_ptr<const GroupData> group;
    std::size_t subgroup = 0;
    std::map<VirtualRep, ChainComplex> values;
    std::map<std::pair<VirtualRep, VirtualRep>, ChainMap> maps;  // (W, V) with V <= W, |W| = |V| + 1
    // Irreducibles along which the data is declared constant outside the support.
    std::vector<std::string> constant_axes;
    void validate() const;
};

// Level n is the sum of X^V over supported V with |V| = n; a zero level sits below.
FilteredComplex total(const ROFiltered& x);
// (dim* Z)^V = Z^{|V|}, with Z's structure maps between comparable pairs.
ROFiltered dim_pullback(const FilteredComplex& z, std::shared_ptr<const GroupData> group, std::size_t subgroup,
                        const std::vector<VirtualRep>& support);

struct MixedGenerator {
    std::size_t subgroup = 0;  // induced up from this subgroup
    VirtualRep rep;
    bool operator==(const MixedGenerator&) const = default;
    std::string to_string(const GroupData& g) const;
};
// Generators of level i of the mixed t-structure, with m restricted to [m_lo, m_hi].
std::vector<MixedGenerator> mixed_generators(i64 i, std::shared_ptr<const GroupData> group, i64 m_lo, i64 m_hi);

}  // namespace tauchart
