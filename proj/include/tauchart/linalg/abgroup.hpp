#pragma once

#include <string>
#include <vector>

#include "tauchart/linalg/lattice.hpp"

namespace tauchart {

// Isomorphism type: invariant factors (each > 1, each dividing the next) and free rank.
struct GroupType {
    Vec torsion;
    std::size_t rank = 0;

    bool is_zero() const { return torsion.empty() && rank == 0; }
    bool operator==(const GroupType&) const = default;
    std::string to_string() const;
};

GroupType group_type_of_cokernel(const Matrix& relations);

// Finitely generated abelian group given as a sum of cyclic groups with named
// generators. An order of 0 means infinite cyclic; finite orders are >= 2.
class AbGroup {
public:
    AbGroup() = default;
    AbGroup(std::vector<std::string> names, Vec orders);

    static AbGroup zero() { return {}; }

    std::size_t ngens() const { return names_.size(); }
    bool is_zero() const { return names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    const Vec& orders() const { return orders_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const Int& order(std::size_t i) const { return orders_[i]; }
    int index_of(const std::string& name) const;

    GroupType type() const;
    Lattice relations() const;
    Vec reduce(const Vec& v) const;
    bool is_zero_element(const Vec& v) const;
    std::string to_string() const;
    std::string element_to_string(const Vec& v) const;

    bool operator==(const AbGroup&) const = default;

private:
    std::vector<std::string> names_;
    Vec orders_;
};

// Homomorphisms are matrices of shape (target.ngens x source.ngens).
void check_hom(const AbGroup& source, const AbGroup& target, const Matrix& f, const std::string& what);
Matrix reduce_hom(const AbGroup& target, const Matrix& f);
Matrix zero_hom(const AbGroup& source, const AbGroup& target);
Matrix identity_hom(const AbGroup& g);
// Kernel and image as lattices in the ambient coordinates (relations included).
Lattice hom_kernel(const AbGroup& source, const AbGroup& target, const Matrix& f);
Lattice hom_image(const AbGroup& target, const Matrix& f);
bool hom_is_injective(const AbGroup& source, const AbGroup& target, const Matrix& f);
bool hom_is_surjective(const AbGroup& target, const Matrix& f);
bool hom_is_iso(const AbGroup& source, const AbGroup& target, const Matrix& f);
bool hom_equal(const AbGroup& target, const Matrix& f, const Matrix& g);

// num / den inside an ambient group, both taken to contain the ambient relations.
// The result is normalized to cyclic summands with canonical representatives.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const AbGroup& ambient, const Lattice& num, const Lattice& den);

    static Subquotient whole(const AbGroup& ambient);

    const AbGroup& ambient() const { return ambient_; }
    const AbGroup& group() const { return group_; }
    const Lattice& num() const { return num_; }
    const Lattice& den() const { return den_; }
    const Matrix& reps() const { return reps_; }
    Vec rep(std::size_t i) const { return reps_.column(i); }

    bool contains(const Vec& a) const { return num_.contains(a); }
    bool is_zero_class(const Vec& a) const { return den_.contains(a); }
    Vec coords(const Vec& a) const;

    // Map induced by f: ambient -> target.ambient; throws if f does not
    // carry num into num and den into den.
    Matrix induced(const Subquotient& target, const Matrix& f) const;

    bool operator==(const Subquotient& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    AbGroup ambient_;
    Lattice num_, den_;
    AbGroup group_;
    Matrix reps_;       // ambient.ngens x group.ngens
    Matrix coord_map_;  // group.ngens x rank(num)
    bool identity_ = false;
};

// Normalizes Z^n / (column span of relations) with the given generator names.
// Returns the normalized group and the matrix sending presentation generators
// to normalized coordinates.
struct NormalizedPresentation {
    AbGroup group;
    Matrix from_presentation;  // group.ngens x n
    Matrix to_presentation;    // n x group.ngens (representatives)
};
NormalizedPresentation normalize_presentation(const std::vector<std::string>& names, const Matrix& relations);

}  // namespace tauchart
