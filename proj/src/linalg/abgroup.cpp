#include "tauchart/linalg/abgroup.hpp"

#include <sstream>

#include "tauchart/linalg/normal_forms.hpp"

namespace tauchart {

std::string GroupType::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : "+") << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

GroupType group_type_of_cokernel(const Matrix& relations) {
    GroupType g;
    Vec inv = smith_invariants(relations);
    for (const auto& d : inv)
        if (d != 1) g.torsion.push_back(d);
    g.rank = relations.rows() - inv.size();
    return g;
}

AbGroup::AbGroup(std::vector<std::string> names, Vec orders) : names_(std::move(names)), orders_(std::move(orders)) {
    if (names_.size() != orders_.size()) throw MathError("AbGroup: names/orders size mismatch");
    for (const auto& o : orders_)
        if (o < 0 || o == 1) throw MathError("AbGroup: generator orders must be 0 or >= 2");
}

int AbGroup::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

GroupType AbGroup::type() const { return group_type_of_cokernel(Matrix::diagonal(orders_)); }

Lattice AbGroup::relations() const {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < ngens(); ++i)
        if (orders_[i] != 0) {
            Vec v(ngens());
            v[i] = orders_[i];
            gens.push_back(v);
        }
    return Lattice::span(ngens(), gens);
}

Vec AbGroup::reduce(const Vec& v) const {
    if (v.size() != ngens()) throw MathError("AbGroup::reduce: dimension mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (orders_[i] != 0) r[i] = mod_nonneg(r[i], orders_[i]);
    return r;
}

bool AbGroup::is_zero_element(const Vec& v) const { return tauchart::is_zero(reduce(v)); }

std::string AbGroup::to_string() const { return type().to_string(); }

std::string AbGroup::element_to_string(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] < 0)
            os << "-";
        else if (!first)
            os << "+";
        Int a = abs(v[i]);
        if (a != 1) os << a.get_str() << "*";
        os << names_[i];
        first = false;
    }
    return first ? "0" : os.str();
}

void check_hom(const AbGroup& s, const AbGroup& t, const Matrix& f, const std::string& what) {
    if (f.rows() != t.ngens() || f.cols() != s.ngens())
        throw MathError(what + ": matrix shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                        " does not match groups " + std::to_string(t.ngens()) + "x" + std::to_string(s.ngens()));
    for (std::size_t j = 0; j < s.ngens(); ++j) {
        if (s.order(j) == 0) continue;
        for (std::size_t i = 0; i < t.ngens(); ++i)
            if (!divides(t.order(i), s.order(j) * f(i, j)))
                throw MathError(what + ": not a homomorphism (generator " + s.name(j) + " of order " +
                                s.order(j).get_str() + ")");
    }
}

Matrix reduce_hom(const AbGroup& t, const Matrix& f) {
    Matrix r = f;
    for (std::size_t i = 0; i < r.rows(); ++i)
        if (t.order(i) != 0)
            for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod_nonneg(r(i, j), t.order(i));
    return r;
}

Matrix zero_hom(const AbGroup& s, const AbGroup& t) { return Matrix(t.ngens(), s.ngens()); }

Matrix identity_hom(const AbGroup& g) { return Matrix::identity(g.ngens()); }

Lattice hom_kernel(const AbGroup& s, const AbGroup& t, const Matrix& f) {
    return Lattice::preimage(f, t.relations()) + s.relations();
}

Lattice hom_image(const AbGroup& t, const Matrix& f) { return Lattice::span_cols(f) + t.relations(); }

bool hom_is_injective(const AbGroup& s, const AbGroup& t, const Matrix& f) {
    return hom_kernel(s, t, f) == s.relations();
}

bool hom_is_surjective(const AbGroup& t, const Matrix& f) {
    return hom_image(t, f) == Lattice::full(t.ngens());
}

bool hom_is_iso(const AbGroup& s, const AbGroup& t, const Matrix& f) {
    return hom_is_injective(s, t, f) && hom_is_surjective(t, f);
}

bool hom_equal(const AbGroup& t, const Matrix& f, const Matrix& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
    return reduce_hom(t, f) == reduce_hom(t, g);
}

Subquotient Subquotient::whole(const AbGroup& a) { return Subquotient(a, Lattice::full(a.ngens()), a.relations()); }

Subquotient::Subquotient(const AbGroup& ambient, const Lattice& num, const Lattice& den) : ambient_(ambient) {
    const std::size_t n = ambient.ngens();
    if (num.ambient() != n || den.ambient() != n) throw MathError("Subquotient: dimension mismatch");
    Lattice rel = ambient.relations();
    den_ = den + rel;
    num_ = num + den_;
    if (num_ == Lattice::full(n) && den_ == rel) {
        identity_ = true;
        group_ = ambient;
        reps_ = Matrix::identity(n);
        coord_map_ = Matrix::identity(n);
        return;
    }
    const Matrix& b = num_.basis();
    const std::size_t k = b.rows();
    std::vector<Vec> cols;
    for (const auto& v : den_.basis_vectors()) cols.push_back(*num_.coordinates(v));
    Matrix c = Matrix::from_columns(cols, k);
    SmithForm sf = smith_form(c, true);
    std::vector<std::string> names;
    Vec orders;
    std::vector<Vec> rep_cols, coord_rows;
    Matrix bt = b.transpose();
    for (std::size_t i = 0; i < k; ++i) {
        Int d = i < sf.rank ? sf.diagonal[i] : Int(0);
        if (d == 1) continue;
        Vec rep = bt * sf.U_inv.column(i);
        Vec crow = sf.U.row(i);
        Vec red = ambient.reduce(rep);
        std::size_t p = 0;
        while (p < red.size() && red[p] == 0) ++p;
        if (p < red.size() && red[p] < 0) {
            rep = vec_scale(rep, -1);
            crow = vec_scale(crow, -1);
            red = ambient.reduce(rep);
        }
        names.push_back(ambient.element_to_string(red));
        orders.push_back(d);
        rep_cols.push_back(red);
        coord_rows.push_back(crow);
    }
    group_ = AbGroup(names, orders);
    reps_ = Matrix::from_columns(rep_cols, n);
    coord_map_ = Matrix::from_rows(coord_rows, k);
}

Vec Subquotient::coords(const Vec& a) const {
    if (identity_) return ambient_.reduce(a);
    auto c = num_.coordinates(a);
    if (!c) throw MathError("Subquotient::coords: element not in the numerator");
    return group_.reduce(coord_map_ * *c);
}

Matrix Subquotient::induced(const Subquotient& target, const Matrix& f) const {
    if (f.cols() != ambient_.ngens() || f.rows() != target.ambient_.ngens())
        throw MathError("Subquotient::induced: shape mismatch");
    for (const auto& v : den_.basis_vectors())
        if (!target.den_.contains(f * v)) throw MathError("induced map: boundaries not carried to boundaries");
    Matrix out(target.group_.ngens(), group_.ngens());
    for (std::size_t j = 0; j < group_.ngens(); ++j) {
        Vec img = f * rep(j);
        if (!target.num_.contains(img)) throw MathError("induced map: cycles not carried to cycles");
        out.set_column(j, target.coords(img));
    }
    return out;
}

NormalizedPresentation normalize_presentation(const std::vector<std::string>& names, const Matrix& relations) {
    const std::size_t n = names.size();
    if (relations.rows() != n) throw MathError("presentation: relation matrix has wrong row count");
    AbGroup free_group(names, Vec(n, Int(0)));
    Subquotient sq(free_group, Lattice::full(n), Lattice::span_cols(relations));
    NormalizedPresentation out;
    out.group = sq.group();
    out.to_presentation = sq.reps();
    out.from_presentation = Matrix(sq.group().ngens(), n);
    for (std::size_t j = 0; j < n; ++j) out.from_presentation.set_column(j, sq.coords(unit_vector(n, j)));
    return out;
}

}  // namespace tauchart
