#include "tauchart/grading/representation.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

#include "tauchart/linalg/integer.hpp"

namespace tauchart {

namespace {

std::vector<Irrep> cyclic_irreps(int m) {
    std::vector<Irrep> out{{"1", 1, 1}};
    if (m >= 2) out.push_back({"sigma", 1, 1});
    for (int a = 1; 2 * a < m; ++a) out.push_back({m == 4 ? "lambda" : "lambda_" + std::to_string(a), 2, 2});
    return out;
}

std::string subgroup_name(int m) { return m == 1 ? "e" : "C" + std::to_string(m); }

}  // namespace

GroupData GroupData::cyclic_two_power(int n) {
    if (n < 0 || n > 6) throw MathError("cyclic_two_power: unsupported exponent");
    std::vector<SubgroupInfo> chain;
    for (int i = 0; i <= n; ++i) chain.push_back({subgroup_name(1 << i), 1 << i, cyclic_irreps(1 << i)});
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<int>>> res;
    for (std::size_t h = 0; h < chain.size(); ++h)
        for (std::size_t k = 0; k <= h; ++k) {
            const int big = chain[h].order, small = chain[k].order;
            const auto& src = chain[h].irreps;
            const auto& dst = chain[k].irreps;
            std::vector<std::vector<int>> t(dst.size(), std::vector<int>(src.size(), 0));
            for (std::size_t j = 0; j < src.size(); ++j) {
                if (j == 0) {
                    t[0][j] = 1;
                } else if (j == 1) {
                    t[(big == small) ? 1 : 0][j] = 1;
                } else {
                    // rotation by 2 pi a / big restricts to rotation by 2 pi a / small
                    const int a = static_cast<int>(j) - 1;
                    const int b = a % small;
                    if (b == 0) {
                        t[0][j] = 2;
                    } else if (2 * b == small) {
                        t[1][j] = 2;
                    } else {
                        const int bb = std::min(b, small - b);
                        t[1 + bb][j] = 1;
                    }
                }
            }
            res[{h, k}] = t;
        }
    return GroupData("C" + std::to_string(1 << n), chain, res);
}

GroupData::GroupData(std::string name, std::vector<SubgroupInfo> chain,
                     std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<int>>> restriction)
    : name_(std::move(name)), chain_(std::move(chain)), res_(std::move(restriction)) {
    if (chain_.empty()) throw MathError("group data: empty subgroup chain");
    derive_tables();
}

void GroupData::derive_tables() {
    ind_.clear();
    for (std::size_t h = 0; h < chain_.size(); ++h)
        for (std::size_t k = 0; k <= h; ++k) {
            auto it = res_.find({h, k});
            if (it == res_.end())
                throw MathError("group data: missing restriction table " + chain_[h].name + "->" + chain_[k].name);
            const auto& r = it->second;
            const auto& hi = chain_[h].irreps;
            const auto& ki = chain_[k].irreps;
            if (r.size() != ki.size()) throw MathError("group data: restriction table has wrong shape");
            for (std::size_t a = 0; a < ki.size(); ++a) {
                if (r[a].size() != hi.size()) throw MathError("group data: restriction table has wrong shape");
            }
            for (std::size_t j = 0; j < hi.size(); ++j) {
                int d = 0;
                for (std::size_t a = 0; a < ki.size(); ++a) d += r[a][j] * ki[a].dim;
                if (d != hi[j].dim) throw MathError("group data: restriction does not preserve dimension");
            }
            // Frobenius reciprocity: m_i(Ind W_j) <chi_i, chi_i> = m_j(Res V_i) <chi_j, chi_j>.
            std::vector<std::vector<int>> ind(hi.size(), std::vector<int>(ki.size(), 0));
            for (std::size_t i = 0; i < hi.size(); ++i)
                for (std::size_t j = 0; j < ki.size(); ++j) {
                    const int num = r[j][i] * ki[j].endomorphism_rank;
                    if (num % hi[i].endomorphism_rank != 0)
                        throw MathError("group data: induction multiplicity is not integral");
                    ind[i][j] = num / hi[i].endomorphism_rank;
                }
            ind_[{k, h}] = ind;
        }
}

std::size_t GroupData::index_of(const std::string& subgroup_name) const {
    for (std::size_t i = 0; i < chain_.size(); ++i)
        if (chain_[i].name == subgroup_name) return i;
    throw MathError("unknown subgroup '" + subgroup_name + "' of " + name_);
}

std::size_t GroupData::index_of_order(int order) const {
    for (std::size_t i = 0; i < chain_.size(); ++i)
        if (chain_[i].order == order) return i;
    throw MathError("no subgroup of order " + std::to_string(order) + " in " + name_);
}

const std::vector<std::vector<int>>& GroupData::restriction(std::size_t h, std::size_t k) const {
    auto it = res_.find({h, k});
    if (it == res_.end()) throw MathError("restriction only goes to smaller subgroups in the chain");
    return it->second;
}

const std::vector<std::vector<int>>& GroupData::induction(std::size_t k, std::size_t h) const {
    auto it = ind_.find({k, h});
    if (it == ind_.end()) throw MathError("induction only goes to larger subgroups in the chain");
    return it->second;
}

int GroupData::fixed_dim(std::size_t h, std::size_t k, std::size_t j) const { return restriction(h, k)[0][j]; }

VirtualRep::VirtualRep(std::shared_ptr<const GroupData> group, std::size_t subgroup, std::vector<long long> mult)
    : group_(std::move(group)), h_(subgroup), mult_(std::move(mult)) {
    if (!group_) throw MathError("VirtualRep: missing group data");
    if (h_ >= group_->chain_length()) throw MathError("VirtualRep: subgroup index out of range");
    if (mult_.size() != group_->subgroup(h_).irreps.size()) throw MathError("VirtualRep: wrong multiplicity count");
}

VirtualRep VirtualRep::zero(std::shared_ptr<const GroupData> group, std::size_t subgroup) {
    std::size_t n = group->subgroup(subgroup).irreps.size();
    return VirtualRep(std::move(group), subgroup, std::vector<long long>(n, 0));
}

VirtualRep VirtualRep::trivial(std::shared_ptr<const GroupData> group, std::size_t subgroup, long long n) {
    VirtualRep v = zero(std::move(group), subgroup);
    v.mult_[0] = n;
    return v;
}

VirtualRep VirtualRep::regular(std::shared_ptr<const GroupData> group, std::size_t subgroup) {
    return trivial(group, 0, 1).induce_to(subgroup);
}

long long VirtualRep::dim() const {
    long long d = 0;
    const auto& ir = group_->subgroup(h_).irreps;
    for (std::size_t i = 0; i < mult_.size(); ++i) d += mult_[i] * ir[i].dim;
    return d;
}

long long VirtualRep::fixed_dim(std::size_t k) const {
    long long d = 0;
    for (std::size_t j = 0; j < mult_.size(); ++j) d += mult_[j] * group_->fixed_dim(h_, k, j);
    return d;
}

VirtualRep VirtualRep::restrict_to(std::size_t k) const {
    const auto& t = group_->restriction(h_, k);
    VirtualRep out = zero(group_, k);
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t j = 0; j < mult_.size(); ++j) out.mult_[a] += t[a][j] * mult_[j];
    return out;
}

VirtualRep VirtualRep::induce_to(std::size_t h) const {
    const auto& t = group_->induction(h_, h);
    VirtualRep out = zero(group_, h);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < mult_.size(); ++j) out.mult_[i] += t[i][j] * mult_[j];
    return out;
}

void VirtualRep::check_same(const VirtualRep& o) const {
    if (h_ != o.h_ || group_.get() != o.group_.get())
        if (h_ != o.h_ || !(group_ && o.group_ && *group_ == *o.group_))
            throw MathError("virtual representations of different groups");
}

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
    check_same(o);
    VirtualRep r = *this;
    for (std::size_t i = 0; i < mult_.size(); ++i) r.mult_[i] += o.mult_[i];
    return r;
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const { return *this + o * -1; }

VirtualRep VirtualRep::operator*(long long c) const {
    VirtualRep r = *this;
    for (auto& m : r.mult_) m *= c;
    return r;
}

bool VirtualRep::is_actual() const {
    for (auto m : mult_)
        if (m < 0) return false;
    return true;
}

bool VirtualRep::leq(const VirtualRep& o) const { return (o - *this).is_actual(); }

std::string VirtualRep::to_string() const {
    std::ostringstream os;
    const auto& ir = group_->subgroup(h_).irreps;
    bool first = true;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        long long m = mult_[i];
        if (m == 0) continue;
        if (m < 0)
            os << "-";
        else if (!first)
            os << "+";
        long long a = m < 0 ? -m : m;
        if (a != 1 || ir[i].name == "1") os << a;
        if (ir[i].name != "1") os << ir[i].name;
        first = false;
    }
    return first ? "0" : os.str();
}

VirtualRep VirtualRep::parse(std::shared_ptr<const GroupData> group, std::size_t subgroup, const std::string& text) {
    VirtualRep out = zero(group, subgroup);
    const auto& ir = group->subgroup(subgroup).irreps;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "0") return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        long long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw MathError("cannot parse representation '" + text + "'");
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        long long coef = pos > start ? std::stoll(s.substr(start, pos - start)) : 1;
        if (pos < s.size() && s[pos] == '*') ++pos;
        std::size_t nstart = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string name = s.substr(nstart, pos - nstart);
        if (name.empty()) {
            if (pos == start) throw MathError("cannot parse representation '" + text + "'");
            name = "1";
        }
        std::size_t idx = ir.size();
        for (std::size_t i = 0; i < ir.size(); ++i)
            if (ir[i].name == name) idx = i;
        if (idx == ir.size()) throw MathError("unknown irreducible '" + name + "' in '" + text + "'");
        out.mult_[idx] += sign * coef;
    }
    return out;
}

RoOrder ro_compare(const VirtualRep& v, const VirtualRep& w) {
    const bool same_group = v.group() && w.group() && (v.group() == w.group() || *v.group() == *w.group());
    if (!same_group || v.subgroup() != w.subgroup())
        throw MathError("comparing representations of different subgroups");
    const bool le = v.leq(w), ge = w.leq(v);
    if (le && ge) return RoOrder::equal;
    if (le) return RoOrder::less;
    if (ge) return RoOrder::greater;
    return RoOrder::incomparable;
}

std::string to_string(RoOrder o) {
    switch (o) {
        case RoOrder::less: return "<=";
        case RoOrder::greater: return ">=";
        case RoOrder::equal: return "=";
        case RoOrder::incomparable: return "incomparable";
    }
    return "?";
}

}  // namespace tauchart
