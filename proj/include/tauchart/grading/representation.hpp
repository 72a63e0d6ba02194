#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tauchart {

struct Irrep {
    std::string name;
    int dim = 1;
    // 1 for irreducibles of real type, 2 for complex type (<chi, chi> over the group).
    int endomorphism_rank = 1;
    bool operator==(const Irrep&) const = default;
};

struct SubgroupInfo {
    std::string name;
    int order = 1;
    std::vector<Irrep> irreps;  // irreps[0] is the trivial representation
    bool operator==(const SubgroupInfo&) const = default;
};

// Real representation data for a group with a chain of subgroups
// e = H_0 < H_1 < ... < H_k = G, indexed by position in the chain.
class GroupData {
public:
    GroupData() = default;

    // Cyclic group of order 2^n with its full subgroup chain, computed from
    // how rotations restrict.
    static GroupData cyclic_two_power(int n);

    const std::string& name() const { return name_; }
    std::size_t chain_length() const { return chain_.size(); }
    const SubgroupInfo& subgroup(std::size_t h) const { return chain_.at(h); }
    std::size_t top() const { return chain_.size() - 1; }
    std::size_t index_of(const std::string& subgroup_name) const;
    std::size_t index_of_order(int order) const;
    int order(std::size_t h) const { return chain_.at(h).order; }

    // restriction(h, k)[i][j]: multiplicity of irrep i of H_k in Res irrep j of H_h (k <= h).
    const std::vector<std::vector<int>>& restriction(std::size_t h, std::size_t k) const;
    // induction(k, h)[i][j]: multiplicity of irrep i of H_h in Ind irrep j of H_k (k <= h).
    const std::vector<std::vector<int>>& induction(std::size_t k, std::size_t h) const;
    // Dimension of the H_k-fixed points of irrep j of H_h (k <= h).
    int fixed_dim(std::size_t h, std::size_t k, std::size_t j) const;

    // Direct construction from tables (used when loading data files).
    GroupData(std::string name, std::vector<SubgroupInfo> chain,
              std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<int>>> restriction);
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<int>>>& restriction_tables() const {
        return res_;
    }

    bool operator==(const GroupData& o) const {
        return name_ == o.name_ && chain_ == o.chain_ && res_ == o.res_;
    }

private:
    void derive_tables();

    std::string name_;
    std::vector<SubgroupInfo> chain_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<int>>> res_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<int>>> ind_;
};

// Element of RO(H) for H a subgroup in the chain: integer multiplicities of irreducibles.
class VirtualRep {
public:
    VirtualRep() = default;
    VirtualRep(std::shared_ptr<const GroupData> group, std::size_t subgroup, std::vector<long long> mult);

    static VirtualRep zero(std::shared_ptr<const GroupData> group, std::size_t subgroup);
    static VirtualRep trivial(std::shared_ptr<const GroupData> group, std::size_t subgroup, long long n);
    static VirtualRep regular(std::shared_ptr<const GroupData> group, std::size_t subgroup);

    const std::shared_ptr<const GroupData>& group() const { return group_; }
    std::size_t subgroup() const { return h_; }
    const std::vector<long long>& multiplicities() const { return mult_; }

    long long dim() const;
    long long fixed_dim(std::size_t k) const;  // dim of H_k-fixed points, k <= subgroup()
    VirtualRep restrict_to(std::size_t k) const;
    VirtualRep induce_to(std::size_t h) const;

    VirtualRep operator+(const VirtualRep& o) const;
    VirtualRep operator-(const VirtualRep& o) const;
    VirtualRep operator*(long long c) const;
    bool operator==(const VirtualRep& o) const { return h_ == o.h_ && mult_ == o.mult_; }
    bool operator<(const VirtualRep& o) const { return std::tie(h_, mult_) < std::tie(o.h_, o.mult_); }

    // Poset order: this <= o iff o - this is an actual representation.
    bool leq(const VirtualRep& o) const;
    bool is_actual() const;

    std::string to_string() const;
    static VirtualRep parse(std::shared_ptr<const GroupData> group, std::size_t subgroup, const std::string& text);

private:
    void check_same(const VirtualRep& o) const;

    std::shared_ptr<const GroupData> group_;
    std::size_t h_ = 0;
    std::vector<long long> mult_;
};

enum class RoOrder { less, greater, equal, incomparable };

// Componentwise comparison of multiplicities; both must live over the same subgroup.
RoOrder ro_compare(const VirtualRep& v, const VirtualRep& w);
std::string to_string(RoOrder o);

}  // namespace tauchart
