#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spets/cyclotomic.hpp"
#include "spets/qlaurent.hpp"
#include "spets/refgroup.hpp"

namespace spets {

/// One value per conjugacy class, in the group's class order.
using ClassFunction = std::vector<CycNumber>;
using Partition = std::vector<int>;
using MultiPartition = std::vector<Partition>;

/// All e-tuples of partitions of total size n, lexicographically descending
/// (so ((n), -, ..., -) comes first).
std::vector<MultiPartition> multipartitions(int e, int n);

/// "21.1." style label: components separated by '.', parts concatenated
/// (comma separated if some part exceeds 9). Type A labels have no '.'.
std::string label_string(const MultiPartition& lambda);

/// Character of G(e,1,n) labelled by lambda at an element with the given
/// (length, color) cycles, by the wreath Murnaghan-Nakayama rule.
CycNumber wreath_character(const MultiPartition& lambda, const std::vector<std::pair<int, int>>& cycles, int e);

/// <a, b> = |W|^-1 sum_C |C| a(C) conj(b(C)).
CycNumber inner_product(const Group& g, const ClassFunction& a, const ClassFunction& b);
ClassFunction conj(const ClassFunction& f);
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
ClassFunction scale(const ClassFunction& f, const CycNumber& c);

/// Lambda^k V as a class function, 0 <= k <= rank.
ClassFunction ext_power_char(const Group& g, int k);

struct IrrInfo {
    MultiPartition lambda;  // label (orbit representative for G(e,e,n))
    int split_index = 0;    // position among the constituents of a split restriction
    int split_count = 1;
    std::string label;
};

class CharTable {
  public:
    explicit CharTable(std::shared_ptr<const Group> g);
    /// Builds a table from stored data (cache); values are checked for orthogonality.
    CharTable(std::shared_ptr<const Group> g, std::vector<IrrInfo> info, std::vector<ClassFunction> irrs);

    const Group& group() const { return *group_; }
    std::shared_ptr<const Group> group_ptr() const { return group_; }
    int size() const { return static_cast<int>(irrs_.size()); }
    const std::vector<ClassFunction>& irrs() const { return irrs_; }
    const ClassFunction& irr(int i) const { return irrs_[static_cast<std::size_t>(i)]; }
    const std::vector<IrrInfo>& info() const { return info_; }
    const std::string& label(int i) const { return info_[static_cast<std::size_t>(i)].label; }
    /// Index of the irreducible equal to f, or -1.
    int find(const ClassFunction& f) const;
    int find_label(const std::string& label) const;
    int conj_index(int i) const;
    /// Index of the irreducible Lambda^k V.
    int ext_power_index(int k) const;
    CycNumber degree(int i) const { return irrs_[static_cast<std::size_t>(i)][0]; }

    /// Exact orthogonality check of rows and columns; empty string when fine.
    std::string check_orthogonality() const;

    QLaurent fake_degree(int i) const;
    /// N(chi): derivative of the fake degree at q = 1.
    CycNumber n_of(int i) const;
    /// chi(1)|Refl|/2 - sum_s chi(s)/(1 - conj(det s)).
    CycNumber n_reflection_formula(int i) const;
    /// c_chi = sum over reflections of 1 - chi(s)/chi(1).
    CycNumber coxeter_number(int i) const;

  private:
    std::shared_ptr<const Group> group_;
    std::vector<IrrInfo> info_;
    std::vector<ClassFunction> irrs_;
    mutable std::vector<std::optional<QLaurent>> feg_;
};

}  // namespace spets
