#pragma once

#include <utility>
#include <vector>

#include "spets/characters.hpp"
#include "spets/linalg.hpp"
#include "spets/refgroup.hpp"

namespace spets {

/// Element of the group algebra: sorted (element index, coefficient) pairs, no zeros.
class GroupAlgElt {
  public:
    GroupAlgElt() = default;
    static GroupAlgElt basis(int w, const CycNumber& c = CycNumber(1));
    /// Sum of the listed group elements with coefficient 1.
    static GroupAlgElt sum_of(const std::vector<int>& elements);

    const std::vector<std::pair<int, CycNumber>>& terms() const { return terms_; }
    CycNumber coeff(int w) const;
    bool is_zero() const { return terms_.empty(); }

    GroupAlgElt operator+(const GroupAlgElt& o) const;
    GroupAlgElt operator-(const GroupAlgElt& o) const;
    GroupAlgElt scaled(const CycNumber& c) const;
    /// Product in the group algebra of g.
    GroupAlgElt mul(const Group& g, const GroupAlgElt& o) const;
    /// Coefficient vector of length |W|.
    Vec<CycNumber> dense(int order) const;

    friend bool operator==(const GroupAlgElt&, const GroupAlgElt&) = default;

  private:
    std::vector<std::pair<int, CycNumber>> terms_;
};

/// J_T^i for i = 1..rank: the sum of reflections of W_i not in W_{i-1}.
std::vector<GroupAlgElt> jt_elements(const Group& g, const Tower& t);

/// Component at class C is the sum of the coefficients over C.
Vec<CycNumber> class_project(const Group& g, const GroupAlgElt& x);

struct MonomialSet {
    std::vector<int> bounds;                 // m_i: degree of the minimal polynomial of J_T^i
    std::vector<std::vector<int>> exponents;  // (a_1..a_r) with 0 <= a_i < m_i
    std::vector<Vec<CycNumber>> projections;  // class projection of each monomial
};

MonomialSet monomial_set(const Group& g, const Tower& t);

/// Tower equivalence over a fixed list of towers.
class TowerEquivalence {
  public:
    TowerEquivalence(const Group& g, std::vector<Tower> towers);

    const std::vector<Tower>& towers() const { return towers_; }
    const std::vector<MonomialSet>& monomials() const { return sets_; }
    /// Whether phi - psi vanishes on every monomial of every tower.
    bool equivalent(const ClassFunction& phi, const ClassFunction& psi) const;
    /// Whether f lies in the kernel basis (independent of the monomial test).
    bool in_kernel(const ClassFunction& f) const;
    /// Reduced echelon basis of {phi : phi equivalent to 0}.
    const Matrix<CycNumber>& kernel() const { return kernel_; }

  private:
    const Group* group_;
    std::vector<Tower> towers_;
    std::vector<MonomialSet> sets_;
    Matrix<CycNumber> kernel_;
    EchelonBasis<CycNumber> kernel_basis_{0};
};

}  // namespace spets
