#pragma once

#include <string>
#include <utility>

#include "spets/characters.hpp"
#include "spets/qlaurent.hpp"

namespace spets {

/// The hook character chi_k labelled by the e-partition ((n-k), (1^k), -, ..., -)
/// (the partition (n-k, 1^k) for type A) of G(e,1,n) (full)
/// or G(e,e,n) (not full).
struct HookIndex {
    int e = 1;
    int n = 1;
    int k = 0;
    bool full = true;  // p = 1; otherwise p = e

    GroupSpec group() const { return GroupSpec{e, full ? 1 : e, n}; }
    /// Coxeter number: en for p = 1 (n for type A), e(n-1) for p = e.
    int coxeter_number() const;
    /// Throws DomainError unless the index names a hook of an irreducible group.
    void validate() const;
    std::string str() const;
};

/// Schur element S_{chi_k}, transcribed factor by factor. For p = 1, k = 0
/// the closed form degenerates and S is the Poincare factor itself.
QRational schur_hook(const HookIndex& idx);

/// prod (q^{ei}-1)/(q-1) over the degrees, i.e. S of the trivial character.
QRational poincare_factor(const HookIndex& idx);

/// Deg(U_{chi_k}) = poincare_factor / schur_hook; throws DomainError if the
/// reduced quotient is not a polynomial.
QLaurent degree_hook(const HookIndex& idx);

/// (valuation, degree) of degree_hook.
std::pair<int, int> a_A_hook(const HookIndex& idx);

/// Index of chi_k in the table. Checks that the label exists, is not split
/// on restriction, and equals Lambda^k V.
int hook_character(const CharTable& table, int k);

}  // namespace spets
