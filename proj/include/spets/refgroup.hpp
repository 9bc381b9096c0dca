#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spets/cyclotomic.hpp"
#include "spets/linalg.hpp"
#include "spets/qlaurent.hpp"

namespace spets {

/// The requested group is outside the supported family.
class UnsupportedGroup : public DomainError {
  public:
    using DomainError::DomainError;
};

/// An enumeration would exceed the configured order cap.
class CapExceeded : public DomainError {
  public:
    using DomainError::DomainError;
};

/// G(e,p,n) with p in {1, e}.
struct GroupSpec {
    int e = 1;
    int p = 1;
    int n = 1;

    /// Parses "G(e,p,n)"; throws UnsupportedGroup for anything else
    /// (including primitive groups such as "G_32").
    static GroupSpec parse(const std::string& text);
    /// Throws UnsupportedGroup unless the triple is irreducible and supported.
    void validate() const;

    std::string str() const;
    /// Dimension of the reflection representation V (n - 1 for the symmetric group).
    int rank() const { return e == 1 ? n - 1 : n; }
    std::vector<int> degrees() const;
    int coxeter_number() const;
    long long order() const;
    bool is_full() const { return p == 1 || e == 1; }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Monomial matrix: w e_j = zeta_e^phase[j] e_perm[j].
struct Element {
    std::vector<int> perm;
    std::vector<int> phase;
    friend bool operator==(const Element&, const Element&) = default;
};

struct ConjClass {
    int rep = 0;               // smallest member index
    std::vector<int> members;  // sorted
    int size() const { return static_cast<int>(members.size()); }
};

/// Fixator of a flat (intersection of reflecting hyperplanes).
struct Parabolic {
    int codim = 0;
    Matrix<CycNumber> conormal;  // reduced echelon basis of the linear forms vanishing on the flat
    std::vector<int> hyperplanes;  // indices of hyperplanes containing the flat, sorted
    std::vector<int> refl_set;     // element indices of reflections fixing the flat, sorted
    std::vector<int> members;      // element indices of the fixator, sorted
};

struct Tower {
    std::vector<int> chain;  // parabolic indices, codimension 0..rank
    long long orbit_size = 1;
};

enum class TowerMode { all, up_to_conjugacy, sample };

struct TowerRequest {
    TowerMode mode = TowerMode::up_to_conjugacy;
    int sample_count = 0;
    std::uint64_t seed = 0;
    /// Parses "all", "conj" or "sample:k:seed".
    static TowerRequest parse(const std::string& text);
    std::string str() const;
};

inline constexpr long long kDefaultOrderCap = 20160;

class Group {
  public:
    explicit Group(GroupSpec spec, long long cap = kDefaultOrderCap);

    const GroupSpec& spec() const { return spec_; }
    int order() const { return order_; }
    int identity() const { return 0; }

    const Element& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    int index_of(const Element& w) const;
    int mul(int a, int b) const;
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int power(int a, long k) const;
    int element_order(int a) const;
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

    /// Reflection-type generators (one diagonal and the transpositions for p=1).
    const std::vector<int>& generators() const { return generators_; }

    /// Codimension of the fixed space of w on V.
    int fixed_codim(int a) const;
    const std::vector<int>& reflections() const { return reflections_; }
    bool is_reflection(int a) const { return is_reflection_[static_cast<std::size_t>(a)]; }

    Matrix<CycNumber> reflection_matrix(int a) const;
    /// det_V(1 - q w).
    QLaurent det_one_minus_qw(int a) const;
    /// Values of Lambda^k V at w for k = 0..rank.
    std::vector<CycNumber> exterior_traces(int a) const;
    /// det_V(w).
    CycNumber det(int a) const;

    const std::vector<ConjClass>& classes() const { return classes_; }
    int class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    /// Index of the class containing inverses of members of class c.
    int inverse_class(int c) const { return inverse_class_[static_cast<std::size_t>(c)]; }
    /// Signed cycle type of the class representative, e.g. "[2:1,1:0]".
    std::string class_name(int c) const;
    /// (length, color) pairs of the cycles of w, sorted descending.
    std::vector<std::pair<int, int>> cycle_type(int a) const;

    /// Reflecting hyperplanes as normalized linear forms (first nonzero entry 1).
    const Matrix<CycNumber>& hyperplanes() const;
    int hyperplane_of(int reflection) const;

    const std::vector<Parabolic>& parabolics() const;
    std::vector<Tower> towers(const TowerRequest& req) const;

    /// First element in enumeration order that is regular for exp(2 pi i / h).
    int coxeter_element() const;

  private:
    Element decode(int i) const;
    int compose_index(int a, int b) const;
    void build_lattice() const;
    std::vector<int> flat_permutation(int g) const;

    GroupSpec spec_;
    int order_ = 0;
    int phase_block_ = 1;  // number of phase codes per permutation
    std::vector<Element> elements_;
    std::vector<int> inverse_;
    std::vector<int> table_;  // full multiplication table when small
    std::vector<int> generators_;
    std::vector<int> reflections_;
    std::vector<char> is_reflection_;
    std::vector<ConjClass> classes_;
    std::vector<int> class_of_;
    std::vector<int> inverse_class_;

    struct Lattice;
    mutable std::shared_ptr<Lattice> lattice_;
    mutable int coxeter_ = -1;
};

}  // namespace spets
