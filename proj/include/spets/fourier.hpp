#pragma once

#include <string>
#include <vector>

#include "spets/characters.hpp"
#include "spets/linalg.hpp"

namespace spets {

/// Fourier data is missing, malformed, or fails validation.
class FourierError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Pair of beta-sets. Type B symbols have one more entry on top (defect 1),
/// type D symbols have rows of equal length (defect 0).
struct Symbol {
    std::vector<int> top;
    std::vector<int> bottom;
    int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
    /// Sorted multiset of all entries; equal for symbols in the same family.
    std::vector<int> content() const;
    std::string str() const;
};

/// Symbol of the bipartition (a, b) with m entries in the bottom row.
Symbol make_symbol(const Partition& a, const Partition& b, int m, int defect);

struct FourierFamily {
    std::vector<int> chars;  // character indices, increasing
    Matrix<CycNumber> matrix;
};

struct FourierData {
    std::vector<FourierFamily> families;
    std::string provenance;  // "built_in" or "data_file"
    std::string source;      // data file path or description of the construction
    std::string convention;  // sign / embedding convention that passed validation
    bool derived = true;     // false when the matrices were ingested rather than constructed

    /// Full |Irr| x |Irr| matrix.
    Matrix<CycNumber> full(int size) const;
    /// Family index of each character.
    std::vector<int> family_of(int size) const;
};

struct FourierCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FourierOptions {
    /// Data file, or directory holding dihedral_<e>.json. Empty: the
    /// SPETS_FOURIER_DATA environment variable, then the bundled data directory.
    std::string data_path;
};

/// Whether families_and_fourier can handle the group.
bool fourier_supported(const GroupSpec& spec);

/// Families and truncated Fourier matrices; the result has passed validate().
FourierData families_and_fourier(const CharTable& table, const FourierOptions& opts = {});

/// Runs every axiom check; does not throw.
std::vector<FourierCheck> validate_fourier(const CharTable& table, const FourierData& data);

/// f(chi) = sum_psi F(chi, psi) psi, extended linearly.
ClassFunction transform_f(const CharTable& table, const FourierData& data, const ClassFunction& phi);
/// f on the i-th irreducible.
ClassFunction transform_irr(const CharTable& table, const FourierData& data, int i);

/// Reduced echelon basis of the image of Id - f on class functions.
Matrix<CycNumber> image_id_minus_f(const CharTable& table, const FourierData& data);

struct KernelImageComparison {
    int kernel_dim = 0;
    int image_dim = 0;
    bool image_in_kernel = false;
    bool kernel_in_image = false;
    bool equal() const { return image_in_kernel && kernel_in_image; }
};

KernelImageComparison compare_kernel_image(const Matrix<CycNumber>& kernel, const Matrix<CycNumber>& image, std::size_t ncols);

/// Closed-form principal-series Fourier matrix of the dihedral group G(e,e,2).
FourierData dihedral_fourier(const CharTable& table);
/// JSON text in the data-file format (group, source, convention, families).
std::string fourier_data_file(const CharTable& table, const FourierData& data);
/// JSON text of a dihedral data file for G(e,e,2).
std::string dihedral_data_file(const CharTable& table);
/// Loads and validates a data file for the table's group.
FourierData load_fourier_file(const CharTable& table, const std::string& path);

}  // namespace spets
