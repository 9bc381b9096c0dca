#include "spets/fourier.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#ifndef SPETS_DATA_DIR
#define SPETS_DATA_DIR "data/fourier"
#endif

namespace spets {

using nlohmann::json;

// ---------------------------------------------------------------- symbols

std::vector<int> Symbol::content() const {
    std::vector<int> c = top;
    c.insert(c.end(), bottom.begin(), bottom.end());
    std::sort(c.begin(), c.end());
    return c;
}

std::string Symbol::str() const {
    auto row = [](const std::vector<int>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
        return s;
    };
    return "(" + row(top) + " / " + row(bottom) + ")";
}

namespace {

std::vector<int> beta_set(const Partition& p, int length) {
    std::vector<int> parts(p.begin(), p.end());
    if (static_cast<int>(parts.size()) > length) throw DomainError("partition too long for the symbol size");
    parts.resize(static_cast<std::size_t>(length), 0);
    std::sort(parts.begin(), parts.end());
    for (int i = 0; i < length; ++i) parts[i] += i;
    return parts;
}

}  // namespace

Symbol make_symbol(const Partition& a, const Partition& b, int m, int defect) {
    return Symbol{beta_set(a, m + defect), beta_set(b, m)};
}

// ---------------------------------------------------------------- FourierData

Matrix<CycNumber> FourierData::full(int size) const {
    Matrix<CycNumber> F(size, Vec<CycNumber>(size));
    for (const auto& fam : families)
        for (std::size_t i = 0; i < fam.chars.size(); ++i)
            for (std::size_t j = 0; j < fam.chars.size(); ++j) F[fam.chars[i]][fam.chars[j]] = fam.matrix[i][j];
    return F;
}

std::vector<int> FourierData::family_of(int size) const {
    std::vector<int> f(static_cast<std::size_t>(size), -1);
    for (std::size_t k = 0; k < families.size(); ++k)
        for (int c : families[k].chars) f[c] = static_cast<int>(k);
    return f;
}

bool fourier_supported(const GroupSpec& spec) {
    if (spec.e == 1) return true;
    if (spec.e == 2) return true;
    return spec.p == spec.e && spec.n == 2;
}

// ---------------------------------------------------------------- transform

ClassFunction transform_irr(const CharTable& table, const FourierData& data, int i) {
    const int C = table.group().class_count();
    ClassFunction out(static_cast<std::size_t>(C));
    for (const auto& fam : data.families) {
        auto it = std::find(fam.chars.begin(), fam.chars.end(), i);
        if (it == fam.chars.end()) continue;
        const auto row = static_cast<std::size_t>(it - fam.chars.begin());
        for (std::size_t j = 0; j < fam.chars.size(); ++j)
            if (!fam.matrix[row][j].is_zero()) out = out + scale(table.irr(fam.chars[j]), fam.matrix[row][j]);
    }
    return out;
}

ClassFunction transform_f(const CharTable& table, const FourierData& data, const ClassFunction& phi) {
    const Group& g = table.group();
    ClassFunction out(static_cast<std::size_t>(g.class_count()));
    for (int i = 0; i < table.size(); ++i) {
        CycNumber a = inner_product(g, phi, table.irr(i));
        if (!a.is_zero()) out = out + scale(transform_irr(table, data, i), a);
    }
    return out;
}

Matrix<CycNumber> image_id_minus_f(const CharTable& table, const FourierData& data) {
    const std::size_t C = static_cast<std::size_t>(table.group().class_count());
    EchelonBasis<CycNumber> basis(C);
    for (int i = 0; i < table.size(); ++i) basis.add(table.irr(i) - transform_irr(table, data, i));
    return basis.rows();
}

KernelImageComparison compare_kernel_image(const Matrix<CycNumber>& kernel, const Matrix<CycNumber>& image, std::size_t ncols) {
    KernelImageComparison r;
    r.kernel_dim = static_cast<int>(rank(kernel, ncols));
    r.image_dim = static_cast<int>(rank(image, ncols));
    r.image_in_kernel = span_contains(kernel, image, ncols);
    r.kernel_in_image = span_contains(image, kernel, ncols);
    return r;
}

// ---------------------------------------------------------------- validation

std::vector<FourierCheck> validate_fourier(const CharTable& table, const FourierData& data) {
    const Group& g = table.group();
    const int N = table.size();
    const int C = g.class_count();
    std::vector<FourierCheck> checks;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        checks.push_back(FourierCheck{std::move(name), ok, std::move(detail)});
    };

    // every character in exactly one family, square matrices
    {
        std::vector<int> seen(static_cast<std::size_t>(N), 0);
        bool shape = true;
        for (const auto& fam : data.families) {
            if (fam.matrix.size() != fam.chars.size()) shape = false;
            for (const auto& row : fam.matrix)
                if (row.size() != fam.chars.size()) shape = false;
            for (int c : fam.chars) {
                if (c < 0 || c >= N) shape = false;
                else ++seen[c];
            }
        }
        bool partition = std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
        add("families-partition-irr", shape && partition);
        if (!shape || !partition) return checks;
    }

    const Matrix<CycNumber> F = data.full(N);
    {
        std::string bad;
        for (int i = 0; i < N && bad.empty(); ++i)
            for (int j = 0; j < N; ++j)
                if (F[i][j] != F[j][i]) {
                    bad = table.label(i) + "," + table.label(j);
                    break;
                }
        add("symmetry", bad.empty(), bad);
    }
    {
        // connected components of the support coincide with the families
        std::vector<int> comp(static_cast<std::size_t>(N));
        std::iota(comp.begin(), comp.end(), 0);
        auto find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (!F[i][j].is_zero()) comp[find(i)] = find(j);
        auto fam = data.family_of(N);
        bool ok = true;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if ((find(i) == find(j)) != (fam[i] == fam[j])) ok = false;
        add("blocks-are-families", ok);
    }
    {
        bool real = true;
        for (int i = 0; i < N; ++i)
            if (conj(table.irr(i)) != table.irr(i)) real = false;
        add("real-character-table", real, "f uses psi rather than its conjugate; identical when the table is real");
    }
    std::vector<ClassFunction> fchi;
    for (int i = 0; i < N; ++i) fchi.push_back(transform_irr(table, data, i));
    {
        std::string bad;
        for (int i = 0; i < N && bad.empty(); ++i)
            for (int c = 0; c < C; ++c)
                if (!fchi[i][c].is_integer()) {
                    bad = "f(" + table.label(i) + ") at " + g.class_name(c) + " = " + fchi[i][c].str();
                    break;
                }
        add("integral-values", bad.empty(), bad);
    }
    {
        std::string bad;
        for (const auto& fam : data.families) {
            CycNumber c0 = table.coxeter_number(fam.chars.front());
            for (int c : fam.chars)
                if (table.coxeter_number(c) != c0) bad = table.label(fam.chars.front()) + " vs " + table.label(c);
        }
        add("family-constant-coxeter-number", bad.empty(), bad);
    }
    const int cox = g.coxeter_element();
    const int ccls = g.class_of(cox);
    {
        std::vector<int> ext(static_cast<std::size_t>(N), -1);
        for (int k = 0; k <= g.spec().rank(); ++k) {
            int idx = table.find(ext_power_char(g, k));
            if (idx >= 0) ext[idx] = k;
        }
        std::string bad;
        for (int i = 0; i < N; ++i) {
            CycNumber expected = ext[i] < 0 ? CycNumber(0) : CycNumber(ext[i] % 2 ? -1 : 1);
            if (fchi[i][ccls] != expected) {
                bad = "f(" + table.label(i) + ")(c) = " + fchi[i][ccls].str();
                break;
            }
        }
        add("coxeter-column", bad.empty(), bad);
    }
    {
        ClassFunction lhs(static_cast<std::size_t>(C));
        for (int i = 0; i < N; ++i) lhs = lhs + scale(fchi[i], table.irr(i)[ccls]);
        ClassFunction rhs(static_cast<std::size_t>(C));
        for (int k = 0; k <= g.spec().rank(); ++k) {
            auto l = ext_power_char(g, k);
            rhs = k % 2 ? rhs - l : rhs + l;
        }
        add("step-two-identity", lhs == rhs);
    }
    {
        bool ok = true;
        for (int w = 0; w < C && ok; ++w) {
            ClassFunction lhs(static_cast<std::size_t>(C)), rhs(static_cast<std::size_t>(C));
            for (int i = 0; i < N; ++i) {
                lhs = lhs + scale(fchi[i], table.irr(i)[w]);
                rhs = rhs + scale(table.irr(i), fchi[i][w]);
            }
            ok = lhs == rhs;
        }
        add("symmetric-identity", ok);
    }
    add("trivial-fixed", fchi[0] == table.irr(0));
    return checks;
}

namespace {

bool all_passed(const std::vector<FourierCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const FourierCheck& c) { return c.passed; });
}

std::string first_failure(const std::vector<FourierCheck>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
    return {};
}

FourierData type_a(const CharTable& table) {
    FourierData d;
    d.provenance = "built_in";
    d.source = "type A: every family is a single character";
    d.convention = "identity";
    for (int i = 0; i < table.size(); ++i) d.families.push_back(FourierFamily{{i}, {{CycNumber(1)}}});
    return d;
}

struct SymbolConvention {
    bool swap_rows;   // put the second component of the label on top
    bool odd_special; // special symbol's bottom singles are z_1, z_3, ...
    std::string name() const {
        return std::string(swap_rows ? "beta-top" : "alpha-top") + "," + (odd_special ? "special-odd" : "special-even");
    }
};

/// Families and matrices for types B (defect 1) and D (defect 0) from symbols.
FourierData from_symbols(const CharTable& table, int defect, const SymbolConvention& conv) {
    const int n = table.group().spec().n;
    FourierData d;
    d.provenance = "built_in";
    d.source = defect == 1 ? "type B symbols, sign pairing on subsets of singles"
                           : "type D symbols, sign pairing on subsets of singles";
    d.convention = conv.name();
    std::map<std::vector<int>, std::vector<int>> by_content;
    std::vector<Symbol> sym(static_cast<std::size_t>(table.size()));
    std::vector<int> order;
    for (int i = 0; i < table.size(); ++i) {
        const IrrInfo& info = table.info()[i];
        if (info.split_count > 1) {
            d.families.push_back(FourierFamily{{i}, {{CycNumber(1)}}});
            continue;
        }
        const Partition& a = info.lambda[conv.swap_rows ? 1 : 0];
        const Partition& b = info.lambda[conv.swap_rows ? 0 : 1];
        sym[i] = make_symbol(a, b, n, defect);
        auto& members = by_content[sym[i].content()];
        if (members.empty()) order.push_back(i);
        members.push_back(i);
    }
    for (int first : order) {
        const auto& members = by_content[sym[first].content()];
        auto content = sym[first].content();
        std::vector<int> singles;
        for (std::size_t k = 0; k < content.size(); ++k) {
            bool dup = (k > 0 && content[k - 1] == content[k]) || (k + 1 < content.size() && content[k + 1] == content[k]);
            if (!dup) singles.push_back(content[k]);
        }
        const int d2 = static_cast<int>(singles.size());
        const int dd = defect == 1 ? (d2 - 1) / 2 : d2 / 2;
        std::vector<int> special;
        for (int k = conv.odd_special ? 1 : 0; k < d2; k += 2) special.push_back(singles[k]);
        if (defect == 1) {
            special.clear();
            for (int k = 1; k < d2; k += 2) special.push_back(singles[k]);
        }
        std::vector<std::vector<int>> shifted;  // (M symmetric-difference special) for each member
        for (int i : members) {
            std::vector<int> M;
            for (int z : singles)
                if (std::binary_search(sym[i].bottom.begin(), sym[i].bottom.end(), z)) M.push_back(z);
            std::vector<int> diff;
            std::set_symmetric_difference(M.begin(), M.end(), special.begin(), special.end(), std::back_inserter(diff));
            shifted.push_back(std::move(diff));
        }
        const int power = defect == 1 ? dd : dd - 1;
        const Rational mag(1, 1L << std::max(power, 0));
        FourierFamily fam;
        fam.chars = members;
        fam.matrix.assign(members.size(), Vec<CycNumber>(members.size()));
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = 0; y < members.size(); ++y) {
                std::vector<int> common;
                std::set_intersection(shifted[x].begin(), shifted[x].end(), shifted[y].begin(), shifted[y].end(),
                                      std::back_inserter(common));
                fam.matrix[x][y] = CycNumber(common.size() % 2 ? Rational(-mag) : mag);
            }
        d.families.push_back(std::move(fam));
    }
    std::sort(d.families.begin(), d.families.end(),
              [](const FourierFamily& a, const FourierFamily& b) { return a.chars.front() < b.chars.front(); });
    return d;
}

std::string default_data_path() {
    if (const char* env = std::getenv("SPETS_FOURIER_DATA"); env && *env) return env;
    return SPETS_DATA_DIR;
}

}  // namespace

// ---------------------------------------------------------------- dihedral

namespace {

struct DihedralChars {
    int trivial = -1, sign = -1;
    std::vector<int> rho;     // rho[j-1] = index of rho_j
    std::vector<int> eps;     // the two extra linear characters when e is even
};

DihedralChars classify_dihedral(const CharTable& table) {
    const Group& g = table.group();
    const int e = g.spec().e;
    DihedralChars dc;
    dc.trivial = 0;
    dc.sign = table.ext_power_index(2);
    const int r = g.index_of(Element{{0, 1}, {1, e - 1}});
    const int rc = g.class_of(r);
    dc.rho.assign(static_cast<std::size_t>((e - 1) / 2), -1);
    for (int i = 0; i < table.size(); ++i) {
        if (i == dc.trivial || i == dc.sign) continue;
        if (table.degree(i) == CycNumber(1)) {
            dc.eps.push_back(i);
            continue;
        }
        for (int j = 1; 2 * j < e; ++j)
            if (table.irr(i)[rc] == E(e, j) + E(e, -j)) dc.rho[j - 1] = i;
    }
    return dc;
}

}  // namespace

FourierData dihedral_fourier(const CharTable& table) {
    const GroupSpec& sp = table.group().spec();
    if (sp.p != sp.e || sp.n != 2 || sp.e < 3) throw FourierError(sp.str() + " is not a dihedral group G(e,e,2), e >= 3");
    const int e = sp.e;
    DihedralChars dc = classify_dihedral(table);
    FourierData d;
    d.provenance = "built_in";
    d.source = "closed-form principal-series Fourier matrix of the dihedral group";
    d.convention = "dihedral";
    d.families.push_back(FourierFamily{{dc.trivial}, {{CycNumber(1)}}});
    d.families.push_back(FourierFamily{{dc.sign}, {{CycNumber(1)}}});
    FourierFamily big;
    std::vector<std::pair<int, int>> members;  // (char index, j) with j = 0 for the eps characters
    for (std::size_t j = 0; j < dc.rho.size(); ++j) members.emplace_back(dc.rho[j], static_cast<int>(j) + 1);
    for (int x : dc.eps) members.emplace_back(x, 0);
    std::sort(members.begin(), members.end());
    const CycNumber inv_e(Rational(1, e));
    const long half_sign = (e % 2 == 0 && (e / 2) % 2 == 1) ? -1 : 1;  // (-1)^(e/2)
    for (auto [ci, j] : members) big.chars.push_back(ci);
    big.matrix.assign(members.size(), Vec<CycNumber>(members.size()));
    for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = 0; y < members.size(); ++y) {
            const int j = members[x].second, l = members[y].second;
            CycNumber v;
            if (j > 0 && l > 0) {
                v = (CycNumber(2) - E(e, static_cast<long>(j) * l) - E(e, -static_cast<long>(j) * l)) * inv_e;
            } else if (j > 0 || l > 0) {
                const int k = j > 0 ? j : l;
                v = CycNumber(k % 2 ? 2 : 0) * inv_e;
            } else {
                CycNumber base = CycNumber(1 - half_sign) * CycNumber(Rational(1, 2 * e));
                v = x == y ? base + CycNumber(Rational(1, 2)) : base - CycNumber(Rational(1, 2));
            }
            big.matrix[x][y] = v;
        }
    d.families.push_back(std::move(big));
    std::sort(d.families.begin(), d.families.end(),
              [](const FourierFamily& a, const FourierFamily& b) { return a.chars.front() < b.chars.front(); });
    return d;
}

std::string fourier_data_file(const CharTable& table, const FourierData& d) {
    json j;
    j["group"] = table.group().spec().str();
    j["source"] = d.source;
    j["convention"] = d.convention;
    json fams = json::array();
    for (const auto& fam : d.families) {
        json f;
        json labels = json::array();
        for (int c : fam.chars) labels.push_back(table.label(c));
        f["characters"] = labels;
        json rows = json::array();
        for (const auto& row : fam.matrix) {
            json r = json::array();
            for (const auto& x : row) r.push_back(x.str());
            rows.push_back(r);
        }
        f["matrix"] = rows;
        fams.push_back(f);
    }
    j["families"] = fams;
    return j.dump(2) + "\n";
}

std::string dihedral_data_file(const CharTable& table) {
    FourierData d = dihedral_fourier(table);
    d.source = "Principal-series part of the Fourier matrix of the dihedral spets I2(e): "
               "F(rho_j, rho_l) = (2 - z^(jl) - z^(-jl))/e, F(rho_j, eps) = (1 - (-1)^j)/e, "
               "F(eps, eps') = (1 - (-1)^(e/2))/(2e) +- 1/2, trivial and sign alone.";
    return fourier_data_file(table, d);
}

FourierData load_fourier_file(const CharTable& table, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FourierError("cannot open Fourier data file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw FourierError("malformed Fourier data file " + path + ": " + ex.what());
    }
    FourierData d;
    d.provenance = "data_file";
    d.derived = false;
    d.convention = j.value("convention", std::string("as stored"));
    try {
        const std::string group = j.at("group").get<std::string>();
        if (GroupSpec::parse(group) != table.group().spec())
            throw FourierError("data file " + path + " is for " + group + ", not " + table.group().spec().str());
        d.source = path + ": " + j.at("source").get<std::string>();
        for (const auto& f : j.at("families")) {
            FourierFamily fam;
            for (const auto& l : f.at("characters")) {
                int idx = table.find_label(l.get<std::string>());
                if (idx < 0) throw FourierError("unknown character label " + l.get<std::string>() + " in " + path);
                fam.chars.push_back(idx);
            }
            for (const auto& row : f.at("matrix")) {
                Vec<CycNumber> r;
                for (const auto& x : row) r.push_back(CycNumber::parse(x.get<std::string>()));
                fam.matrix.push_back(std::move(r));
            }
            d.families.push_back(std::move(fam));
        }
    } catch (const json::exception& ex) {
        throw FourierError("malformed Fourier data file " + path + ": " + ex.what());
    }
    auto checks = validate_fourier(table, d);
    if (!all_passed(checks)) throw FourierError("Fourier data file " + path + " fails validation: " + first_failure(checks));
    return d;
}

FourierData families_and_fourier(const CharTable& table, const FourierOptions& opts) {
    const GroupSpec& sp = table.group().spec();
    if (!fourier_supported(sp))
        throw UnsupportedGroup("no Fourier data for " + sp.str() + "; supported: G(1,1,n), G(2,1,n), G(2,2,n), G(e,e,2)");
    std::vector<FourierData> candidates;
    if (sp.e == 1) {
        candidates.push_back(type_a(table));
    } else if (sp.p == sp.e && sp.n == 2) {
        const int e = sp.e;
        if (e == 3 || e == 4 || e == 6) {
            candidates.push_back(dihedral_fourier(table));
        } else {
            std::string path = opts.data_path.empty() ? default_data_path() : opts.data_path;
            if (std::filesystem::is_directory(path)) path = (std::filesystem::path(path) / ("dihedral_" + std::to_string(e) + ".json")).string();
            if (!std::filesystem::exists(path))
                throw FourierError("no Fourier data file for " + sp.str() + " (looked for " + path + ")");
            return load_fourier_file(table, path);
        }
    } else {
        const int defect = sp.p == 1 ? 1 : 0;
        for (bool swap : {false, true})
            for (bool odd : {true, false}) {
                if (defect == 1 && !odd) continue;
                candidates.push_back(from_symbols(table, defect, SymbolConvention{swap, odd}));
            }
    }
    std::string failures;
    for (auto& c : candidates) {
        auto checks = validate_fourier(table, c);
        if (all_passed(checks)) return c;
        failures += " [" + c.convention + ": " + first_failure(checks) + "]";
    }
    throw FourierError("no Fourier convention passes validation for " + sp.str() + ":" + failures);
}

}  // namespace spets
