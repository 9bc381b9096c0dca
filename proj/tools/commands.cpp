#include "commands.hpp"

#include <iostream>

#include "spets/heckeschur.hpp"

namespace spets::app {

using nlohmann::json;

json RunConfig::to_json() const {
    json j{{"command", command}, {"group", group}, {"towers", towers}, {"cap", cap}, {"format", format}};
    if (!check.empty()) j["check"] = check;
    j["cache_dir"] = cache_dir;
    j["fourier_data"] = fourier_data;
    return j;
}

// ---------------------------------------------------------------- Session

Session::Session(RunConfig cfg) : cfg_(std::move(cfg)), cache_(cfg_.cache_dir) {}

std::shared_ptr<const Group> Session::group_ptr() {
    if (!group_) {
        if (cfg_.group.empty()) throw UsageError("--group is required");
        group_ = std::make_shared<const Group>(GroupSpec::parse(cfg_.group), cfg_.cap);
    }
    return group_;
}

const Group& Session::group() { return *group_ptr(); }

const CharTable& Session::table() {
    if (table_) return *table_;
    auto g = group_ptr();
    const std::string key = g->spec().str();
    if (auto payload = cache_.load("chartable", key)) {
        try {
            table_.emplace(chartable_from_json(g, *payload));
            return *table_;
        } catch (const DomainError& ex) {
            std::cerr << "warning: ignoring cached character table for " << key << ": " << ex.what() << "\n";
        }
    }
    table_.emplace(g);
    cache_.store("chartable", key, chartable_to_json(*table_));
    return *table_;
}

const FourierData& Session::fourier() {
    if (!fourier_) fourier_ = families_and_fourier(table(), FourierOptions{cfg_.fourier_data});
    return *fourier_;
}

const Matrix<CycNumber>& Session::tower_kernel() {
    if (kernel_) return *kernel_;
    const Group& g = group();
    const TowerRequest req = TowerRequest::parse(cfg_.towers);
    const std::string key = g.spec().str() + "|" + req.str();
    if (auto payload = cache_.load("kernel", key)) {
        try {
            kernel_ = matrix_from_json(payload->at("kernel"));
            tower_summary_ = payload->at("towers");
        } catch (const std::exception& ex) {
            std::cerr << "warning: ignoring cached tower kernel for " << key << ": " << ex.what() << "\n";
            kernel_.reset();
        }
    }
    if (!kernel_) {
        TowerEquivalence te(g, g.towers(req));
        kernel_ = te.kernel();
        json per = json::array();
        long long monomials = 0;
        for (std::size_t i = 0; i < te.towers().size(); ++i) {
            const auto& ms = te.monomials()[i];
            monomials += static_cast<long long>(ms.exponents.size());
            per.push_back(json{{"chain", te.towers()[i].chain},
                               {"orbit_size", te.towers()[i].orbit_size},
                               {"bounds", ms.bounds},
                               {"monomials", ms.exponents.size()}});
        }
        tower_summary_ = json{{"mode", req.str()}, {"count", te.towers().size()}, {"monomials", monomials}, {"per_tower", per}};
        cache_.store("kernel", key, json{{"kernel", matrix_to_json(*kernel_)}, {"towers", tower_summary_}});
    }
    kernel_basis_.emplace(static_cast<std::size_t>(g.class_count()));
    for (const auto& r : *kernel_) kernel_basis_->add(r);
    return *kernel_;
}

const json& Session::tower_summary() {
    tower_kernel();
    return tower_summary_;
}

bool Session::equivalent_to_zero(const ClassFunction& f) {
    tower_kernel();
    return kernel_basis_->contains(f);
}

// ---------------------------------------------------------------- helpers

namespace {

json element_json(const Group& g, int w) { return json{{"index", w}, {"perm", g.element(w).perm}, {"phase", g.element(w).phase}}; }

std::vector<std::string> strings(const ClassFunction& f) {
    std::vector<std::string> out;
    for (const auto& x : f) out.push_back(x.str());
    return out;
}

ClassFunction alternating_ext_sum(const Group& g) {
    ClassFunction f(static_cast<std::size_t>(g.class_count()));
    for (int k = 0; k <= g.spec().rank(); ++k) {
        auto l = ext_power_char(g, k);
        f = k % 2 ? f - l : f + l;
    }
    return f;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Runs fn, turning a missing-Fourier-data condition into a skipped check.
template <class Fn>
bool with_fourier(Session& s, Report& r, const std::string& check, Fn&& fn) {
    try {
        s.fourier();
    } catch (const UnsupportedGroup& ex) {
        r.skip(check, ex.what());
        return false;
    } catch (const FourierError& ex) {
        r.skip(check, ex.what());
        return false;
    }
    fn(s.fourier());
    return true;
}

json fourier_meta(const FourierData& d) {
    return json{{"provenance", d.provenance},
                {"source", d.source},
                {"convention", d.convention},
                {"status", d.derived ? "validated, derived" : "validated, not derived"},
                {"families", d.families.size()}};
}

}  // namespace

json group_summary(const Group& g) {
    const GroupSpec& sp = g.spec();
    return json{{"spec", sp.str()},
                {"order", g.order()},
                {"rank", sp.rank()},
                {"degrees", sp.degrees()},
                {"coxeter_number", sp.coxeter_number()},
                {"classes", g.class_count()},
                {"reflections", g.reflections().size()}};
}

// ---------------------------------------------------------------- verifications

void verify_cchi(Session& s, Report& r) {
    const CharTable& t = s.table();
    json fails = json::array(), nfails = json::array();
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < t.size(); ++i) {
        const CycNumber c = t.coxeter_number(i);
        const CycNumber n = t.n_of(i), nb = t.n_of(t.conj_index(i));
        if (c * t.degree(i) != n + nb) fails.push_back(t.label(i));
        if (n != t.n_reflection_formula(i)) nfails.push_back(t.label(i));
        rows.push_back({t.label(i), t.degree(i).str(), n.str(), nb.str(), c.str()});
    }
    r.add("cchi", fails.empty(), json{{"characters", t.size()}, {"failures", fails}});
    r.add("n-reflection-formula", nfails.empty(), json{{"characters", t.size()}, {"failures", nfails}});
    r.data["cchi"] = make_table({"character", "chi(1)", "N(chi)", "N(conj chi)", "c_chi"}, rows);
}

void verify_lemma1(Session& s, Report& r) {
    const CharTable& t = s.table();
    json fails = json::array();
    int nonreal = 0;
    for (int i = 0; i < t.size(); ++i) {
        const ClassFunction cc = conj(t.irr(i));
        if (cc != t.irr(i)) ++nonreal;
        if (!s.equivalent_to_zero(t.irr(i) - cc)) fails.push_back(t.label(i));
    }
    r.add("lemma1", fails.empty(),
          json{{"characters", t.size()}, {"non_real", nonreal}, {"kernel_dim", s.tower_kernel().size()}, {"failures", fails}});
    r.data["towers"] = s.tower_summary();
}

void verify_coxeter(Session& s, Report& r) {
    const Group& g = s.group();
    const GroupSpec& sp = g.spec();
    const CharTable& t = s.table();
    json column = json::array();
    bool ok = true, hooks_ok = true;
    json hook_fail = json::array();
    for (int k = 0; k <= sp.rank(); ++k) {
        HookIndex h{sp.e, sp.n, k, sp.p == 1};
        const CycNumber v = degree_hook(h).eval(E(h.coxeter_number()));
        column.push_back(v.str());
        if (v != CycNumber(k % 2 ? -1 : 1)) ok = false;
        try {
            hook_character(t, k);
        } catch (const DomainError& ex) {
            hooks_ok = false;
            hook_fail.push_back(ex.what());
        }
    }
    r.add("hook-degrees-at-zeta-h", ok, json{{"h", sp.coxeter_number()}, {"values", column}});
    r.add("hooks-are-exterior-powers", hooks_ok, json{{"failures", hook_fail}});
    with_fourier(s, r, "fourier-coxeter-column", [&](const FourierData& d) {
        const int cls = g.class_of(g.coxeter_element());
        json col = json::array();
        for (int i = 0; i < t.size(); ++i) col.push_back(transform_irr(t, d, i)[cls].str());
        bool pass = false;
        for (const auto& c : validate_fourier(t, d))
            if (c.name == "coxeter-column") pass = c.passed;
        r.add("fourier-coxeter-column", pass, json{{"values", col}});
    });
}

void verify_symmetric(Session& s, Report& r) {
    const CharTable& t = s.table();
    const bool ran = with_fourier(s, r, "fourier-symmetric", [&](const FourierData& d) {
        for (const auto& c : validate_fourier(t, d))
            if (c.name == "symmetry") r.add("fourier-symmetric", c.passed, json{{"detail", c.detail}});
            else if (c.name == "symmetric-identity") r.add("symmetric-identity", c.passed, json{{"detail", c.detail}});
        r.data["fourier"] = fourier_meta(d);
    });
    if (!ran) r.skip("symmetric-identity", "no Fourier data for " + t.group().spec().str());
}

void verify_main(Session& s, Report& r) {
    const Group& g = s.group();
    const CharTable& t = s.table();
    const int c = g.coxeter_element();
    const int cls = g.class_of(g.inv(c));
    ClassFunction lhs(static_cast<std::size_t>(g.class_count()));
    for (int i = 0; i < t.size(); ++i) lhs = lhs + scale(t.irr(i), t.irr(i)[cls]);
    const ClassFunction rhs = alternating_ext_sum(g);
    r.add("main-theorem", s.equivalent_to_zero(lhs - rhs),
          json{{"coxeter_element", element_json(g, c)},
               {"coxeter_class", g.class_name(g.class_of(c))},
               {"kernel_dim", s.tower_kernel().size()},
               {"lhs", strings(lhs)},
               {"rhs", strings(rhs)}});
    r.data["towers"] = s.tower_summary();
}

void verify_tower_f(Session& s, Report& r) {
    const CharTable& t = s.table();
    with_fourier(s, r, "tower-f", [&](const FourierData& d) {
        auto checks = validate_fourier(t, d);
        json failed = json::array();
        for (const auto& c : checks)
            if (!c.passed) failed.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
        r.add("fourier-validation", failed.empty(), json{{"checks", checks.size()}, {"failures", failed}});
        json fails = json::array();
        for (int i = 0; i < t.size(); ++i)
            if (!s.equivalent_to_zero(transform_irr(t, d, i) - t.irr(i))) fails.push_back(t.label(i));
        r.add("tower-f", fails.empty(), json{{"characters", t.size()}, {"failures", fails}});
        r.data["fourier"] = fourier_meta(d);
        r.data["towers"] = s.tower_summary();
    });
}

void kernel_vs_image(Session& s, Report& r) {
    const CharTable& t = s.table();
    with_fourier(s, r, "image-in-kernel", [&](const FourierData& d) {
        const auto ncols = static_cast<std::size_t>(t.group().class_count());
        const auto image = image_id_minus_f(t, d);
        const auto& kernel = s.tower_kernel();
        auto cmp = compare_kernel_image(kernel, image, ncols);
        json dims{{"kernel_dim", cmp.kernel_dim}, {"image_dim", cmp.image_dim}};
        r.add("image-in-kernel", cmp.image_in_kernel, dims);
        r.add("kernel-equals-image", cmp.equal(), dims);
        r.data["kernel_dim"] = cmp.kernel_dim;
        r.data["image_dim"] = cmp.image_dim;
        r.data["equal"] = cmp.equal();
        r.data["kernel_basis"] = matrix_to_json(kernel);
        r.data["image_basis"] = matrix_to_json(image);
        r.data["fourier"] = fourier_meta(d);
        r.data["towers"] = s.tower_summary();
    });
}

// ---------------------------------------------------------------- commands

namespace {

void cmd_group(Session& s, Report& r) {
    const Group& g = s.group();
    const GroupSpec& sp = g.spec();
    long long prod = 1;
    long refl = 0;
    for (int d : sp.degrees()) {
        prod *= d;
        refl += d - 1;
    }
    r.add("order-is-product-of-degrees", prod == g.order(), json{{"product", prod}, {"order", g.order()}});
    r.add("reflections-are-sum-of-exponents", refl == static_cast<long>(g.reflections().size()),
          json{{"expected", refl}, {"reflections", g.reflections().size()}});
    std::vector<std::vector<std::string>> rows;
    for (int c = 0; c < g.class_count(); ++c) {
        const auto& cl = g.classes()[c];
        rows.push_back({std::to_string(c), g.class_name(c), std::to_string(cl.size()), std::to_string(g.element_order(cl.rep)),
                        std::to_string(g.fixed_codim(cl.rep))});
    }
    r.data["table"] = make_table({"class", "cycle type", "size", "order", "codim"}, rows);
    std::vector<int> by_codim(static_cast<std::size_t>(sp.rank() + 1), 0);
    for (const auto& p : g.parabolics()) ++by_codim[p.codim];
    r.data["parabolics_by_codim"] = by_codim;
    r.data["coxeter_element"] = element_json(g, g.coxeter_element());
    const auto towers = g.towers(TowerRequest::parse(s.config().towers));
    long long total = 0;
    for (const auto& t : towers) total += t.orbit_size;
    r.data["towers"] = json{{"mode", s.config().towers}, {"listed", towers.size()}, {"total", total}};
}

void cmd_chartable(Session& s, Report& r) {
    const Group& g = s.group();
    const CharTable& t = s.table();
    const std::string err = t.check_orthogonality();
    r.add("orthogonality", err.empty(), json{{"detail", err}});
    std::vector<std::string> cols{"character"};
    for (int c = 0; c < g.class_count(); ++c) cols.push_back(g.class_name(c));
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < t.size(); ++i) {
        std::vector<std::string> row{t.label(i)};
        for (const auto& v : t.irr(i)) row.push_back(v.str());
        rows.push_back(std::move(row));
    }
    r.data["table"] = make_table(cols, rows);
    json sizes = json::array();
    for (const auto& cl : g.classes()) sizes.push_back(cl.size());
    r.data["class_sizes"] = sizes;
}

void cmd_coxnum(Session& s, Report& r) {
    const Group& g = s.group();
    const GroupSpec& sp = g.spec();
    const CharTable& t = s.table();
    std::vector<std::string> aA(static_cast<std::size_t>(t.size()));
    for (int k = 0; k <= sp.rank(); ++k) {
        auto [a, A] = a_A_hook(HookIndex{sp.e, sp.n, k, sp.p == 1});
        aA[t.ext_power_index(k)] = std::to_string(a + A);
    }
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < t.size(); ++i)
        rows.push_back({t.label(i), t.degree(i).str(), t.n_of(i).str(), t.n_of(t.conj_index(i)).str(), t.coxeter_number(i).str(), aA[i]});
    r.data["table"] = make_table({"character", "chi(1)", "N(chi)", "N(conj chi)", "c_chi", "a+A"}, rows);
}

void cmd_hooks(Session& s, Report& r) {
    const GroupSpec sp = GroupSpec::parse(s.config().group);
    sp.validate();
    std::vector<std::vector<std::string>> rows;
    bool zeta_ok = true, one_ok = true;
    for (int k = 0; k <= sp.rank(); ++k) {
        HookIndex h{sp.e, sp.n, k, sp.p == 1};
        const QLaurent d = degree_hook(h);
        const CycNumber vz = d.eval(E(h.coxeter_number())), v1 = d.eval(CycNumber(1));
        zeta_ok = zeta_ok && vz == CycNumber(k % 2 ? -1 : 1);
        one_ok = one_ok && v1 == CycNumber(binom(sp.rank(), k));
        rows.push_back({std::to_string(sp.e), std::to_string(sp.p), std::to_string(sp.n), std::to_string(k), d.str(),
                        std::to_string(d.valuation()), std::to_string(d.degree()), vz.str(), v1.str()});
    }
    r.add("deg-at-zeta-h", zeta_ok);
    r.add("deg-at-one", one_ok);
    try {
        const CharTable& t = s.table();
        bool ok = true;
        for (int k = 0; k <= sp.rank(); ++k) {
            auto [a, A] = a_A_hook(HookIndex{sp.e, sp.n, k, sp.p == 1});
            ok = ok && CycNumber(a + A) == t.coxeter_number(t.ext_power_index(k));
        }
        r.add("a-plus-A-is-coxeter-number", ok);
    } catch (const CapExceeded& ex) {
        r.skip("a-plus-A-is-coxeter-number", ex.what());
    }
    r.data["table"] = make_table({"e", "p", "n", "k", "Deg", "a", "A", "Deg(zeta_h)", "Deg(1)"}, rows);
}

}  // namespace

std::string fourier_dump(const RunConfig& cfg) {
    Session s(cfg);
    const CharTable& t = s.table();
    const GroupSpec& sp = t.group().spec();
    if (sp.p == sp.e && sp.n == 2 && sp.e >= 3) return dihedral_data_file(t);
    return fourier_data_file(t, s.fourier());
}

Report run_command(const RunConfig& cfg) {
    Session s(cfg);
    Report r;
    r.config = cfg.to_json();
    if (cfg.command != "hooks") r.group = group_summary(s.group());
    else r.group = json{{"spec", GroupSpec::parse(cfg.group).str()}};
    if (cfg.command == "group") cmd_group(s, r);
    else if (cfg.command == "chartable") cmd_chartable(s, r);
    else if (cfg.command == "coxnum") cmd_coxnum(s, r);
    else if (cfg.command == "hooks") cmd_hooks(s, r);
    else if (cfg.command == "kernel-vs-image") kernel_vs_image(s, r);
    else if (cfg.command == "verify") {
        if (cfg.check == "cchi") verify_cchi(s, r);
        else if (cfg.check == "lemma1") verify_lemma1(s, r);
        else if (cfg.check == "coxeter") verify_coxeter(s, r);
        else if (cfg.check == "symmetric") verify_symmetric(s, r);
        else if (cfg.check == "main") verify_main(s, r);
        else if (cfg.check == "tower-f") verify_tower_f(s, r);
        else throw UsageError("unknown check '" + cfg.check + "' (cchi, lemma1, coxeter, symmetric, main, tower-f)");
    } else {
        throw UsageError("unknown command '" + cfg.command + "'");
    }
    r.timing["cache"] = json{{"hits", s.cache().hits()}, {"misses", s.cache().misses()}};
    return r;
}

}  // namespace spets::app
