// spets command-line driver.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace spets;
using namespace spets::app;

namespace {

std::string env_or(const char* name, std::string fallback) {
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for the imprimitive spetsial reflection groups G(e,1,n) and G(e,e,n)"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.cache_dir = env_or("SPETS_CACHE_DIR", "");
    std::string cap_text;
    std::string out_path;

    auto common = [&](CLI::App* sub, bool needs_group) {
        auto* g = sub->add_option("--group", cfg.group, "group, e.g. G(3,1,2)");
        if (needs_group) g->required();
        sub->add_option("--towers", cfg.towers, "all | conj | sample:k:seed")->capture_default_str();
        sub->add_option("--cap", cfg.cap, "maximal group order to enumerate")->capture_default_str();
        sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (env SPETS_CACHE_DIR)");
        sub->add_option("--format", cfg.format, "json | csv | markdown")
            ->check(CLI::IsMember({"json", "csv", "markdown"}))
            ->capture_default_str();
        sub->add_option("--fourier-data", cfg.fourier_data, "Fourier data file or directory (env SPETS_FOURIER_DATA)");
    };
    const std::pair<const char*, const char*> commands[] = {
        {"group", "classes, parabolic lattice, towers and Coxeter element"},
        {"chartable", "exact character table"},
        {"coxnum", "chi(1), N(chi), N(conj chi), c_chi and a+A per character"},
        {"kernel-vs-image", "tower kernel against the image of Id - f"},
        {"hooks", "generic degrees of the hook characters"},
    };
    for (auto [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        common(sub, true);
        sub->callback([&cfg, name] { cfg.command = name; });
    }
    auto* verify = app.add_subcommand("verify", "run one exact verification");
    common(verify, true);
    verify->add_option("check", cfg.check, "cchi | lemma1 | coxeter | symmetric | main | tower-f")
        ->required()
        ->check(CLI::IsMember({"cchi", "lemma1", "coxeter", "symmetric", "main", "tower-f"}));
    verify->callback([&cfg] { cfg.command = "verify"; });
    auto* dump = app.add_subcommand("fourier-dump", "print Fourier data in the data-file format");
    common(dump, true);
    dump->add_option("--out", out_path, "write to this file instead of stdout");
    dump->callback([&cfg] { cfg.command = "fourier-dump"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    static const std::regex g32(R"(\s*G_?\s*32\s*)");
    try {
        if (cfg.command == "fourier-dump") {
            const std::string text = fourier_dump(cfg);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                out << text;
                if (!out) throw std::runtime_error("cannot write " + out_path);
            }
            return 0;
        }
        const auto start = std::chrono::steady_clock::now();
        Report r = run_command(cfg);
        r.timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << r.render(cfg.format);
        return r.exit_code();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        if (std::regex_match(cfg.group, g32))
            std::cerr << "note: the G_32 figures (class function space of dimension 102, tower kernel 78, image of Id - f 77) "
                         "are out of scope; only the imprimitive series are implemented.\n";
        return 2;
    }
}
