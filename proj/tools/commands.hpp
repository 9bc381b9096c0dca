#pragma once

#include <memory>
#include <optional>
#include <string>

#include "cache.hpp"
#include "report.hpp"
#include "spets/fourier.hpp"
#include "spets/towerequiv.hpp"

namespace spets::app {

/// Bad flags or arguments; exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  // group, chartable, coxnum, verify, kernel-vs-image, hooks, fourier-dump
    std::string check;    // verify target
    std::string group;
    std::string towers = "conj";
    long long cap = kDefaultOrderCap;
    std::string cache_dir;
    std::string format = "json";
    std::string fourier_data;

    nlohmann::json to_json() const;
};

/// Lazily computed data for one group, shared between checks.
class Session {
  public:
    explicit Session(RunConfig cfg);

    const RunConfig& config() const { return cfg_; }
    const Cache& cache() const { return cache_; }
    const Group& group();
    std::shared_ptr<const Group> group_ptr();
    const CharTable& table();
    /// Throws UnsupportedGroup or FourierError when no data is available.
    const FourierData& fourier();
    /// Reduced echelon basis of the tower kernel for the configured tower mode.
    const Matrix<CycNumber>& tower_kernel();
    /// Per-tower monomial counts (only when computed in this run).
    const nlohmann::json& tower_summary();
    bool equivalent_to_zero(const ClassFunction& f);

  private:
    RunConfig cfg_;
    Cache cache_;
    std::shared_ptr<const Group> group_;
    std::optional<CharTable> table_;
    std::optional<FourierData> fourier_;
    std::optional<Matrix<CycNumber>> kernel_;
    std::optional<EchelonBasis<CycNumber>> kernel_basis_;
    nlohmann::json tower_summary_;
};

/// Runs the configured command. Throws UsageError / DomainError for exit code 2.
Report run_command(const RunConfig& cfg);

/// Text output of fourier-dump (data-file JSON).
std::string fourier_dump(const RunConfig& cfg);

/// Group description block embedded in reports.
nlohmann::json group_summary(const Group& g);

/// Individual verifications, also used by the acceptance driver.
void verify_cchi(Session& s, Report& r);
void verify_lemma1(Session& s, Report& r);
void verify_coxeter(Session& s, Report& r);
void verify_symmetric(Session& s, Report& r);
void verify_main(Session& s, Report& r);
void verify_tower_f(Session& s, Report& r);
void kernel_vs_image(Session& s, Report& r);

}  // namespace spets::app
