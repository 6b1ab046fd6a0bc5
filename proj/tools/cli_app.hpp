#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edrep/atomic_model.hpp"
#include "edrep/units.hpp"

namespace edrep::cli {

struct GridSpec {
    double k_min = 1e-3;
    double k_max = 1e4;
    int count = 400;
    std::string spacing = "log"; // log | linear
};

struct Tolerances {
    double smooth_rel = 1e-10;
    double oscillatory_rel = 1e-8;
};

struct RunConfig {
    double alpha = 1.0 / 137.035999;
    std::string profile = "hydrogen"; // hydrogen | gaussian:<w> | file:<path>
    GridSpec grid;
    Tolerances tolerances;
    std::string csv_path;  // default: <subcommand>.csv
    std::string json_path; // default: <subcommand>.json
    std::string spectrum_path;
    std::string spectrum_b_path;
    double number_density_cm3 = 1e23;
    double r_min = 10.0;
    double r_max = 1000.0;
    int r_count = 25;

    void validate() const; // ConfigError on bad combinations
};

// Layering: defaults -> EDREP_CONFIG file -> explicit config file -> flags.
// Config files are JSON; unknown keys are rejected.
void apply_config_file(RunConfig& cfg, const std::string& path);
void apply_env_config(RunConfig& cfg);

atomic::DensityProfile make_profile(const RunConfig& cfg);
UnitSystem make_units(const RunConfig& cfg);

// Fixed-format helpers: 17 significant digits for JSON, 12 for CSV.
std::string json_num(double v);
std::string csv_num(double v);

// Atomic file write: temp file in the target directory, then rename.
void write_text_atomic(const std::string& path, const std::string& content);

// Flat summary document: snake_case key -> {value, units, paper_ref}.
class Summary {
  public:
    void add(const std::string& key, double value, const std::string& units,
             const std::string& paper_ref);
    std::string to_json() const;
    bool has(const std::string& key) const;
    double value(const std::string& key) const;

  private:
    struct Row {
        std::string key;
        double value;
        std::string units;
        std::string paper_ref;
    };
    std::vector<Row> rows_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::string to_csv() const;
};

struct CommandOutput {
    std::optional<CsvTable> csv;
    std::string json; // always present
};

CommandOutput run_cutoff(const RunConfig& cfg);
CommandOutput run_energy(const RunConfig& cfg);
CommandOutput run_potential(const RunConfig& cfg);
CommandOutput run_photons(const RunConfig& cfg);
CommandOutput run_gamma(const RunConfig& cfg);
CommandOutput run_vdw(const RunConfig& cfg);
CommandOutput run_verify_appendix(const RunConfig& cfg);
CommandOutput run_report(const RunConfig& cfg);

// Runs a subcommand and writes its outputs; returns the process exit code.
int dispatch(const std::string& subcommand, RunConfig cfg);

} // namespace edrep::cli
