#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "cli_app.hpp"

int main(int argc, char** argv) {
    CLI::App app{"edrep: variational momentum-cutoff toolkit for the "
                 "electric-dipole representation"};
    app.require_subcommand(1);

    std::string config_path;
    double alpha = 0.0, k_min = 0.0, k_max = 0.0, smooth_rel = 0.0,
           osc_rel = 0.0, number_density = 0.0, r_min = 0.0, r_max = 0.0;
    int grid_count = 0, r_count = 0;
    std::string profile, spacing, csv_path, json_path, spectrum, spectrum_b;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--alpha", alpha, "fine-structure constant");
    app.add_option("--profile", profile,
                   "hydrogen | gaussian:<width> | file:<path>");
    app.add_option("--grid-min", k_min, "lowest grid momentum (1/a)");
    app.add_option("--grid-max", k_max, "highest grid momentum (1/a)");
    app.add_option("--grid-count", grid_count, "number of grid nodes");
    app.add_option("--grid-spacing", spacing, "log | linear");
    app.add_option("--smooth-rel", smooth_rel, "smooth quadrature rel tol");
    app.add_option("--osc-rel", osc_rel, "oscillatory quadrature rel tol");
    app.add_option("--csv", csv_path, "CSV output path");
    app.add_option("--json", json_path, "JSON output path");
    app.add_option("--spectrum", spectrum, "spectrum table CSV (atom A)");
    app.add_option("--spectrum-b", spectrum_b, "spectrum table CSV (atom B)");
    app.add_option("--number-density", number_density, "atoms per cm^3");
    app.add_option("--r-min", r_min, "lowest separation (a)");
    app.add_option("--r-max", r_max, "highest separation (a)");
    app.add_option("--r-count", r_count, "separation sweep points");

    const char* names[] = {"cutoff",  "energy", "potential",       "photons",
                           "gamma",   "vdw",    "verify-appendix", "report"};
    const char* descs[] = {
        "optimal cutoff: closed form vs grid minimisation",
        "energy shift and induced constants",
        "induced single-atom potential V''(r)",
        "dressed-photon spectrum and totals",
        "dipole tensors: exact kernel vs asymptotic forms",
        "van der Waals potentials from a spectrum table",
        "closed-form integral family vs adaptive quadrature",
        "full reproduction summary with reference tags"};
    for (int i = 0; i < 8; ++i)
        app.add_subcommand(names[i], descs[i])->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        edrep::cli::RunConfig cfg; // defaults
        edrep::cli::apply_env_config(cfg);
        if (app.count("--config")) edrep::cli::apply_config_file(cfg, config_path);
        if (app.count("--alpha")) cfg.alpha = alpha;
        if (app.count("--profile")) cfg.profile = profile;
        if (app.count("--grid-min")) cfg.grid.k_min = k_min;
        if (app.count("--grid-max")) cfg.grid.k_max = k_max;
        if (app.count("--grid-count")) cfg.grid.count = grid_count;
        if (app.count("--grid-spacing")) cfg.grid.spacing = spacing;
        if (app.count("--smooth-rel")) cfg.tolerances.smooth_rel = smooth_rel;
        if (app.count("--osc-rel")) cfg.tolerances.oscillatory_rel = osc_rel;
        if (app.count("--csv")) cfg.csv_path = csv_path;
        if (app.count("--json")) cfg.json_path = json_path;
        if (app.count("--spectrum")) cfg.spectrum_path = spectrum;
        if (app.count("--spectrum-b")) cfg.spectrum_b_path = spectrum_b;
        if (app.count("--number-density")) cfg.number_density_cm3 = number_density;
        if (app.count("--r-min")) cfg.r_min = r_min;
        if (app.count("--r-max")) cfg.r_max = r_max;
        if (app.count("--r-count")) cfg.r_count = r_count;

        for (const auto* sub : app.get_subcommands())
            return edrep::cli::dispatch(sub->get_name(), cfg);
        std::fprintf(stderr, "error:config:no subcommand given\n");
        return 2;
    } catch (const edrep::ConfigError& e) {
        std::fprintf(stderr, "error:config:%s\n", e.what());
        return 2;
    } catch (const edrep::IoError& e) {
        std::fprintf(stderr, "error:io:%s\n", e.what());
        return 3;
    } catch (const edrep::Error& e) {
        std::fprintf(stderr, "error:computation:%s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error:internal:%s\n", e.what());
        return 5;
    }
}
