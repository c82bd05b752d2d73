// Command-line frontend: spectra, polynomial tables, wavefunction samples,
// transformation checks, and verification reports for the quasi-exactly
// solvable potential families. Emits JSON / CSV for downstream plotting.

#include <qes/cli.hpp>

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"qes - quasi-exactly solvable potential toolkit"};
    app.require_subcommand(1);

    qes::cli::RunConfig cfg;
    std::string precision = "double";

    auto add_common = [&](CLI::App* sub, bool with_family) {
        if (with_family)
            sub->add_option("--family", cfg.family,
                            "poschl-teller | generalized-pt | scarf-pt | sextic | pt-anharmonic")
                ->required();
        sub->add_option("--twoj", cfg.twoj, "2j (integer; half-integer j = twoj/2)");
        sub->add_option("--precision", precision, "double | extended");
        sub->add_option("--out", cfg.output_path, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "json | csv");
        for (const char* key : {"L", "A", "q", "alpha", "b", "a", "qa2", "ell"}) {
            sub->add_option_function<double>(
                std::string("--") + key,
                [&cfg, key](double v) { cfg.parameters[key] = v; },
                std::string("family parameter ") + key);
        }
    };

    auto* spectrum = app.add_subcommand("spectrum", "spectral roots and energies");
    add_common(spectrum, true);
    spectrum->add_option("--method", cfg.method, "roots | tridiagonal");

    auto* polytable = app.add_subcommand("polytable", "monic energy polynomials P_0..P_{2j+1}");
    add_common(polytable, true);

    auto* wavefunction = app.add_subcommand("wavefunction", "CSV samples of an eigenfunction");
    add_common(wavefunction, true);
    wavefunction->add_option("--root-index", cfg.root_index, "which spectral root (ascending)");
    wavefunction->add_option("--xmin", cfg.x_min, "sample range start");
    wavefunction->add_option("--xmax", cfg.x_max, "sample range end");
    wavefunction->add_option("--n", cfg.n_samples, "number of samples");

    auto* tcheck = app.add_subcommand("transform-check", "coordinate-map identity residuals");
    add_common(tcheck, false);
    cfg.family = "poschl-teller";
    tcheck->add_option("--transform", cfg.transform, "half | scarf | shift");
    tcheck->add_option("--a-scale", cfg.a_scale, "a of x -> a x + i b");
    tcheck->add_option("--b-shift", cfg.b_shift, "b of x -> a x + i b");
    tcheck->add_option("--n", cfg.n_samples, "number of samples");

    auto* verify = app.add_subcommand("verify", "finite-difference / residual oracle report");
    add_common(verify, true);
    verify->add_option("--mode", cfg.verify_mode, "fd | residual | auto");
    verify->add_option("--grid-n", cfg.grid_n, "grid points for the oracle");
    verify->add_option("--n-states", cfg.n_states, "number of oracle levels");
    verify->add_option("--xmin", cfg.x_min, "grid start");
    verify->add_option("--xmax", cfg.x_max, "grid end");

    auto* bench = app.add_subcommand("bench-daniel", "sextic benchmark wells");
    bench->add_option("--out", cfg.output_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1; // configuration error
    }

    if (precision == "extended")
        cfg.precision = qes::Precision::Extended;
    else if (precision != "double") {
        std::cerr << "error: --precision must be double or extended\n";
        return 1;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return qes::cli::run(cfg);
}
