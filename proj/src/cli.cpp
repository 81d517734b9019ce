#include "corespectra/cli.hpp"

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "corespectra/errors.hpp"
#include "corespectra/report.hpp"

namespace corespectra {

namespace {

void add_input_options(CLI::App* sub, RunConfig& cfg, std::string& format) {
    sub->add_option("--input", cfg.input,
                    "input graph file, or the name of a bundled dataset (karate)")
        ->required();
    sub->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "mtx"}))
        ->default_val("auto");
    sub->add_option("--out", cfg.out, "output encoding")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->default_val("table");
}

void add_spectral_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--tol", cfg.tol, "relative convergence tolerance")
        ->check(CLI::PositiveNumber)
        ->default_val(1e-10);
    sub->add_option("--max-iters", cfg.max_iters, "iteration cap")
        ->check(CLI::Range(1, 1000000000))
        ->default_val(10000);
    sub->add_option("--norm", cfg.norm, "normalization of reported vectors")
        ->check(CLI::IsMember({"l1", "l2", "linf"}))
        ->default_val("l2");
    sub->add_option("--mode", cfg.mode, "iteration strategy")
        ->check(CLI::IsMember({"per-component", "naive"}))
        ->default_val("per-component");
}

FileFormat to_format(const std::string& s) {
    if (s == "edgelist") return FileFormat::edgelist;
    if (s == "mtx") return FileFormat::mtx;
    return FileFormat::autodetect;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"k-core analysis via adjacency-tensor spectra"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "auto";

    CLI::App* core = app.add_subcommand(
        "core", "combinatorial k-core: peel waves and membership");
    add_input_options(core, cfg, format);
    core->add_option("--k", cfg.k, "core order")->required()->check(CLI::Range(1, 1000000000));

    CLI::App* spectral = app.add_subcommand(
        "spectral", "spectral radius and Perron vector of the k-adjacency tensor");
    add_input_options(spectral, cfg, format);
    spectral->add_option("--k", cfg.k, "tensor order")
        ->required()
        ->check(CLI::Range(1, 1000000000));
    add_spectral_options(spectral, cfg);
    spectral->add_option("--support-threshold", cfg.support_threshold,
                         "relative cutoff for the reported support")
        ->check(CLI::NonNegativeNumber)
        ->default_val(1e-12);

    CLI::App* centrality = app.add_subcommand(
        "centrality", "per-vertex centrality scores (dc, cc, ec, kec)");
    add_input_options(centrality, cfg, format);
    centrality->add_option("--k", cfg.k, "order for kec")
        ->check(CLI::Range(1, 1000000000))
        ->default_val(2);
    centrality->add_option("--measures", cfg.measures, "comma-separated measure list")
        ->delimiter(',');
    add_spectral_options(centrality, cfg);

    CLI::App* cycles = app.add_subcommand(
        "cycles", "per-vertex counts of simple cycles up to a bounded length");
    add_input_options(cycles, cfg, format);
    cycles->add_option("--max-len", cfg.max_len, "largest cycle length (3-5)")
        ->check(CLI::Range(3, 5))
        ->default_val(5);

    CLI::App* compare = app.add_subcommand(
        "compare", "Spearman correlations between centrality and cycle measures");
    add_input_options(compare, cfg, format);
    compare->add_option("--k", cfg.k, "order for kec")
        ->check(CLI::Range(1, 1000000000))
        ->default_val(2);
    compare->add_option("--measures", cfg.measures,
                        "comma-separated list from dc,cc,ec,kec,c3,c4,c5")
        ->delimiter(',');
    add_spectral_options(compare, cfg);

    CLI::App* selfcheck = app.add_subcommand(
        "self-check", "run the dense-tensor oracle suite against the implicit kernel");
    selfcheck->group("");  // hidden
    selfcheck->add_option("--seed", cfg.seed)->default_val(20240817);
    selfcheck->add_option("--trials", cfg.trials)
        ->check(CLI::Range(1, 1000000000))
        ->default_val(50);
    selfcheck->add_option("--out", cfg.out)
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->default_val("table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format = to_format(format);

    try {
        RunOutcome outcome = run(cfg);
        std::cout << outcome.rendered;
        return outcome.exit_code;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace corespectra
