// Command-line front end for the intersection homology engine.
//
// Subcommands:
//   models       list the built-in model catalogue
//   homology     ordinary Z/2 homology of a complex
//   ih           intersection homology and the forget map to homology
//   pairing      intersection pairing matrices in complementary degrees
//   les          long exact sequence of a pair (a closed input is coned)
//   obstruction  the full duality ladder and its parity cross-checks
//
// Exit status: 0 when every self-check passes, 1 when one fails, 2 on a
// usage or computational error.  A failing duality is a *finding* reported
// in the output, not a failed check.

#include <chrono>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace {

using ihom::cli::Report;
using ihom::cli::RunOptions;

void addInputFlags(CLI::App* cmd, RunOptions& opts) {
    cmd->add_option("--model", opts.model, "name of a built-in model");
    cmd->add_option("--file", opts.file, "path to a complex description file");
    cmd->add_flag("--json", opts.json, "emit a JSON report");
}

void addPerversityFlag(CLI::App* cmd, RunOptions& opts) {
    cmd->add_option("--perversity", opts.perversity,
                    "'zero' or 'list:p1,p2,...' by codimension 1,2,...");
}

int emit(const Report& report, const RunOptions& opts,
         std::chrono::steady_clock::time_point start) {
    if (opts.json) {
        std::cout << report.doc.dump(2) << "\n";
    } else {
        ihom::cli::printHuman(report.doc, std::cout);
        const auto elapsed = std::chrono::steady_clock::now() - start;
        std::cout << "elapsed_ms: "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
                  << "\n";
    }
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z/2 intersection homology of stratified simplicial pseudomanifolds"};
    app.require_subcommand(1);

    RunOptions opts;
    bool modelsJson = false;

    CLI::App* models = app.add_subcommand("models", "list the built-in model catalogue");
    models->add_flag("--json", modelsJson, "emit a JSON report");

    CLI::App* homology = app.add_subcommand("homology", "ordinary Z/2 homology");
    addInputFlags(homology, opts);

    CLI::App* ih = app.add_subcommand("ih", "intersection homology and the forget map");
    addInputFlags(ih, opts);
    addPerversityFlag(ih, opts);

    CLI::App* pairing = app.add_subcommand("pairing", "intersection pairing matrices");
    addInputFlags(pairing, opts);
    addPerversityFlag(pairing, opts);
    pairing->add_option("--degree", opts.degree, "single degree to pair (default: all)");
    pairing->add_option("--seed", opts.seed, "seed for representative perturbation trials");
    pairing->add_option("--trials", opts.trials, "number of perturbation trials per degree");

    CLI::App* les = app.add_subcommand("les", "long exact sequence of a pair");
    addInputFlags(les, opts);
    addPerversityFlag(les, opts);

    CLI::App* obstruction =
        app.add_subcommand("obstruction", "duality ladder and parity cross-checks");
    addInputFlags(obstruction, opts);
    addPerversityFlag(obstruction, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (models->parsed()) {
            opts.json = modelsJson;
            return emit(ihom::cli::modelsReport(), opts, start);
        }
        if (homology->parsed()) return emit(ihom::cli::homologyReport(opts), opts, start);
        if (ih->parsed()) return emit(ihom::cli::ihReport(opts), opts, start);
        if (pairing->parsed()) return emit(ihom::cli::pairingReport(opts), opts, start);
        if (les->parsed()) return emit(ihom::cli::lesReport(opts), opts, start);
        return emit(ihom::cli::obstructionReport(opts), opts, start);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
