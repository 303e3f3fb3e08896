// staralg: command-line front end for the star-product engine.

#include "staralg/job.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

using namespace staralg;

namespace {

void add_common(CLI::App* cmd, JobSpec& job) {
    cmd->add_option("--format", job.format, "Output format: json or text")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"text", Format::Text}},
                                            CLI::ignore_case));
    cmd->add_option("--out", job.out, "Write the report to this file");
}

void add_ideal(CLI::App* cmd, JobSpec& job) {
    cmd->add_option("--m", job.m, "Base dimension");
    cmd->add_option("--ideal", job.ideal, "Generators in x1..xm, comma separated")->delimiter(',');
    cmd->add_option("--degree", job.degree, "Total-degree bound D of the truncation");
    cmd->add_option("--slack", job.slack, "Extra degrees used to build the ideal slice");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Moyal star products and quantized observable algebras.\n"
                 "Expressions use x, p (or x1, p1, x2, p2, ...) and l for the deformation parameter lambda."};
    app.require_subcommand(1);
    JobSpec job;

    auto* star = app.add_subcommand("star", "Star product f * g");
    star->add_option("--m", job.m, "Number of x/p pairs");
    star->add_option("--f", job.f, "Left factor")->required();
    star->add_option("--g", job.g, "Right factor")->required();
    add_common(star, job);

    auto* quantize = app.add_subcommand("quantize", "Quotient observable algebra of x^n = 0 or of a base ideal");
    quantize->add_option("--n", job.n, "Multiplicity of the point x^n = 0");
    add_ideal(quantize, job);
    add_common(quantize, job);

    auto* structure = app.add_subcommand("structure", "Structure constants of the n-tuple-point quotient");
    structure->add_option("--n", job.n, "Multiplicity")->required();
    structure->add_option("--lambda", job.lambda, "Also evaluate at this nonzero rational");
    add_common(structure, job);

    auto* matrix = app.add_subcommand("matrix", "Matrix representation of the n-tuple-point quotient");
    matrix->add_option("--n", job.n, "Multiplicity")->required();
    matrix->add_option("--lambda", job.lambda, "Also evaluate at this nonzero rational");
    add_common(matrix, job);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--n", job.n, "Multiplicity")->required();
    verify->add_option("--seed", job.seed, "Seed for the randomized checks");
    verify->add_option("--checks", job.checks, "Cases per randomized property");
    verify->add_option("--coeff-bound", job.coeff_bound, "Random coefficients lie in [-B, B]");
    verify->add_option("--max-degree", job.max_degree, "Degree bound for random polynomials");
    add_common(verify, job);

    auto* explore = app.add_subcommand("explore", "Truncated quotient with stability diagnostics");
    add_ideal(explore, job);
    add_common(explore, job);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::map<CLI::App*, Command> commands{{star, Command::Star},           {quantize, Command::Quantize},
                                                {structure, Command::Structure}, {matrix, Command::Matrix},
                                                {verify, Command::Verify},       {explore, Command::Explore}};
    for (const auto& [cmd, command] : commands)
        if (cmd->parsed()) job.command = command;
    return run(job, std::cout, std::cerr);
}
