#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "orbitcodes/commands.hpp"

namespace {

void add_common(CLI::App* sub, orbitcodes::RunConfig& c) {
    sub->add_option("--q", c.q, "Prime field size")->capture_default_str();
    sub->add_option("--n", c.n, "Ambient dimension (checked against the polynomial degree)");
    sub->add_option("--format", c.format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, orbitcodes::OutputFormat>{{"text", orbitcodes::OutputFormat::text},
                                                            {"json", orbitcodes::OutputFormat::json}},
            CLI::ignore_case));
    sub->add_option("--output", c.output_path, "Write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace orbitcodes;
    RunConfig c;
    CLI::App app{"Irreducible cyclic orbit codes on finite Grassmannians"};
    app.require_subcommand(1);

    auto* spread = app.add_subcommand("spread", "Spread code from the subfield F_{q^k}");
    add_common(spread, c);
    spread->add_option("--k", c.k, "Subspace dimension, must divide n")->required();
    spread->add_option("--poly", c.polynomial, "Primitive polynomial, e.g. x^6+x+1")->required();
    spread->add_option("--log-cap", c.log_table_cap, "Largest field size for the discrete-log table");

    auto* analyze = app.add_subcommand("analyze", "Orbit of an explicit starting point, oracle vs predictor");
    add_common(analyze, c);
    analyze->add_option("--k", c.k, "Expected dimension of the row space");
    analyze->add_option("--poly", c.polynomial, "Irreducible polynomial")->required();
    analyze->add_option("--rows", c.rows, "Comma-separated rows, e.g. 1000,0011,1011")->required();
    analyze->add_option("--log-cap", c.log_table_cap, "Largest field size for the discrete-log table");

    auto* pluecker = app.add_subcommand("pluecker", "Plücker coordinates and Plücker orbit");
    add_common(pluecker, c);
    pluecker->add_option("--k", c.k, "Expected dimension of the row space");
    pluecker->add_option("--poly", c.polynomial, "Irreducible polynomial")->required();
    pluecker->add_option("--rows", c.rows, "Comma-separated rows")->required();

    auto* ball = app.add_subcommand("ball", "Ball membership by intersection and by Plücker coordinates");
    add_common(ball, c);
    ball->add_option("--k", c.k, "Subspace dimension");
    ball->add_option("--rows", c.rows, "Candidate subspace rows");
    ball->add_option("--center", c.center, "Center subspace rows (default rs[I_k | 0])");
    ball->add_option("--t", c.t, "Radius parameter: the ball has subspace distance radius 2t")->required();
    ball->add_flag("--count", c.count, "Sweep the whole Grassmannian and count the ball by every method");

    auto* design = app.add_subcommand("design", "Search for a starting point with a prescribed minimum distance");
    add_common(design, c);
    design->add_option("--k", c.k, "Subspace dimension")->required();
    design->add_option("--poly", c.polynomial, "Irreducible polynomial")->required();
    design->add_option("--target", c.target, "Required minimum distance (even)")->required();
    design->add_option("--budget", c.node_budget, "Search node budget")->capture_default_str();
    design->add_option("--log-cap", c.log_table_cap, "Largest field size for the discrete-log table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    const CommandResult result = run_command(c);
    if (!result.error.empty()) std::cerr << "error: " << result.error << '\n';
    if (!result.output.empty()) {
        if (c.output_path) {
            std::ofstream out(*c.output_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open " << *c.output_path << '\n';
                return kExitInternal;
            }
            out << result.output;
        } else {
            std::cout << result.output;
        }
    }
    return result.exit_code;
}
