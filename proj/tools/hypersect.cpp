#include "hypersect/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using hypersect::JobSpec;
    CLI::App app{"Certify and synthesize plane/pencil conditions for hypersurfaces in three variables"};
    app.set_version_flag("--version", hypersect::tool_version());
    app.require_subcommand(1);

    JobSpec job;
    std::string file;

    auto common = [&](CLI::App* sub, bool expression) {
        if (expression) {
            sub->add_option("expression", job.input, "polynomial expression");
            sub->add_option("--file", file, "read the expression from a file");
            sub->add_option("--vars", job.vars, "comma-separated variable order");
        }
        sub->add_option("--seed", job.seed, "random seed")->capture_default_str();
        sub->add_option("--out", job.output, "write the document here instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "finiteness certificate and discriminant curve");
    common(analyze, true);
    CLI::App* check = app.add_subcommand("check", "condition report for the plane {y = 0}");
    common(check, true);
    check->add_option("--budget", job.budget, "pencil degree budget")->capture_default_str();
    check->add_option("--samples", job.samples, "agreeing samples for generic counts")->capture_default_str();
    CLI::App* pencil = app.add_subcommand("find-pencil", "search a pencil polynomial g for a curve or surface");
    common(pencil, true);
    pencil->add_option("--budget", job.budget, "pencil degree budget")->capture_default_str();
    pencil->add_option("--samples", job.samples, "agreeing samples for generic counts")->capture_default_str();
    CLI::App* synth = app.add_subcommand("synthesize", "find a substitution and pencil for a sampled family");
    common(synth, false);
    synth->add_option("family", job.input, "family file")->required();
    synth->add_option("--rounds", job.rounds, "degree-doubling rounds")->capture_default_str();
    synth->add_option("--tries", job.tries, "random substitutions per round")->capture_default_str();
    synth->add_option("--samples", job.samples, "agreeing samples for generic counts")->capture_default_str();
    synth->add_flag("--verify", job.verify, "re-check the witness from its own data");
    CLI::App* slice = app.add_subcommand("slice", "slice a hypersurface into a family file");
    common(slice, true);
    slice->add_option("--lambda", job.lambda, "slicing variable (default: the last one)");
    slice->add_option("--values", job.values, "comma-separated rational values")->required();
    slice->add_option("--plane", job.plane, "linear polynomial of the candidate hyperplane");
    slice->add_option("--param-dim", job.param_dim, "declared dimension of the base family")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage errors share the input-error status; --help and --version exit 0.
        return app.exit(e) == 0 ? 0 : hypersect::exit_input_error;
    }
    job.command = app.get_subcommands().front()->get_name();
    if (job.command == "synthesize") {
        job.input_is_file = true;
    } else if (!file.empty()) {
        if (!job.input.empty()) {
            std::cerr << "hypersect: error: give either an expression or --file\n";
            return hypersect::exit_input_error;
        }
        job.input = file;
        job.input_is_file = true;
    } else if (job.input.empty()) {
        std::cerr << "hypersect: error: missing expression\n";
        return hypersect::exit_input_error;
    }

    const hypersect::JobResult res = hypersect::run(job);
    if (res.status == hypersect::exit_input_error) {
        std::cerr << "hypersect: error: " << res.error << "\n";
        return res.status;
    }
    if (res.status == hypersect::exit_disagreement) {
        std::cerr << "hypersect: internal disagreement, please report this dump:\n" << res.document;
        return res.status;
    }
    if (job.output.empty()) {
        std::cout << res.document;
    } else {
        std::ofstream out(job.output, std::ios::binary);
        out << res.document;
        if (!out) {
            std::cerr << "hypersect: error: cannot write '" << job.output << "'\n";
            return hypersect::exit_input_error;
        }
    }
    return res.status;
}
