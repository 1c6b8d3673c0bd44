// Command-line front end: parse an instance file, run the selected
// construction/verification stages, print a report.
#include "halg/instance.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Command {
    const char* name;
    const char* help;
    std::vector<std::string> stages;
};

const Command commands[] = {
    {"validate", "Check the crossed-module and 2-group axioms", {"validate"}},
    {"build-2group", "Build the 2-group from the crossed module and verify it", {"validate"}},
    {"trialgebra",
     "Build the span of group algebras and check the three compatible structures",
     {"validate", "trialgebra"}},
    {"cotrialgebra",
     "Build the cospan of function algebras and check the dual structures",
     {"validate", "cotrialgebra"}},
    {"limits-check",
     "Verify that (co)limits of the span are preserved by the algebra functors",
     {"validate", "limits"}},
    {"peter-weyl",
     "Decompose the function algebra into cosimple blocks (prime splitting field)",
     {"validate", "peter-weyl"}},
    {"coend-check",
     "Reconstruct the function algebra from its regular comodule",
     {"validate", "coend"}},
    {"full", "Run every stage selected by the instance file (default: all)", {}},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strict 2-groups, their (co)trialgebras, and representation checks"};
    app.require_subcommand(1);

    std::string file;
    std::string field;
    std::string format = "text";
    int max_order = 128;
    bool timings = false;

    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("file", file, "instance description file")->required();
        sub->add_option("--field", field, "field override: rational or fp:<prime>");
        sub->add_option("--report", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--max-order", max_order, "refuse cell groups larger than this");
        sub->add_flag("--timings", timings, "include per-stage timings in the report");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const Command* chosen = nullptr;
    for (const Command& c : commands)
        if (app.got_subcommand(c.name)) chosen = &c;

    try {
        halg::InstanceSpec spec = halg::parse_spec_file(file);
        halg::RunOptions opt;
        opt.stages = chosen->stages;
        opt.field_override = field;
        opt.max_order = max_order;
        opt.timings = timings;
        halg::Report report = halg::run_pipeline(spec, opt);
        std::cout << halg::emit_report(report, format, timings);
        return halg::exit_code_for(report);
    } catch (const halg::ValidationError& e) {
        std::cerr << "error [" << e.check << "] " << e.what() << "\n";
        return halg::classify_error(e);
    }
}
