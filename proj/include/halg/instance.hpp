#pragma once

#include "halg/crossed_module.hpp"
#include "halg/two_group.hpp"

#include <map>
#include <set>

namespace halg {

// A declarative problem description: named groups, named crossed modules,
// and one pipeline block choosing the instance, the field and the stages.
struct InstanceSpec {
    std::map<std::string, GroupPtr> groups;
    std::map<std::string, CrossedModule> xmods;
    std::string main_xmod;
    std::string field = "rational";   // "rational" or "fp:<p>"
    std::set<std::string> stages;     // empty = every stage enabled
    std::string source;               // originating file, for diagnostics
};

// Parses and resolves a description; throws ValidationError with a
// "file:line" witness on malformed input, unknown keys or dangling names.
InstanceSpec parse_spec(const std::string& text, const std::string& source = "<memory>");
InstanceSpec parse_spec_file(const std::string& path);

struct RunOptions {
    std::vector<std::string> stages;  // empty = run the file's enabled stages
    std::string field_override;      // empty = use the file's field
    int max_order = 128;             // refuse cell groups beyond this order
    bool timings = false;            // collect per-stage wall time
};

struct Report {
    std::string instance;
    std::string field;
    std::vector<std::string> pipeline;  // stages that ran, in order
    int g0_order = 0;
    int g1_order = 0;
    CheckReport checks;
    std::vector<std::pair<std::string, long>> stage_ms;  // segregated timings

    int total() const { return int(checks.checks.size()); }
    int failed() const { return checks.fail_count(); }
};

// Orchestrates construction and verification. Check failures become failed
// records; precondition violations (field characteristic, splitting prime,
// size guard) are thrown.
Report run_pipeline(const InstanceSpec& spec, const RunOptions& opt = {});

// format "json" (stable key order, machine-readable) or "text".
std::string emit_report(const Report& r, const std::string& format, bool include_timings = false);

// 0 when every record passed, 1 otherwise.
int exit_code_for(const Report& r);

// 2 for malformed descriptions, 3 for violated preconditions.
int classify_error(const ValidationError& e);

// Stage names accepted in [pipeline] checks and on the command line.
const std::vector<std::string>& known_stages();

}  // namespace halg
