#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "liepair/model.hpp"

namespace cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One certified check: pass, fail (with the evidence in `witness`), or
// skipped (with the reason in `witness`). Passing records may carry a result
// payload in `witness` as well (residuals, dimension tables).
struct CheckRecord {
    std::string id;
    std::string status;  // pass | fail | skipped
    std::string witness;
    double ms = 0.0;
};

struct Report {
    std::string command;
    std::string model;
    std::string gamma = "default";
    unsigned seed = 0;
    int max_k = -1;
    std::vector<CheckRecord> records;

    // True when no record failed (skipped records do not fail a report).
    bool pass() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

struct Options {
    std::string command;
    std::string path;
    bool json = false;
    std::string gamma = "default";  // default | random
    unsigned seed = 0;
    int max_k = -1;  // -1 = the rank of the subalgebroid
};

std::string usage();

// Throws UsageError on unknown commands, unknown flags, malformed flag
// values, or missing/extra positional arguments.
Options parse_args(const std::vector<std::string>& args);

// Runs one command on an already-loaded model and returns its report.
Report run_command(const Options& opt, const liepair::LiePairModel& m);

// Full entry point: parse arguments, load the model, run, print the report.
// Returns 0 when every record passes, 1 when a check fails, and 2 on usage
// or parse errors (reported on `err` without stack traces).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
