#ifndef LATTICA_DRIVER_HPP
#define LATTICA_DRIVER_HPP

#include <string>
#include <vector>

namespace lattica {

struct CommandResult {
    int exit_code = 0;
    std::string output;  // byte-stable; the golden-file contract
};

// The whole command surface; the binary forwards argv here unchanged.
CommandResult run_command(const std::vector<std::string>& args);

struct GoldenRecord {
    std::string id;
    std::vector<std::string> command;
    std::string json_pointer;  // field checked inside the JSON output
    std::string expected;
    std::string provenance;  // reference | oracle | definition
    std::string source;      // citation for reference records
};
const std::vector<GoldenRecord>& golden_corpus();

struct CheckResult {
    std::string name;
    bool ok = false;
    double seconds = 0.0;
    std::string detail;
};
// quick: small bounds everywhere; full: the documented per-module bounds
std::vector<CheckResult> run_all_checks(bool full);

}  // namespace lattica

#endif
