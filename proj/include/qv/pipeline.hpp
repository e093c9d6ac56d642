#pragma once

#include "qv/tables.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qv::pipeline {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Config {
    long field_order = 120;
    std::uint64_t seed = 0;
    // Wall times make reports differ between runs, so they are recorded
    // only on request; otherwise millis is 0.
    bool timings = false;
    // Test fixture: replaces the transcribed Table 1 rows.
    std::optional<std::vector<Table1Row>> table1_override;
};

struct CheckReport {
    std::string name;
    Status status = Status::Skipped;
    json witness = json::object();
    long millis = 0;
};

class Workspace;
class Witness;

struct CheckSpec {
    std::string name;
    int criterion = 0;               // acceptance criterion this check belongs to
    std::vector<std::string> deps;
    std::string claim;               // what is being verified, in words
    std::function<void(Workspace&, Witness&)> runner;
};

class UnknownCheck : public std::invalid_argument {
public:
    explicit UnknownCheck(const std::string& name);
    std::string name;
};

// All checks, in a fixed topological order.
const std::vector<CheckSpec>& registry();
const CheckSpec& find_check(const std::string& name);
std::vector<std::string> all_check_names();

// Runs the selection plus everything it depends on, in registry order.  A
// check whose dependency did not pass is skipped.  Throws UnknownCheck.
std::vector<CheckReport> run(const std::vector<std::string>& selection, const Config& cfg);
bool all_passed(const std::vector<CheckReport>& reports);

json report_json(const std::vector<CheckReport>& reports, const Config& cfg);
// Pretty-printed with a trailing newline; identical inputs give identical bytes.
std::string render_report(const std::vector<CheckReport>& reports, const Config& cfg);
// Throws std::runtime_error if the file cannot be written.
void emit_report(const std::vector<CheckReport>& reports, const Config& cfg, const std::string& path);

const char* version();

}  // namespace qv::pipeline
