#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nadisk/json_io.hpp"

namespace nadisk::cli {

enum Exit : int { Ok = 0, InvariantFailure = 1, InputError = 2 };

struct ExperimentConfig {
    std::string command; // newton, norm, zeta, xi, prescribe, verify, semcurve, solve-radius, recipe
    std::string recipe;  // recipe name when command == "recipe"
    std::string input;   // path; empty or "-" reads stdin
    std::string output;  // path; empty writes stdout
    std::size_t stages = 1;
    std::optional<std::size_t> horizon;
    std::uint64_t seed = 1;
    std::string format = "json"; // json or csv
};

// A report renders either as the JSON document or as the CSV table.
struct Report {
    io::Json json;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool ok = true; // every asserted invariant held
};

const std::vector<std::string>& recipe_names();

// Dispatch one scenario on parsed input (null when the scenario needs none).
Report run_scenario(const ExperimentConfig& cfg, const io::Json& input);
Report run_recipe(const std::string& name, std::size_t horizon, std::uint64_t seed, const io::Json& params);

std::string render(const Report& r, const std::string& format);

// Read input, run, write the report. Errors go to `err` as one JSON line.
int run(const ExperimentConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace nadisk::cli
