#pragma once

#include "opcoact/groebner.hpp"
#include "opcoact/order.hpp"

#include <string>

namespace opcoact {

// Exit statuses of the command-line front end.
enum ExitStatus : int {
    ExitOk = 0,
    ExitCheckFailed = 1,  // a mathematical check failed
    ExitInputError = 2,   // missing/bad file, parse error, bad arguments
    ExitBudget = 3,       // Groebner resource guard tripped
};

struct RunConfig {
    std::string command;
    std::string operad;    // preset name or presentation file path
    std::string algebra;   // algebra file path
    std::string algebra_b; // optional second algebra for C(a,b)
    std::string ideal;     // ideal file for the groebner subcommand
    MonomialOrder order = MonomialOrder::Degrevlex;
    int max_arity = 3;
    GroebnerBudget budget = GroebnerBudget::from_env();
    std::string output; // empty: stdout
    enum class Format { Json, Text } format = Format::Json;
    std::string matrix;   // inline JSON matrix
    std::string group;    // inline JSON group spec {"factors":[...]}
    std::string morphism; // morphism file path
    std::string grading;  // grading file path
};

struct RunResult {
    int exit_code = ExitOk;
    std::string report; // deterministic bytes for fixed inputs
};

// Executes one subcommand; never throws. Writes the report to
// config.output when set, else the caller prints it.
RunResult dispatch(const RunConfig& config);

} // namespace opcoact
