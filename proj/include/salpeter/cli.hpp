#pragma once

#include "salpeter/kernels.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace salpeter::cli {

// Exit codes shared by every subcommand.
constexpr int exit_ok = 0;
constexpr int exit_no_bound_state = 2;
constexpr int exit_invalid_config = 3;
constexpr int exit_convergence_failure = 4;

// Entry point used by the binary and by the tests; `args` excludes the
// program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

// Fixed 12-significant-digit formatting used for every emitted number,
// so identical inputs produce byte-identical files.
std::string format_number(double x);
double round12(double x);

Problem problem_from_json(const nlohmann::json &j);
nlohmann::ordered_json problem_to_json(const Problem &p);
Problem load_problem_file(const std::string &path);

} // namespace salpeter::cli
