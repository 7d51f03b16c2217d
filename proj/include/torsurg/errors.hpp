#pragma once

#include <stdexcept>
#include <string>

namespace torsurg {

// Domain precondition violations (CLI exit code 1).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_symmetric_error : domain_error {
    using domain_error::domain_error;
};

struct degenerate_error : domain_error {
    using domain_error::domain_error;
};

struct budget_error : domain_error {
    using domain_error::domain_error;
};

// Parse / usage / IO failures (CLI exit code 2).
struct parse_error : std::runtime_error {
    std::size_t column;  // 1-based position in the offending text
    parse_error(std::size_t col, const std::string& msg)
        : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
};

}  // namespace torsurg
