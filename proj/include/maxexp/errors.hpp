#ifndef MAXEXP_ERRORS_HPP
#define MAXEXP_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxexp {

// Malformed input: bad file, bad indices, violated type invariants. CLI exit 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A solver refused to run because the work bound was exceeded. CLI exit 2.
// The oracle never truncates an enumeration; it fails loudly instead.
struct BudgetExceededError : std::runtime_error {
    std::uint64_t subset_count;
    BudgetExceededError(const std::string& what, std::uint64_t count)
        : std::runtime_error(what), subset_count(count) {}
};

// Structurally infeasible request (h over the exact-solver cap, generator
// retry cap, alpha out of range). CLI exit 2.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace maxexp

#endif
