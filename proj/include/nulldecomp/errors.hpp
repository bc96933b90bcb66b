#ifndef NULLDECOMP_ERRORS_HPP
#define NULLDECOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nulldecomp {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Input failed (or could not complete) C4k-free bipartite certification.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A brute-force enumeration was asked to run past its vertex budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nulldecomp

#endif
