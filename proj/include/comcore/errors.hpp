#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace comcore {

// Every failure the library can raise maps to one of these kinds. The CLI
// turns kinds into process exit codes (see exit_code_for).
enum class ErrorKind {
    Bounds,              // cell outside the grid
    Ring,                // cell not on the 8-cell ring around a vertex
    Unreachable,         // no path from start to goal
    WindowUnavailable,   // conflict at t=0 or at a path's final step: no window
    Unclassifiable,      // collision grid count is not 2, 4 or 6
    RoleNotApplicable,   // vessel labeling requested for a non-crossing window
    BoundaryResolution,  // an insertion list would leave the grid or hit a block
    Splice,              // insertion list endpoints do not match the path
    IterationLimit,      // phase-2 exceeded max_iterations
    Generation,          // benchmark generator could not satisfy the request
    Scenario,            // scenario/trajectory file is malformed or invalid
    Io,                  // file could not be read or written
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Bounds: return "bounds";
        case ErrorKind::Ring: return "ring";
        case ErrorKind::Unreachable: return "unreachable";
        case ErrorKind::WindowUnavailable: return "window_unavailable";
        case ErrorKind::Unclassifiable: return "unclassifiable_conflict";
        case ErrorKind::RoleNotApplicable: return "role_not_applicable";
        case ErrorKind::BoundaryResolution: return "boundary_resolution";
        case ErrorKind::Splice: return "splice";
        case ErrorKind::IterationLimit: return "iteration_limit";
        case ErrorKind::Generation: return "generation";
        case ErrorKind::Scenario: return "scenario";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Process exit codes, one per error family:
//   0 success, 2 scenario error, 3 unresolvable conflict, 4 iteration limit,
//   5 I/O. Anything else (internal invariant breaches) maps to 1.
inline int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::Scenario:
        case ErrorKind::Unreachable:
            return 2;
        case ErrorKind::WindowUnavailable:
        case ErrorKind::Unclassifiable:
        case ErrorKind::BoundaryResolution:
            return 3;
        case ErrorKind::IterationLimit:
            return 4;
        case ErrorKind::Io:
            return 5;
        default:
            return 1;
    }
}

}  // namespace comcore
