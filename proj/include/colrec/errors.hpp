#pragma once

#include <stdexcept>
#include <string>

namespace colrec {

// Input that violates a documented schema or type invariant.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A history no set of trajectories can realize.
struct InvalidHistory : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Timeline recovery requested on a disconnected history.
struct NotConnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph whose complement admits no transitive orientation.
struct NotFunctionGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A peeling stage produced a set that is not a maximal clique.
struct LayerFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contraction edges do not follow the consecutive interval pattern.
struct IntervalViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exterior components cannot be split into two consistent sides.
struct InconsistentSides : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every seed clique dominates the graph, leaving no exterior.
struct EmptyExterior : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive solver asked to run beyond its enumeration bound.
struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Trajectory input (or draw) breaks the genericity requirements.
struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Module shrink factor changed the collision graph; caller must retry smaller.
struct EpsilonTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace colrec
