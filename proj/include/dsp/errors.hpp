#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dsp {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Errors caused by bad input (graph files, queries, flags). CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Errors that indicate a bug inside the library. CLI exit code 3.
struct InternalError : Error {
    using Error::Error;
};

// graph parsing / construction
struct MalformedHeader : InputError {
    using InputError::InputError;
};
struct IndexOutOfRange : InputError {
    using InputError::InputError;
};
struct SelfLoop : InputError {
    using InputError::InputError;
};
struct DuplicateEdge : InputError {
    using InputError::InputError;
};
struct NonPositiveUndirectedWeight : InputError {
    using InputError::InputError;
};
struct KindMismatch : InputError {
    using InputError::InputError;
};
struct InfeasibleEdgeCount : InputError {
    using InputError::InputError;
};

// shortest paths
struct NegativeCycle : InputError {
    using InputError::InputError;
};
struct ZeroCycle : InputError {
    ZeroCycle(const std::string& what, std::vector<int> cycle)
        : InputError(what), cycle(std::move(cycle)) {}
    std::vector<int> cycle;  // witness, as a vertex sequence (closed)
};
struct UnreachableTerminal : InputError {
    using InputError::InputError;
};

// solver preconditions
struct NonPositiveWeight : InputError {
    using InputError::InputError;
};
struct TerminalsNotDistinct : InputError {
    using InputError::InputError;
};
struct InstanceTooLarge : InputError {
    using InputError::InputError;
};
struct NotADag : InputError {
    using InputError::InputError;
};

// dominators
struct RootMissing : InputError {
    using InputError::InputError;
};
struct Unreachable : InputError {
    using InputError::InputError;
};

// oracle
struct CapExceeded : InputError {
    using InputError::InputError;
};
struct PrecedenceViolated : InputError {
    using InputError::InputError;
};

// randomized reporting: the evaluation point was unlucky, retry with a new seed
struct ReportingFailed : Error {
    using Error::Error;
};
struct FlowInfeasible : Error {
    using Error::Error;
};

// assertion-grade: must never fire on a correct build
struct MissingSubproblem : InternalError {
    using InternalError::InternalError;
};
struct InternalFlowInfeasible : InternalError {
    using InternalError::InternalError;
};
struct NoIntersectingPair : InternalError {
    using InternalError::InternalError;
};

}  // namespace dsp
