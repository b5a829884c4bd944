#pragma once

#include <stdexcept>
#include <string>

namespace pocfvs {

/// Malformed or out-of-range input (bad parameters, invalid vertex index,
/// violated precondition of a constructive procedure).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation undefined on this (otherwise valid) graph, e.g. the diameter of
/// a disconnected graph.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exhaustive search refused because the instance exceeds a configured limit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural claim that must hold for every input was observed to fail.
/// These are never expected; when raised they carry enough context to
/// reproduce the counterexample.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pocfvs
