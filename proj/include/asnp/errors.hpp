#pragma once

#include <stdexcept>
#include <string>

namespace asnp {

// Malformed or out-of-domain arguments (bad polygon, composite p, n out of range, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical hypothesis required by an operation is not met (e.g. non-ordinary base curve).
class HypothesisError : public InputError {
public:
    explicit HypothesisError(const std::string& what) : InputError("hypothesis not met: " + what) {}
};

// Field enumeration would exceed the configured size budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; indicates a bug in the counting engine.
class EngineError : public std::logic_error {
public:
    explicit EngineError(const std::string& what) : std::logic_error("engine bug: " + what) {}
};

}  // namespace asnp
