#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace frontrun {

// Base of every domain error thrown by the library. `code()` is a stable,
// machine-readable tag (also used by the CLI error JSON and exit mapping).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// ---- input validation -----------------------------------------------------

class ValidationError : public Error {
public:
    using Error::Error;
};

class NonPositiveSigma final : public ValidationError {
public:
    explicit NonPositiveSigma(const std::string& message)
        : ValidationError("NonPositiveSigma", message) {}
};

class NegativeSigma final : public ValidationError {
public:
    explicit NegativeSigma(const std::string& message)
        : ValidationError("NegativeSigma", message) {}
};

class NonFinite final : public ValidationError {
public:
    explicit NonFinite(const std::string& message)
        : ValidationError("NonFinite", message) {}
};

class ThetaOutOfDomain final : public ValidationError {
public:
    explicit ThetaOutOfDomain(const std::string& message)
        : ValidationError("ThetaOutOfDomain", message) {}
};

class InvalidConfig final : public ValidationError {
public:
    explicit InvalidConfig(const std::string& message)
        : ValidationError("InvalidConfig", message) {}
};

// ---- numerical failures ---------------------------------------------------

class SolverError : public Error {
public:
    using Error::Error;
};

// Var(y1) = 0 or the Gram matrix of (y1, y2) is singular; never regularized.
class SingularInformation final : public SolverError {
public:
    explicit SingularInformation(const std::string& message)
        : SolverError("SingularInformation", message) {}
};

class NoRootInUnitInterval final : public SolverError {
public:
    explicit NoRootInUnitInterval(const std::string& message)
        : SolverError("NoRootInUnitInterval", message) {}
};

class MultipleRootsInUnitInterval final : public SolverError {
public:
    explicit MultipleRootsInUnitInterval(const std::string& message)
        : SolverError("MultipleRootsInUnitInterval", message) {}
};

class NonConcaveObjective final : public SolverError {
public:
    explicit NonConcaveObjective(const std::string& message)
        : SolverError("NonConcaveObjective", message) {}
};

class NoConvergence final : public SolverError {
public:
    explicit NoConvergence(const std::string& message)
        : SolverError("NoConvergence", message) {}
};

class DegenerateRegressor final : public SolverError {
public:
    explicit DegenerateRegressor(const std::string& message)
        : SolverError("DegenerateRegressor", message) {}
};

// Two independent routes to the same quantity disagreed beyond tolerance.
class CrossCheckFailure final : public SolverError {
public:
    explicit CrossCheckFailure(const std::string& message)
        : SolverError("CrossCheckFailure", message) {}
};

} // namespace frontrun
