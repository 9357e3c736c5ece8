#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gambier {

// Error categories map onto CLI exit codes: Condition -> 1 (a mathematical
// precondition of an operation is violated), Parse -> 2 (bad input text or
// job schema), Numeric -> 3 (the numerics gave up).
enum class ErrorCategory { Condition, Parse, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), cat_(cat) {}
    ErrorCategory category() const { return cat_; }

private:
    ErrorCategory cat_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected, const std::string& msg)
        : Error(ErrorCategory::Parse, msg),
          offset_(offset),
          expected_(std::move(expected)) {}
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(ErrorCategory::Parse, msg) {}
};

class UnknownIdentifier : public Error {
public:
    explicit UnknownIdentifier(const std::string& id)
        : Error(ErrorCategory::Parse, "unknown identifier: " + id) {}
};

class ConditionFailed : public Error {
public:
    ConditionFailed(std::string condition, double residual, const std::string& msg)
        : Error(ErrorCategory::Condition, msg),
          condition_(std::move(condition)),
          residual_(residual) {}
    const std::string& condition() const { return condition_; }
    double residual() const { return residual_; }

private:
    std::string condition_;
    double residual_;
};

class Unreducible : public Error {
public:
    explicit Unreducible(const std::string& msg) : Error(ErrorCategory::Condition, msg) {}
};

class NonMonotone : public Error {
public:
    explicit NonMonotone(const std::string& msg) : Error(ErrorCategory::Condition, msg) {}
};

class DegenerateDenominator : public Error {
public:
    explicit DegenerateDenominator(const std::string& msg)
        : Error(ErrorCategory::Condition, msg) {}
};

class DegenerateSolutions : public Error {
public:
    explicit DegenerateSolutions(const std::string& msg)
        : Error(ErrorCategory::Condition, msg) {}
};

class DependentSolutions : public Error {
public:
    explicit DependentSolutions(const std::string& msg)
        : Error(ErrorCategory::Condition, msg) {}
};

class NegativeRadicand : public Error {
public:
    NegativeRadicand(double where, const std::string& msg)
        : Error(ErrorCategory::Condition, msg), where_(where) {}
    // first offending point of the independent variable
    double where() const { return where_; }

private:
    double where_;
};

class WronskianDrift : public Error {
public:
    WronskianDrift(double drift, const std::string& msg)
        : Error(ErrorCategory::Condition, msg), drift_(drift) {}
    double drift() const { return drift_; }

private:
    double drift_;
};

class DomainViolation : public Error {
public:
    explicit DomainViolation(const std::string& msg) : Error(ErrorCategory::Numeric, msg) {}
};

class IntegrationError : public Error {
public:
    enum class Kind { StepFailure, MaxSteps };
    IntegrationError(Kind kind, const std::string& msg)
        : Error(ErrorCategory::Numeric, msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace gambier
