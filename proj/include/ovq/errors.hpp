#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ovq {

// Base for all typed errors. `math_violation` separates scientifically
// interesting failures (a conjecture counterexample, a structure theorem
// breaking on computed data) from bad input / insufficient parameters;
// the CLI maps the former to exit 3 and the latter to exit 2.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg, bool math_violation)
        : std::runtime_error(kind + ": " + msg),
          kind_(std::move(kind)),
          math_violation_(math_violation) {}

    const std::string& kind() const { return kind_; }
    bool math_violation() const { return math_violation_; }
    const std::vector<std::pair<std::string, std::string>>& detail() const { return detail_; }

    Error& with(std::string key, std::string value) {
        detail_.emplace_back(std::move(key), std::move(value));
        return *this;
    }

private:
    std::string kind_;
    bool math_violation_;
    std::vector<std::pair<std::string, std::string>> detail_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero")
        : Error("DivisionByZero", msg, false) {}
};

struct NotLaurent : Error {
    explicit NotLaurent(const std::string& msg)
        : Error("NotLaurent", msg, true) {}
};

struct BadConstantTerm : Error {
    explicit BadConstantTerm(const std::string& msg)
        : Error("BadConstantTerm", msg, false) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg)
        : Error("CapExceeded", msg, false) {}
};

struct IntegralityViolation : Error {
    explicit IntegralityViolation(const std::string& msg)
        : Error("IntegralityViolation", msg, true) {}
};

struct NonIntegerResult : Error {
    explicit NonIntegerResult(const std::string& msg)
        : Error("NonIntegerResult", msg, true) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg)
        : Error("NotPrime", msg, false) {}
};

struct InvalidTau : Error {
    explicit InvalidTau(const std::string& msg)
        : Error("InvalidTau", msg, false) {}
};

struct SignViolation : Error {
    explicit SignViolation(const std::string& msg)
        : Error("SignViolation", msg, true) {}
};

struct ParityViolation : Error {
    explicit ParityViolation(const std::string& msg)
        : Error("ParityViolation", msg, true) {}
};

struct SupportViolation : Error {
    explicit SupportViolation(const std::string& msg)
        : Error("SupportViolation", msg, true) {}
};

struct TruncationTooTight : Error {
    explicit TruncationTooTight(const std::string& msg)
        : Error("TruncationTooTight", msg, false) {}
};

struct IncompleteExponents : Error {
    explicit IncompleteExponents(const std::string& msg)
        : Error("IncompleteExponents", msg, false) {}
};

struct MismatchAt : Error {
    explicit MismatchAt(const std::string& msg)
        : Error("MismatchAt", msg, true) {}
};

struct InputError : Error {
    explicit InputError(const std::string& msg)
        : Error("InputError", msg, false) {}
};

}  // namespace ovq
