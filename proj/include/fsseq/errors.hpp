#pragma once

#include <stdexcept>
#include <string>

namespace fsseq {

struct ContainmentViolation : std::runtime_error {
    explicit ContainmentViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidComplex : std::runtime_error {
    explicit InvalidComplex(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotRegularValue : std::runtime_error {
    explicit NotRegularValue(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapInvalid : std::runtime_error {
    explicit CapInvalid(const std::string& msg) : std::runtime_error(msg) {}
};

struct WellDefinednessFailure : std::runtime_error {
    explicit WellDefinednessFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct RepresentativeMismatch : std::runtime_error {
    explicit RepresentativeMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct ComplexMismatch : std::runtime_error {
    explicit ComplexMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    long line;
    ParseError(long line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct DuplicateId : ParseError {
    DuplicateId(long line_, const std::string& msg) : ParseError(line_, msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Unsatisfiable : std::runtime_error {
    explicit Unsatisfiable(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fsseq
