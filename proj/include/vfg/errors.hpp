#pragma once

#include <stdexcept>
#include <string>

namespace vfg {

// Construction-time table validation failure (group axioms, 2-power orders).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was asked to run above its configured size cap.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Coset enumeration exceeded its cap; the group may be infinite or the cap too small.
class EnumerationCapError : public std::runtime_error {
public:
    explicit EnumerationCapError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A check whose failure contradicts a proven statement (e.g. a guaranteed
// witness was not found). Maps to exit code 3 in the driver.
class AnomalyError : public std::runtime_error {
public:
    explicit AnomalyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vfg
