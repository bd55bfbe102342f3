#pragma once

#include <stdexcept>
#include <string>

namespace braidwire {

// Input could not be read or decoded (CLI exit code 3).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input decoded fine but violates a domain rule (CLI exit code 2).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace braidwire
