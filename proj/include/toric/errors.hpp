#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

// Every failure carries a stable machine-readable code next to the human
// message; the CLI maps ValidationError to exit 1 and ConvergenceError to 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace toric
