#pragma once

#include <stdexcept>
#include <string>

namespace rhg {

// domain_error:    a numeric routine was handed arguments outside its domain
// contract_error:  an internal invariant failed (a bug, not a user mistake)
// resource_error:  a requested computation would exceed a configured budget
// parameter_error: user-supplied model or CLI parameters are invalid

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parameter_error : std::runtime_error {
    explicit parameter_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rhg
