#pragma once

#include <stdexcept>
#include <string>

namespace quivinv {

/* Invalid input or out-of-domain request; the CLI maps this to exit code 1. */
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/* An internal exactness guarantee failed (e.g. a quantity that must be a
   Laurent polynomial came out with a nontrivial denominator); exit code 2. */
struct certification_error : std::runtime_error {
    explicit certification_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace quivinv
