#pragma once

#include <stdexcept>
#include <string>

namespace cubic27 {

// Base class for all library errors. Subclasses carry the contract name of
// the violated precondition so tests can catch them selectively.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cubic27
