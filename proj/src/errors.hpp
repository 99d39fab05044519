#ifndef UNITROOT_ERRORS_HPP
#define UNITROOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unitroot {

// Invalid job configuration (bad prime, level, route name, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tracked p-adic precision dropped to the point where a result would be
// meaningless. Raised instead of returning garbage.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A consistency check that should hold for every valid input failed.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace unitroot

#endif
