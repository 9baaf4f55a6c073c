#pragma once

#include <stdexcept>
#include <string>

namespace volscale {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameters, incompatible inputs, malformed configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// Data that cannot be processed: degenerate, too short, missing.
struct DataError : Error {
    using Error::Error;
};

} // namespace volscale
