#pragma once

#include <stdexcept>
#include <string>

namespace epimine {

/// Unusable configuration or command line. The CLI exits 1 on these.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Unusable input data (log files, run files, dates, episode text). The
/// CLI exits 2 on these.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace epimine
