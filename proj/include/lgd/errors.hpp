#pragma once

#include <stdexcept>
#include <string>

namespace lgd {

/// Input data failed validation (malformed file, inconsistent series,
/// values the requested method cannot handle). Maps to CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation hit a degenerate configuration (singular design matrix,
/// zero variance, collapsed correlation). Maps to CLI exit code 4.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lgd
