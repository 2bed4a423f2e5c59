#pragma once

#include <stdexcept>
#include <string>

namespace allclear {

// Invalid configuration: bad flags, bad hyperparameters, overlapping
// train/test partitions. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data: CSV schema violations, duplicate
// ids, step gaps, unknown labels. CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace allclear
