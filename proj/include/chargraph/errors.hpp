#pragma once

#include <stdexcept>
#include <string>

namespace chargraph {

// Thrown when an input exceeds a hard size bound (solver vertex caps,
// 128-bit arithmetic range, generator ranges). Distinct from
// std::domain_error, which is used for structurally invalid inputs.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the file loaders on malformed input; the message carries the
// offending line and column when they are known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chargraph
