#pragma once

#include <stdexcept>
#include <string>

namespace hodgepair {

/// Base error for all precondition and input failures in this library.
/// Diagnostic outcomes (failed verdicts, broken chain conditions, reported
/// ill-definedness) are ordinary return values, never exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hodgepair
