#pragma once

#include <stdexcept>
#include <string>

namespace hsm {

/// Thrown when an enumeration would exceed its configured budget. Carries
/// the offending size estimate so callers can report it.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::string estimate)
        : std::runtime_error(what), estimate_(std::move(estimate)) {}
    const std::string& estimate() const { return estimate_; }

private:
    std::string estimate_;
};

/// Closed forms cover d <= 2k only (for k >= 3); larger d needs the oracle.
class OutOfClosedFormRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace hsm
