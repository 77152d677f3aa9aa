#pragma once

#include <stdexcept>
#include <string>

namespace salpeter {

/// Profile support does not fit inside the periodic box with a safe margin.
class domain_too_small : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An adaptive quadrature failed to reach the requested tolerance.
/// Carries both the requested and the achieved error estimate so callers
/// can report the shortfall instead of silently accepting a bad value.
class accuracy_failure : public std::runtime_error {
public:
    accuracy_failure(const std::string& context, double requested, double achieved)
        : std::runtime_error(context + ": requested tolerance " + std::to_string(requested) +
                             ", achieved only " + std::to_string(achieved)),
          requested_(requested),
          achieved_(achieved) {}

    double requested() const noexcept { return requested_; }
    double achieved() const noexcept { return achieved_; }

private:
    double requested_;
    double achieved_;
};

/// A decay-bound scan maximised at the edge of the scanned window, so the
/// reported constant is a lower bound rather than a verified supremum.
class bound_not_verified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace salpeter
