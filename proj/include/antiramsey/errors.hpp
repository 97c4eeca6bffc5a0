#pragma once

#include <stdexcept>
#include <string>

namespace antiramsey {

// Malformed arguments: bad edge, out-of-range vertex, infeasible parameters.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Query outside the range any closed-form result covers.
struct not_covered : std::runtime_error {
    explicit not_covered(const std::string& what) : std::runtime_error(what) {}
};

// Instance too large for the configured budget or hard cap.
struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

// A claimed rainbow-free coloring turned out to contain a rainbow copy.
// The refuting witness is serialized into the message by the caller-facing API;
// see solver::ar_lower_certificate.
struct certificate_refuted : std::runtime_error {
    explicit certificate_refuted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace antiramsey
