#pragma once

#include <stdexcept>
#include <string>

namespace schwinger {

// Invalid user input: bad config values, malformed bitstrings, out-of-range
// indices. The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed: fit did not converge, normal equations
// singular, degenerate ground level. The CLI maps this to exit code 2.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Every sampled shot fell outside the physical charge sector. Kept distinct
// from a generic numerical failure so callers can tell "post-selection has
// nothing left" apart from "the math broke".
class empty_post_selection : public numerical_error {
public:
    explicit empty_post_selection(const std::string& what) : numerical_error(what) {}
};

}  // namespace schwinger
