#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace staralg {

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluation of a rational function at one of its poles.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operand of a quotient-algebra operation is not in the normalizer.
struct NotInNormalizer : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeExceedsSlice : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// The g_k(p) of an action matrix left the module V; h is not a normalizer element.
struct DegreeOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace staralg
