#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linspace {

enum class ValidationErrorKind {
    TooFewPoints,
    PointOutOfRange,
    RepeatedPoint,
    LineEqualsWholeSet,
    PairUncovered,
    PairMultiplyCovered,
    PairCoverageNotLambda,
    DegreeNotAboveLambda,
};

std::string_view to_string(ValidationErrorKind kind);

// Payload of a rejected input. Which fields are meaningful depends on kind:
//   PointOutOfRange / RepeatedPoint   line, x
//   LineEqualsWholeSet                line
//   PairUncovered                     x, y
//   PairMultiplyCovered               x, y, line, other_line
//   PairCoverageNotLambda             x, y, count
//   DegreeNotAboveLambda              x
struct ValidationDetail {
    ValidationErrorKind kind = ValidationErrorKind::TooFewPoints;
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t line = 0;
    std::size_t other_line = 0;
    std::size_t count = 0;
};

/// The input is not a linear space (or not a lambda-design).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationDetail detail);

    ValidationErrorKind kind() const noexcept { return detail_.kind; }
    const ValidationDetail& detail() const noexcept { return detail_; }

private:
    ValidationDetail detail_;
};

/// A theorem-level property failed on a validated input. Always a library bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Throws InvariantViolation with `what` when `condition` is false.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw InvariantViolation(what);
}

}  // namespace linspace
