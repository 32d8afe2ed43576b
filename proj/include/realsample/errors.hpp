#ifndef REALSAMPLE_ERRORS_HPP
#define REALSAMPLE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realsample {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Ideal is not zero-dimensional where a finite solution set was required.
class NotZeroDimensional : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Random choices kept landing in a degenerate locus; the retry budget ran out.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Symptoms indicate the radical/smooth assumptions on the input do not hold.
class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace realsample

#endif
