#pragma once

#include <stdexcept>
#include <string>

namespace lattes {

// Mixing elements from the two supported rings (or their fields).
class RingMismatchError : public std::invalid_argument {
public:
    explicit RingMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Zero where an invertible or nonzero value is required.
class ZeroInputError : public std::invalid_argument {
public:
    explicit ZeroInputError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Affine coordinates that do not satisfy the curve equation.
class NotOnCurveError : public std::invalid_argument {
public:
    explicit NotOnCurveError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Singular curve, or a curve shape incompatible with the requested ring action.
class CurveError : public std::invalid_argument {
public:
    explicit CurveError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Malformed textual input (ring elements, rational functions, points).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what)
        : std::invalid_argument(what) {}
};

// A symbolic operation would produce a rational map whose degree exceeds the
// configured ceiling.  `attempted` is the degree the operation would have
// reached (saturated to LONG_MAX if it overflows a long).
class DegreeBudgetExceeded : public std::runtime_error {
public:
    DegreeBudgetExceeded(long attempted, long limit)
        : std::runtime_error("degree budget exceeded: attempted degree " +
                             std::to_string(attempted) + " > limit " +
                             std::to_string(limit)),
          attempted_(attempted), limit_(limit) {}

    long attempted() const { return attempted_; }
    long limit() const { return limit_; }

private:
    long attempted_;
    long limit_;
};

}  // namespace lattes
