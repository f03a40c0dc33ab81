#pragma once

#include <stdexcept>
#include <string>

namespace k4frac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rational was built or parsed with denominator zero, or an objective was
// evaluated at a point where a denominator vanishes (off-domain evaluation).
struct ZeroDenominator : Error {
    using Error::Error;
};

// An intermediate common neighborhood N(v1..vi) came out empty while forming
// an ordered-clique weight; signals the delta(G) > 4n/5 precondition is violated.
struct EmptyNeighborhood : Error {
    using Error::Error;
};

// reduce_point called for a program whose chain step is not substitution-based.
struct NoSubstitution : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace k4frac
