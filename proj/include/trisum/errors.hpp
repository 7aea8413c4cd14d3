#ifndef TRISUM_ERRORS_HPP
#define TRISUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trisum {

// Requested a series inverse or logarithm of a series whose constant term
// does not permit one over the integers.
struct NonUnitConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// A lookup asked a precomputed table for an entry beyond its bounds.
struct InsufficientTable : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// An exact computation that must produce an integer did not. Always a bug,
// never a valid outcome.
struct NonIntegerResult : std::logic_error {
    using std::logic_error::logic_error;
};

// Verification was requested for a check name nobody defines.
struct UnknownCheck : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace trisum

#endif
