#pragma once

#include <stdexcept>

namespace tableau_lab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed structure: column lengths not weakly decreasing, non-positive
// entries, ragged rows. Distinct from a well-shaped filling that merely
// fails the semistandard test (that one classifies as Invalid).
struct StructureError : Error { using Error::Error; };

// Value outside its ground set, shape does not fit the ambient rectangle,
// width exceeds the bound.
struct DomainError : Error { using Error::Error; };

// Skew-weight parameter outside the admissible interval.
struct RangeError : Error { using Error::Error; };

// An algorithm-step precondition failed: wrong content, corrupt skew
// region, nonstandard tableau where a standard one is required.
struct ValidationError : Error { using Error::Error; };

// Tableau pair outside the bijection's image; the permutation is not a
// member of the counted class.
struct MembershipError : Error { using Error::Error; };

// Brute-force request exceeds the configured cap.
struct ResourceError : Error { using Error::Error; };

// Bad serialized input (JSON file or CLI text).
struct ParseError : Error { using Error::Error; };

}  // namespace tableau_lab
