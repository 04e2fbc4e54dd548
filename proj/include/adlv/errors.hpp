#pragma once

#include <stdexcept>
#include <string>

namespace adlv {

// A computation needed a coefficient beyond the tracked precision window.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Basis matrix with (certified) zero determinant.
struct SingularBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// vertex_of_departure / gamma galleries are undefined for alcoves inside the
// reference subcomplex.
struct AlcoveInsideSubcomplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyADLV : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chart coordinate whose first-alcove projection lands in the excluded set V.
struct CoordinateExcluded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedSubgroup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCharacter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CLI / RunConfig validation failures (exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace adlv
