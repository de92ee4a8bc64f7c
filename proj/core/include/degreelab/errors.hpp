#ifndef DEGREELAB_ERRORS_HPP
#define DEGREELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degreelab {

/// Bad descriptor, invalid parameter, or malformed input file.
/// CLI exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mesh is too coarse for the requested computation, or a quadrature
/// failed to converge to an admissible value (e.g. non-integral degree).
/// CLI exit code 3.
struct resolution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree quadrature landed too far from an integer.  Carries the raw
/// value so callers can inspect how bad it was.
struct non_integral_degree_error : resolution_error {
    non_integral_degree_error(const std::string& what, double raw_value)
        : resolution_error(what), raw(raw_value) {}
    double raw;
};

/// An internal cross-check failed: a chain complex with boundary-of-boundary
/// nonzero, mismatched Euler characteristics, NaN in a sampled field, ...
/// CLI exit code 4.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A pointwise evaluation produced a non-finite value or was called
/// outside its domain.
struct evaluation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A differential was requested on the measure-zero locus where the map
/// is only Lipschitz (cap boundary, collapse rim, chart poles).
struct singular_locus_error : evaluation_error {
    using evaluation_error::evaluation_error;
};

/// The chosen target value for preimage counting is not usable
/// (a preimage sits on the non-smooth locus); pick another value.
struct regular_value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace degreelab

#endif
