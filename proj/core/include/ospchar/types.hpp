#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace ospchar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an exact polynomial division fails to terminate or leaves a
// remainder.  For the quotients computed in this library that is always an
// internal inconsistency, never a user error.
struct DivisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ospchar
