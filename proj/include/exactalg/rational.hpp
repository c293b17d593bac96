#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace exactalg {

// Arbitrary-precision rational scalar. Always stored in lowest terms with a
// positive denominator; equality is exact.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace exactalg
