#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace anosov {

// All ring/matrix arithmetic in this library is exact. Int is an
// arbitrary-precision integer, Rat its fraction field.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

inline double to_double(const Int& a) { return a.convert_to<double>(); }
inline double to_double(const Rat& a) { return a.convert_to<double>(); }

} // namespace anosov
