#ifndef PFL_NUMBERS_HPP
#define PFL_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace pfl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline std::size_t bit_size(const Int& a)
{
    return a.is_zero() ? 0 : boost::multiprecision::msb(abs_int(a)) + 1;
}

}  // namespace pfl

#endif
