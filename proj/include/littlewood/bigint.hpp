#ifndef LITTLEWOOD_BIGINT_HPP
#define LITTLEWOOD_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace littlewood {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const BigRat& v) { return v.sign(); }

} // namespace littlewood

#endif
