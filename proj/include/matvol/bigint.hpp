#ifndef MATVOL_BIGINT_HPP
#define MATVOL_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace matvol {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace matvol

#endif  // MATVOL_BIGINT_HPP
