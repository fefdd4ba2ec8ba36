#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace sl2green {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix over Q.
using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<long long>>;

RationalMatrix to_rational(const IntMatrix& m);
RationalMatrix identity_rational(std::size_t n);
RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y);
std::vector<Rational> multiply(const RationalMatrix& x, const std::vector<Rational>& v);
/// Gauss-Jordan inverse; throws InternalError when singular.
RationalMatrix inverse(const RationalMatrix& m);

bool is_integer(const Rational& q);
/// "n" or "n/d".
std::string to_string(const Rational& q);

}  // namespace sl2green
