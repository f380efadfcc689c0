#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace degree_forge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
BigInt binom(std::int64_t n, std::int64_t k);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v);

}  // namespace degree_forge
