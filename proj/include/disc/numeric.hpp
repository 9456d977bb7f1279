#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace disc
{

// Expression templates are disabled so the types compose cleanly with Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// 80 significant decimal digits; used only where a transcendental term enters.
using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<80>,
                                              boost::multiprecision::et_off>;

/// Exact binomial coefficient C(n, k); zero when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; accepts "p", "-p", "p/q". Throws PreconditionError.
Rational parse_rational(std::string_view text);

inline Decimal to_decimal(const Rational& q)
{
    return Decimal(Integer(numerator(q))) / Decimal(Integer(denominator(q)));
}

}  // namespace disc
