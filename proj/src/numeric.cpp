#include "disc/numeric.hpp"

#include <gmp.h>

#include "disc/errors.hpp"

namespace disc
{

Integer binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return Integer(0);
    }
    Integer out;
    mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::string to_string(const Rational& q)
{
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw PreconditionError("malformed rational: \"" + std::string(text) + "\"");
    }
    const Integer d{std::string(den)};
    if (d == 0) {
        throw PreconditionError("zero denominator: \"" + std::string(text) + "\"");
    }
    return Rational(Integer{std::string(num)}, d);
}

}  // namespace disc
