#ifndef LINRANK_RATIONAL_HPP
#define LINRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace linrank {

// Exact arithmetic everywhere: every coefficient, rank and multiplier is
// one of these.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts an optionally signed integer or "p/q" (q nonzero).
std::optional<Rational> parse_rational(std::string_view text);

std::optional<Integer> parse_integer(std::string_view text);

/// Least common multiple of all denominators (1 for an empty range).
template <class Range>
Integer common_denominator(const Range& values)
{
    Integer l = 1;
    for (const Rational& q : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

} // namespace linrank

#endif
