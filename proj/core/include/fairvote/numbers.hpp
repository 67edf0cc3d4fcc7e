#ifndef FAIRVOTE_NUMBERS_HPP
#define FAIRVOTE_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fairvote {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; zero when r > m.
BigInt binomial(unsigned m, unsigned r);

// Binomial coefficient as uint64; throws std::overflow_error if it does not
// fit. Everything with m <= 64 fits.
std::uint64_t binomial_u64(unsigned m, unsigned r);

// C(m, r) mod 2, computed from the digit-domination form: C(m, r) is odd
// iff the binary digits of r are dominated by those of m, iff r & (m-r) == 0.
// Throws std::invalid_argument when r > m.
int lucas_parity(std::uint64_t m, std::uint64_t r);

bool is_power_of_two(std::uint64_t v);

// True iff C(2m, m) is divisible by 4, iff m is not a power of two.
// Throws std::invalid_argument when m == 0.
bool central_binom_div4(std::uint64_t m);

// "p/q" in lowest terms with q > 0; the denominator is always printed,
// so integers render as "1/1", "0/1".
std::string to_fraction_string(const Rational& value);

}  // namespace fairvote

#endif  // FAIRVOTE_NUMBERS_HPP
