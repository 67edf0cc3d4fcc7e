#include "fairvote/numbers.hpp"

#include <limits>
#include <stdexcept>

namespace fairvote {

BigInt binomial(unsigned m, unsigned r) {
  if (r > m) return 0;
  if (r > m - r) r = m - r;
  BigInt result = 1;
  for (unsigned i = 1; i <= r; ++i) {
    result *= m + 1 - i;
    result /= i;  // exact at every step
  }
  return result;
}

std::uint64_t binomial_u64(unsigned m, unsigned r) {
  BigInt value = binomial(m, r);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("binomial coefficient does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

int lucas_parity(std::uint64_t m, std::uint64_t r) {
  if (r > m) throw std::invalid_argument("lucas_parity: r > m");
  return ((r & (m - r)) == 0) ? 1 : 0;
}

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

bool central_binom_div4(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("central_binom_div4: m must be >= 1");
  return !is_power_of_two(m);
}

std::string to_fraction_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace fairvote
