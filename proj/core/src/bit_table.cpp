#include "fairvote/bit_table.hpp"

#include <bit>
#include <stdexcept>

namespace fairvote {

BitTable::BitTable(int n) : n_(n) {
  if (n < 1 || n > kMaxVoters) {
    throw std::invalid_argument("membership table supports 1..24 voters");
  }
  std::size_t words = (std::size_t{1} << n) / 64;
  words_.assign(words ? words : 1, 0);
}

std::uint64_t BitTable::count() const {
  if (n_ < 6) {
    // Only the low 2^n bits are meaningful.
    return std::popcount(words_[0] & full_mask(1 << n_));
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

}  // namespace fairvote
