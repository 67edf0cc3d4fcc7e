#ifndef FAIRVOTE_BIT_TABLE_HPP
#define FAIRVOTE_BIT_TABLE_HPP

#include <cstdint>
#include <vector>

#include "fairvote/coalition.hpp"

namespace fairvote {

// 2^n-bit membership table over all voter subsets. Capped at n <= 24 so a
// full table stays around 2 MiB.
class BitTable {
 public:
  static constexpr int kMaxVoters = 24;

  explicit BitTable(int n);

  int voters() const { return n_; }
  std::uint64_t universe() const { return std::uint64_t{1} << n_; }

  bool test(Mask m) const {
    return (words_[m >> 6] >> (m & 63)) & 1;
  }
  void set(Mask m) { words_[m >> 6] |= std::uint64_t{1} << (m & 63); }
  void reset(Mask m) { words_[m >> 6] &= ~(std::uint64_t{1} << (m & 63)); }

  // Number of set bits.
  std::uint64_t count() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitTable& a, const BitTable& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace fairvote

#endif  // FAIRVOTE_BIT_TABLE_HPP
