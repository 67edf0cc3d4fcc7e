#ifndef FAIRVOTE_COALITION_HPP
#define FAIRVOTE_COALITION_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace fairvote {

// Voter subsets are n-bit masks; voter i (1-based) owns bit i-1.
using Mask = std::uint64_t;

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline Mask voter_bit(int id) { return Mask{1} << (id - 1); }

struct Coalition {
  Mask bits = 0;
  int n = 0;

  int size() const { return std::popcount(bits); }
  bool contains(int id) const { return (bits & voter_bit(id)) != 0; }
  bool subset_of(const Coalition& other) const {
    return (bits & other.bits) == bits;
  }
  Coalition complement() const { return Coalition{bits ^ full_mask(n), n}; }

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.n == b.n && a.bits == b.bits;
  }
  friend bool operator<(const Coalition& a, const Coalition& b) {
    return a.bits < b.bits;
  }
};

// Builds a coalition from 1-based voter ids. Throws std::invalid_argument on
// an id outside 1..n or a duplicate id.
Coalition coalition_from_ids(const std::vector<int>& ids, int n);

// Sorted 1-based ids.
std::vector<int> coalition_ids(const Coalition& c);

// "{1,4,5}" (or "{}" for the empty coalition); for diagnostics.
std::string to_string(const Coalition& c);

// Next mask with the same popcount (Gosper); the caller stops once the
// result exceeds its universe. Undefined for m == 0.
inline Mask next_same_popcount(Mask m) {
  Mask low = m & (~m + 1);
  Mask ripple = m + low;
  return (((m ^ ripple) >> 2) / low) | ripple;
}

// Enumerates all size-k subsets of an n-element universe in ascending mask
// order.
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  Mask m = full_mask(k);
  const Mask highest = full_mask(n) ^ full_mask(n - k);
  for (;;) {
    fn(m);
    if (m == highest) break;
    m = next_same_popcount(m);
  }
}

}  // namespace fairvote

#endif  // FAIRVOTE_COALITION_HPP
