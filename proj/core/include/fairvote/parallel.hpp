#ifndef FAIRVOTE_PARALLEL_HPP
#define FAIRVOTE_PARALLEL_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace fairvote {

// Worker cap: FAIRVOTE_THREADS when set (clamped to >= 1), otherwise the
// hardware parallelism.
int worker_count();

// [begin, end) split into at most `parts` contiguous chunks.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(
    std::uint64_t begin, std::uint64_t end, int parts);

}  // namespace fairvote

#endif  // FAIRVOTE_PARALLEL_HPP
