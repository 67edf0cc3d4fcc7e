#include "fairvote/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace fairvote {

int worker_count() {
  if (const char* env = std::getenv("FAIRVOTE_THREADS")) {
    try {
      int requested = std::stoi(env);
      if (requested >= 1) return requested;
    } catch (const std::exception&) {
      // Unparseable value falls through to the hardware default.
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(
    std::uint64_t begin, std::uint64_t end, int parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
  if (begin >= end || parts < 1) return chunks;
  std::uint64_t total = end - begin;
  std::uint64_t per = total / parts;
  std::uint64_t extra = total % parts;
  std::uint64_t at = begin;
  for (int p = 0; p < parts && at < end; ++p) {
    std::uint64_t len = per + (static_cast<std::uint64_t>(p) < extra ? 1 : 0);
    if (len == 0) continue;
    chunks.emplace_back(at, at + len);
    at += len;
  }
  return chunks;
}

}  // namespace fairvote
