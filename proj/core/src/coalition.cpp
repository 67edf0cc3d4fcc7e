#include "fairvote/coalition.hpp"

#include <stdexcept>

namespace fairvote {

Coalition coalition_from_ids(const std::vector<int>& ids, int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("voter count must be in 1..64");
  Coalition c{0, n};
  for (int id : ids) {
    if (id < 1 || id > n) {
      throw std::invalid_argument("voter id " + std::to_string(id) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (c.contains(id)) {
      throw std::invalid_argument("duplicate voter id " + std::to_string(id));
    }
    c.bits |= voter_bit(id);
  }
  return c;
}

std::vector<int> coalition_ids(const Coalition& c) {
  std::vector<int> ids;
  ids.reserve(c.size());
  for (int id = 1; id <= c.n; ++id) {
    if (c.contains(id)) ids.push_back(id);
  }
  return ids;
}

std::string to_string(const Coalition& c) {
  std::string out = "{";
  bool first = true;
  for (int id : coalition_ids(c)) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace fairvote
