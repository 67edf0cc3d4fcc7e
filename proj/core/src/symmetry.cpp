#include "fairvote/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "fairvote/errors.hpp"

namespace fairvote {

Permutation identity_permutation(int n) {
  Permutation p{n, std::vector<int>(n)};
  std::iota(p.image.begin(), p.image.end(), 1);
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  detail::internal_check(outer.n == inner.n, "composing permutations of different sizes");
  Permutation p{outer.n, std::vector<int>(outer.n)};
  for (int i = 1; i <= outer.n; ++i) {
    p.image[i - 1] = outer.image[inner.image[i - 1] - 1];
  }
  return p;
}

Permutation inverse(const Permutation& perm) {
  Permutation p{perm.n, std::vector<int>(perm.n)};
  for (int i = 1; i <= perm.n; ++i) {
    p.image[perm.image[i - 1] - 1] = i;
  }
  return p;
}

bool is_permutation(const Permutation& p) {
  if (static_cast<int>(p.image.size()) != p.n) return false;
  std::vector<bool> hit(p.n, false);
  for (int v : p.image) {
    if (v < 1 || v > p.n || hit[v - 1]) return false;
    hit[v - 1] = true;
  }
  return true;
}

Mask apply_permutation(const Permutation& p, Mask m) {
  Mask out = 0;
  while (m) {
    int voter = std::countr_zero(m);
    out |= voter_bit(p.image[voter]);
    m &= m - 1;
  }
  return out;
}

Coalition apply_permutation(const Permutation& p, const Coalition& c) {
  detail::internal_check(p.n == c.n, "permutation/coalition size mismatch");
  return Coalition{apply_permutation(p, c.bits), c.n};
}

std::vector<int> intersection_profile(const std::vector<Coalition>& family,
                                      int voter) {
  std::vector<Mask> with;
  for (const auto& s : family) {
    if (s.contains(voter)) with.push_back(s.bits);
  }
  std::vector<int> profile;
  for (std::size_t a = 0; a < with.size(); ++a) {
    for (std::size_t b = a + 1; b < with.size(); ++b) {
      profile.push_back(std::popcount(with[a] & with[b]));
    }
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

bool is_symmetry(const VotingRule& rule, const Permutation& sigma) {
  if (sigma.n != rule.voters()) {
    throw std::invalid_argument("permutation/rule voter count mismatch");
  }
  if (!is_permutation(sigma)) {
    throw std::invalid_argument("image array is not a bijection");
  }
  auto mwcs = minimal_winning_coalitions(rule);
  std::unordered_set<Mask> antichain;
  antichain.reserve(mwcs.size() * 2);
  for (const auto& s : mwcs) antichain.insert(s.bits);
  // A bijection maps the finite antichain onto itself iff it maps into it.
  for (const auto& s : mwcs) {
    if (!antichain.count(apply_permutation(sigma, s.bits))) return false;
  }
  return true;
}

namespace {

// Relabeling-invariant fingerprint of one voter inside the MWC structure:
// how many sets of each size contain it, and the pairwise intersection
// profile of those sets. Mapping i to j is only possible when the
// fingerprints agree, which is exactly the non-equitability argument run in
// reverse.
struct VoterSignature {
  std::vector<int> degree_by_size;
  std::vector<int> profile;

  friend bool operator==(const VoterSignature& a, const VoterSignature& b) {
    return a.degree_by_size == b.degree_by_size && a.profile == b.profile;
  }
};

struct SymmetrySearch {
  int n;
  std::vector<Mask> mwcs;
  std::unordered_set<Mask> mwc_set;
  // Index of MWCs whose largest voter is d (0-based): exactly the sets that
  // become fully mapped once sigma(d+1) is chosen.
  std::vector<std::vector<std::size_t>> completed_at;
  std::vector<VoterSignature> signatures;

  std::vector<int> image;  // 0-based, -1 while unassigned
  std::vector<bool> used;

  explicit SymmetrySearch(const VotingRule& rule)
      : n(rule.voters()), completed_at(rule.voters()),
        image(rule.voters(), -1), used(rule.voters(), false) {
    auto antichain = minimal_winning_coalitions(rule);
    mwcs.reserve(antichain.size());
    for (const auto& s : antichain) mwcs.push_back(s.bits);
    mwc_set.reserve(mwcs.size() * 2);
    for (Mask m : mwcs) mwc_set.insert(m);
    for (std::size_t idx = 0; idx < mwcs.size(); ++idx) {
      if (mwcs[idx] == 0) continue;  // the empty set maps to itself
      int top = 63 - std::countl_zero(mwcs[idx]);
      completed_at[top].push_back(idx);
    }
    signatures.resize(n);
    for (int voter = 1; voter <= n; ++voter) {
      VoterSignature& sig = signatures[voter - 1];
      sig.degree_by_size.assign(n + 1, 0);
      for (Mask m : mwcs) {
        if (m & voter_bit(voter)) sig.degree_by_size[std::popcount(m)]++;
      }
      sig.profile = intersection_profile(antichain, voter);
    }
  }

  bool image_is_mwc(Mask m) const {
    Mask img = 0;
    while (m) {
      img |= Mask{1} << image[std::countr_zero(m)];
      m &= m - 1;
    }
    return mwc_set.count(img) != 0;
  }

  // Visits every symmetry extending the current partial assignment, trying
  // candidate images in ascending order. `emit` returns false to stop the
  // whole search.
  template <typename Emit>
  bool dfs(int depth, const std::vector<int>& forced, Emit&& emit) {
    if (depth == n) {
      Permutation p{n, std::vector<int>(n)};
      for (int v = 0; v < n; ++v) p.image[v] = image[v] + 1;
      return emit(std::move(p));
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (forced[depth] >= 0 && forced[depth] != w) continue;
      if (!(signatures[depth] == signatures[w])) continue;
      image[depth] = w;
      used[w] = true;
      bool keep_going = true;
      bool consistent = true;
      for (std::size_t idx : completed_at[depth]) {
        if (!image_is_mwc(mwcs[idx])) {
          consistent = false;
          break;
        }
      }
      if (consistent) keep_going = dfs(depth + 1, forced, emit);
      image[depth] = -1;
      used[w] = false;
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Permutation> automorphism_group(const VotingRule& rule) {
  if (rule.voters() > 10) {
    throw std::invalid_argument("automorphism_group: explicit listing capped at n <= 10");
  }
  SymmetrySearch search(rule);
  std::vector<Permutation> group;
  std::vector<int> forced(rule.voters(), -1);
  search.dfs(0, forced, [&](Permutation p) {
    group.push_back(std::move(p));
    return true;
  });
  // Candidates are tried in ascending order, so the list arrives sorted
  // lexicographically by image array.
  return group;
}

std::optional<Permutation> find_symmetry_mapping(const VotingRule& rule,
                                                 int from, int to) {
  const int n = rule.voters();
  if (n > 16) {
    throw std::invalid_argument("symmetry search capped at n <= 16");
  }
  if (from < 1 || from > n || to < 1 || to > n) {
    throw std::invalid_argument("voter id out of range");
  }
  SymmetrySearch search(rule);
  std::vector<int> forced(n, -1);
  forced[from - 1] = to - 1;
  std::optional<Permutation> found;
  search.dfs(0, forced, [&](Permutation p) {
    found = std::move(p);
    return false;  // first witness is enough
  });
  return found;
}

EquitabilityResult is_equitable(const VotingRule& rule) {
  const int n = rule.voters();
  if (n > 16) {
    throw std::invalid_argument("equitability check capped at n <= 16");
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      // Voters share an orbit iff some symmetry maps one to the other, so a
      // failed search splits them for good.
      if (auto sigma = find_symmetry_mapping(rule, i + 1, j + 1)) {
        for (int v = 0; v < n; ++v) unite(v, sigma->image[v] - 1);
      }
    }
  }

  EquitabilityResult result;
  std::vector<std::vector<int>> buckets(n);
  for (int v = 0; v < n; ++v) buckets[find(v)].push_back(v + 1);
  for (auto& bucket : buckets) {
    if (!bucket.empty()) result.orbits.push_back(std::move(bucket));
  }
  std::sort(result.orbits.begin(), result.orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  result.equitable = result.orbits.size() == 1;
  return result;
}

}  // namespace fairvote
