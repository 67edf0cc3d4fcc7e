#include "fairvote/counts.hpp"

#include <bit>
#include <thread>

#include "fairvote/errors.hpp"
#include "fairvote/numbers.hpp"
#include "fairvote/parallel.hpp"

namespace fairvote {

std::optional<CountMatrix::Mismatch> CountMatrix::first_row_mismatch() const {
  for (int k = 0; k <= n_; ++k) {
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        if (at(k, i) != at(k, j)) return Mismatch{i, j, k};
      }
    }
  }
  return std::nullopt;
}

namespace {

constexpr int kParallelThreshold = 20;  // below this a single sweep is instant

// Per-voter membership counts of a half family: |T_i|.
std::vector<std::uint64_t> half_family_degrees(const VotingRule& rule) {
  std::vector<std::uint64_t> degrees(rule.voters(), 0);
  for (const auto& s : rule.half_family()) {
    Mask rest = s.bits;
    while (rest) {
      degrees[std::countr_zero(rest)]++;
      rest &= rest - 1;
    }
  }
  return degrees;
}

CountMatrix winning_counts_half(const VotingRule& rule) {
  const int n = rule.voters();
  CountMatrix counts(n, CountKind::W);
  auto degrees = half_family_degrees(rule);
  for (int i = 1; i <= n; ++i) {
    counts.at(n / 2, i) = degrees[i - 1];
    for (int k = n / 2 + 1; k <= n; ++k) {
      counts.at(k, i) = binomial_u64(n - 1, k - 1);
    }
  }
  return counts;
}

std::pair<CountMatrix, CountMatrix> pivotal_counts_half(const VotingRule& rule) {
  const int n = rule.voters();
  const int m = n / 2;
  CountMatrix a(n, CountKind::A);
  CountMatrix b(n, CountKind::B);
  auto degrees = half_family_degrees(rule);
  const std::uint64_t family_size = rule.half_family().size();
  // A voter is pivotal only across the middle layer: for S of size m it must
  // be listed; for S of size m+1 the set without the voter must be unlisted.
  for (int i = 1; i <= n; ++i) {
    std::uint64_t deg = degrees[i - 1];
    b.at(m, i) = deg;
    b.at(m + 1, i) = binomial_u64(n - 1, m) - (family_size - deg);
    for (int k = 0; k <= n; ++k) {
      std::uint64_t next = (k + 1 <= n) ? b.at(k + 1, i) : 0;
      a.at(k, i) = b.at(k, i) + next;
    }
  }
  return {a, b};
}

// One [begin, end) sweep of the dense table accumulating W counts.
void accumulate_w(const BitTable& table, Mask begin, Mask end, CountMatrix& out) {
  for (Mask s = begin; s < end; ++s) {
    if (!table.test(s)) continue;
    int k = std::popcount(s);
    Mask rest = s;
    while (rest) {
      int voter = std::countr_zero(rest) + 1;
      out.at(k, voter)++;
      rest &= rest - 1;
    }
  }
}

void accumulate_ab(const BitTable& table, int n, Mask begin, Mask end,
                   CountMatrix& a, CountMatrix& b) {
  for (Mask s = begin; s < end; ++s) {
    int k = std::popcount(s);
    for (int voter = 1; voter <= n; ++voter) {
      Mask bit = voter_bit(voter);
      bool with = table.test(s | bit);
      bool without = table.test(s & ~bit);
      if (with && !without) {
        a.at(k, voter)++;
        if (s & bit) b.at(k, voter)++;
      }
    }
  }
}

void merge(CountMatrix& into, const CountMatrix& part, int n) {
  for (int k = 0; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) into.at(k, i) += part.at(k, i);
  }
}

}  // namespace

CountMatrix winning_counts(const VotingRule& rule) {
  if (rule.repr() == VotingRule::Repr::HalfFamily) return winning_counts_half(rule);
  const int n = rule.voters();
  VotingRule dense = rule.materialized();
  const BitTable& table = dense.table();
  CountMatrix counts(n, CountKind::W);

  int workers = worker_count();
  if (n < kParallelThreshold || workers <= 1) {
    accumulate_w(table, 0, table.universe(), counts);
    return counts;
  }
  auto chunks = split_range(0, table.universe(), workers);
  std::vector<CountMatrix> parts(chunks.size(), CountMatrix(n, CountKind::W));
  std::vector<std::thread> threads;
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    threads.emplace_back([&, c] {
      accumulate_w(table, chunks[c].first, chunks[c].second, parts[c]);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& part : parts) merge(counts, part, n);
  return counts;
}

std::pair<CountMatrix, CountMatrix> pivotal_counts(const VotingRule& rule) {
  if (rule.repr() == VotingRule::Repr::HalfFamily) return pivotal_counts_half(rule);
  const int n = rule.voters();
  VotingRule dense = rule.materialized();
  const BitTable& table = dense.table();
  CountMatrix a(n, CountKind::A);
  CountMatrix b(n, CountKind::B);

  int workers = worker_count();
  if (n < kParallelThreshold || workers <= 1) {
    accumulate_ab(table, n, 0, table.universe(), a, b);
    return {a, b};
  }
  auto chunks = split_range(0, table.universe(), workers);
  std::vector<CountMatrix> parts_a(chunks.size(), CountMatrix(n, CountKind::A));
  std::vector<CountMatrix> parts_b(chunks.size(), CountMatrix(n, CountKind::B));
  std::vector<std::thread> threads;
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    threads.emplace_back([&, c] {
      accumulate_ab(table, n, chunks[c].first, chunks[c].second, parts_a[c], parts_b[c]);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& part : parts_a) merge(a, part, n);
  for (const auto& part : parts_b) merge(b, part, n);
  return {a, b};
}

std::vector<std::uint64_t> total_winning_by_size(const VotingRule& rule) {
  const int n = rule.voters();
  std::vector<std::uint64_t> totals(n + 1, 0);
  if (rule.repr() == VotingRule::Repr::HalfFamily) {
    totals[n / 2] = rule.half_family().size();
    for (int k = n / 2 + 1; k <= n; ++k) totals[k] = binomial_u64(n, k);
    return totals;
  }
  VotingRule dense = rule.materialized();
  const BitTable& table = dense.table();
  const std::uint64_t universe = table.universe();
  for (Mask s = 0; s < universe; ++s) {
    if (table.test(s)) totals[std::popcount(s)]++;
  }
  return totals;
}

}  // namespace fairvote
