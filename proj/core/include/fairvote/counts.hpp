#ifndef FAIRVOTE_COUNTS_HPP
#define FAIRVOTE_COUNTS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fairvote/rule.hpp"

namespace fairvote {

enum class CountKind { W, A, B };

// Per-voter, per-size coalition counts, indexed [k][i] with k in 0..n and
// voter i in 1..n:
//   W: winning coalitions of size k containing i;
//   B: winning coalitions of size k containing i whose outcome flips when i
//      leaves;
//   A: coalitions S of size k (i in S or not) with f(S+i)=1 and f(S-i)=0.
class CountMatrix {
 public:
  CountMatrix(int n, CountKind kind)
      : n_(n), kind_(kind), data_(static_cast<std::size_t>(n + 1) * n, 0) {}

  int voters() const { return n_; }
  CountKind kind() const { return kind_; }

  std::uint64_t at(int k, int voter) const {
    return data_[static_cast<std::size_t>(k) * n_ + (voter - 1)];
  }
  std::uint64_t& at(int k, int voter) {
    return data_[static_cast<std::size_t>(k) * n_ + (voter - 1)];
  }

  // Smallest (k, i, j) with differing counts for voters i < j, if any.
  struct Mismatch {
    int i, j, k;
  };
  std::optional<Mismatch> first_row_mismatch() const;

  friend bool operator==(const CountMatrix& a, const CountMatrix& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.data_ == b.data_;
  }

 private:
  int n_;
  CountKind kind_;
  std::vector<std::uint64_t> data_;
};

// W-matrix. Table-backed rules take a 2^n sweep (n <= 24); half-family rules
// are counted analytically: 0 below the middle layer, C(n-1, k-1) above it,
// and the family membership count |T_i| on it.
CountMatrix winning_counts(const VotingRule& rule);

// {A, B}. Same split: exhaustive per-subset evaluation for table-backed
// rules, closed-form middle-layer counts for half families.
std::pair<CountMatrix, CountMatrix> pivotal_counts(const VotingRule& rule);

// Total number of winning coalitions per size, indexed by k in 0..n.
std::vector<std::uint64_t> total_winning_by_size(const VotingRule& rule);

}  // namespace fairvote

#endif  // FAIRVOTE_COUNTS_HPP
