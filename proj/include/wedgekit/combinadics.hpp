#pragma once

#include <string>
#include <vector>

#include "wedgekit/error.hpp"
#include "wedgekit/types.hpp"

namespace wedgekit {

/// C(n, k) in overflow-checked 64-bit arithmetic.
/// k > n or negative arguments raise DomainError; results or intermediates
/// past the uint64 range raise CapacityError.
Count binomial(int n, int k);

/// A strictly increasing k-subset of the columns {1,...,n}.
///
/// Indices are stored 0-based; the public API and display are 1-based, so
/// IndexSet({2,3,4}, 5) is the subset written 234.
class IndexSet {
 public:
  /// Construct from 1-based column indices.
  IndexSet(std::vector<int> one_based, int ambient);

  static IndexSet from_zero_based(std::vector<int> zero_based, int ambient);

  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(idx_.size()); }

  int one_based(int j) const { return idx_[static_cast<size_t>(j)] + 1; }
  int zero_based(int j) const { return idx_[static_cast<size_t>(j)]; }
  const std::vector<int>& zero_based_indices() const { return idx_; }

  /// "234" when n <= 9, "{2,3,11}" otherwise.
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  IndexSet() = default;

  std::vector<int> idx_;  // 0-based, strictly increasing
  int ambient_ = 0;
};

/// All C(n, k) subsets in ascending lexicographic order, 1 <= k <= n.
std::vector<IndexSet> enumerate_subsets(int n, int k);

/// 1-based lexicographic position of s among the k-subsets of its ambient
/// set, computed in closed form from binomial counts.
Count rank(const IndexSet& s);

/// Inverse of rank: the subset at position p (1-based), 1 <= p <= C(n, k).
IndexSet unrank(Count p, int n, int k);

/// The sorted (n-k)-subset {1,...,n} \ s; requires k < n.
IndexSet complement(const IndexSet& s);

}  // namespace wedgekit
