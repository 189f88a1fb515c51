#include "wedgekit/combinadics.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace wedgekit {

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                      "): requires 0 <= k <= n");
  }
  if (k > n - k) k = n - k;
  // Multiplicative form; each division is exact. 128-bit intermediates catch
  // overflow past the uint64 count range.
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<unsigned>(n - k + i);
    r /= static_cast<unsigned>(i);
    if (r > std::numeric_limits<Count>::max()) {
      throw CapacityError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds the 64-bit count range");
    }
  }
  return static_cast<Count>(r);
}

IndexSet::IndexSet(std::vector<int> one_based, int ambient) {
  const int k = static_cast<int>(one_based.size());
  if (ambient < 1) throw DomainError("IndexSet: ambient dimension must be >= 1");
  if (k < 1 || k > ambient) {
    throw DomainError("IndexSet: requires 1 <= k <= n, got k = " + std::to_string(k) +
                      ", n = " + std::to_string(ambient));
  }
  int prev = 0;
  for (int j = 0; j < k; ++j) {
    const int c = one_based[static_cast<size_t>(j)];
    if (c < 1 || c > ambient) {
      throw DomainError("IndexSet: index " + std::to_string(c) + " outside 1.." +
                        std::to_string(ambient));
    }
    if (c <= prev) {
      throw DomainError("IndexSet: indices must be strictly increasing");
    }
    prev = c;
    one_based[static_cast<size_t>(j)] = c - 1;
  }
  idx_ = std::move(one_based);
  ambient_ = ambient;
}

IndexSet IndexSet::from_zero_based(std::vector<int> zero_based, int ambient) {
  for (int& c : zero_based) ++c;
  return IndexSet(std::move(zero_based), ambient);
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  if (ambient_ <= 9) {
    for (int c : idx_) os << c + 1;
  } else {
    os << '{';
    for (size_t j = 0; j < idx_.size(); ++j) {
      if (j > 0) os << ',';
      os << idx_[j] + 1;
    }
    os << '}';
  }
  return os.str();
}

std::vector<IndexSet> enumerate_subsets(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("enumerate_subsets(" + std::to_string(n) + ", " + std::to_string(k) +
                      "): requires 1 <= k <= n");
  }
  const Count total = binomial(n, k);
  std::vector<IndexSet> out;
  out.reserve(static_cast<size_t>(total));

  std::vector<int> cur(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) cur[static_cast<size_t>(j)] = j;
  while (true) {
    out.push_back(IndexSet::from_zero_based(cur, n));
    // Advance to the lexicographic successor.
    int j = k - 1;
    while (j >= 0 && cur[static_cast<size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++cur[static_cast<size_t>(j)];
    for (int t = j + 1; t < k; ++t) {
      cur[static_cast<size_t>(t)] = cur[static_cast<size_t>(t - 1)] + 1;
    }
  }
  return out;
}

Count rank(const IndexSet& s) {
  const int n = s.ambient();
  const int k = s.size();
  // Count the subsets that precede s: those agreeing on the first j entries
  // and smaller at position j.
  Count before = 0;
  int prev = -1;
  for (int j = 0; j < k; ++j) {
    const int c = s.zero_based(j);
    for (int i = prev + 1; i < c; ++i) {
      before += binomial(n - 1 - i, k - 1 - j);
    }
    prev = c;
  }
  return before + 1;
}

IndexSet unrank(Count p, int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("unrank: requires 1 <= k <= n");
  }
  const Count total = binomial(n, k);
  if (p < 1 || p > total) {
    throw DomainError("unrank: position " + std::to_string(p) + " outside 1.." +
                      std::to_string(total));
  }
  Count rem = p - 1;
  std::vector<int> out(static_cast<size_t>(k));
  int c = 0;
  for (int j = 0; j < k; ++j) {
    while (true) {
      const Count cnt = binomial(n - 1 - c, k - 1 - j);
      if (rem < cnt) break;
      rem -= cnt;
      ++c;
    }
    out[static_cast<size_t>(j)] = c;
    ++c;
  }
  return IndexSet::from_zero_based(std::move(out), n);
}

IndexSet complement(const IndexSet& s) {
  const int n = s.ambient();
  if (s.size() >= n) throw DomainError("complement: requires k < n");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n - s.size()));
  const std::vector<int>& in = s.zero_based_indices();
  size_t j = 0;
  for (int i = 0; i < n; ++i) {
    if (j < in.size() && in[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return IndexSet::from_zero_based(std::move(out), n);
}

}  // namespace wedgekit
