#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "urns/exact.hpp"

namespace urns {

/// Binomial coefficient C(a, b) with the zero-outside-range convention:
/// the result is 0 whenever a < 0, b < 0 or b > a, which makes truncated
/// and untruncated alternating sums agree downstream.
///
/// Evaluated as a running product with interleaved exact division, so no
/// intermediate ever exceeds the final result.
inline natural binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  const long long k = std::min(b, a - b);
  bigint result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= a - k + i;
    result /= i;  // any i consecutive integers contain a multiple of i
  }
  return natural(std::move(result));
}

/// Memoizes half-rows of Pascal's triangle (the rest follows by symmetry).
/// Each row is built multiplicatively on first touch, after which lookups
/// are O(1). Results are identical to binomial() for all arguments.
class binomial_cache {
 public:
  natural operator()(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    return row_for(a)[static_cast<std::size_t>(b)];
  }

 private:
  const std::vector<natural>& row_for(long long a) {
    auto it = rows_.find(a);
    if (it == rows_.end()) {
      std::vector<natural> row(static_cast<std::size_t>(a / 2) + 1);
      bigint v = 1;
      row[0] = 1;
      for (long long b = 1; b <= a / 2; ++b) {
        v *= a - b + 1;
        v /= b;
        row[static_cast<std::size_t>(b)] = natural(v);
      }
      it = rows_.emplace(a, std::move(row)).first;
    }
    return it->second;
  }

  std::unordered_map<long long, std::vector<natural>> rows_;
};

/// Cached variant of binomial(). The memo is confined to the calling
/// thread, so concurrent sweeps never contend and observable results
/// match the uncached function exactly.
inline natural binomial_cached(long long a, long long b) {
  thread_local binomial_cache cache;
  return cache(a, b);
}

}  // namespace urns
