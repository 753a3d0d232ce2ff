#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "urns/exact.hpp"
#include "urns/problem.hpp"

// Ground-truth machinery. Everything here counts or lists distributions
// directly, without touching the closed forms it is used to validate, so
// this header deliberately depends on exact.hpp and problem.hpp only.

namespace urns {

/// Raised when an oracle would need a table beyond the configured ceiling.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One explicit occupancy assignment (X1..Xn).
using composition = std::vector<long long>;

/// Table ceiling for the oracles, in cells. Overridable through the
/// CAPACITY_URNS_DP_CELL_LIMIT environment variable.
inline std::uint64_t dp_cell_limit() {
  if (const char* env = std::getenv("CAPACITY_URNS_DP_CELL_LIMIT")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) return parsed;
  }
  return 100'000'000;
}

namespace detail {

inline void check_table_budget(const char* who, long long m, long long n) {
  const auto cells = static_cast<unsigned __int128>(m + 1) * static_cast<unsigned __int128>(n + 1);
  if (cells > dp_cell_limit()) {
    throw resource_limit_error(std::string(who) + ": " + std::to_string(m + 1) + " x " +
                               std::to_string(n + 1) + " table exceeds the cell limit (" +
                               std::to_string(dp_cell_limit()) + ")");
  }
}

}  // namespace detail

/// Exact count by dynamic programming over boxes and remaining balls:
/// f(i, r) = sum over j in [k1, min(k2, r)] of f(i-1, r-j), f(0, 0) = 1.
inline natural oracle_count_dp(const problem_spec& spec) {
  const long long m = spec.balls;
  const long long n = spec.boxes;
  const long long k1 = spec.lower;
  const long long k2 = spec.effective_upper();
  detail::check_table_budget("oracle_count_dp", m, n);

  std::vector<bigint> layer(static_cast<std::size_t>(m) + 1);
  layer[0] = 1;
  for (long long i = 1; i <= n; ++i) {
    std::vector<bigint> next(static_cast<std::size_t>(m) + 1);
    for (long long r = 0; r <= m; ++r) {
      bigint acc = 0;
      for (long long j = k1; j <= std::min(k2, r); ++j) {
        acc += layer[static_cast<std::size_t>(r - j)];
      }
      next[static_cast<std::size_t>(r)] = std::move(acc);
    }
    layer = std::move(next);
  }
  return natural(std::move(layer[static_cast<std::size_t>(m)]));
}

/// Second, independent ground truth: the coefficient of x^m in
/// (x^k1 + ... + x^k2)^n, built by repeated polynomial multiplication with
/// every degree above m discarded. An unbounded upper normalizes to k2 = m.
inline natural oracle_count_polynomial(const problem_spec& spec) {
  const long long m = spec.balls;
  const long long n = spec.boxes;
  const long long k1 = spec.lower;
  const long long k2 = spec.effective_upper();
  detail::check_table_budget("oracle_count_polynomial", m, n);

  std::vector<bigint> poly{1};
  for (long long box = 0; box < n; ++box) {
    std::vector<bigint> product(static_cast<std::size_t>(m) + 1);
    for (std::size_t degree = 0; degree < poly.size(); ++degree) {
      if (poly[degree].is_zero()) continue;
      const long long cap = std::min(k2, m - static_cast<long long>(degree));
      for (long long j = k1; j <= cap; ++j) {
        product[degree + static_cast<std::size_t>(j)] += poly[degree];
      }
    }
    poly = std::move(product);
  }
  return natural(std::move(poly[static_cast<std::size_t>(m)]));
}

/// Streams the valid occupancy sequences of a spec in strictly increasing
/// lexicographic order of parts.
class composition_enumerator {
 public:
  explicit composition_enumerator(const problem_spec& spec)
      : m_(spec.balls), n_(spec.boxes), k1_(spec.lower), k2_(spec.effective_upper()) {
    const bool feasible = k1_ <= k2_ &&
                          static_cast<__int128>(n_) * k1_ <= m_ &&
                          static_cast<__int128>(n_) * k2_ >= m_;
    done_ = !feasible;
  }

  /// Fills `out` with the next composition; returns false once exhausted.
  bool next(composition& out) {
    if (done_) return false;
    if (parts_.empty()) {
      parts_.resize(static_cast<std::size_t>(n_));
      fill_min_suffix(0, m_);
    } else if (!advance()) {
      done_ = true;
      return false;
    }
    out = parts_;
    return true;
  }

 private:
  // Smallest completion of positions [i, n): each part takes the least
  // value in bounds that leaves the remainder reachable for the boxes
  // after it.
  void fill_min_suffix(long long i, long long remaining) {
    for (; i < n_; ++i) {
      const long long boxes_after = n_ - 1 - i;
      const __int128 capacity_after = static_cast<__int128>(boxes_after) * k2_;
      long long part = k1_;
      if (capacity_after < remaining) {
        part = std::max(part, static_cast<long long>(remaining - capacity_after));
      }
      parts_[static_cast<std::size_t>(i)] = part;
      remaining -= part;
    }
  }

  // Rightmost position that can take one more ball while the boxes after
  // it can still absorb the rest; everything to its right restarts minimal.
  bool advance() {
    long long available = parts_[static_cast<std::size_t>(n_ - 1)];
    for (long long i = n_ - 2; i >= 0; --i) {
      available += parts_[static_cast<std::size_t>(i)];
      const long long boxes_after = n_ - 1 - i;
      const __int128 suffix_min = static_cast<__int128>(boxes_after) * k1_;
      const long long current = parts_[static_cast<std::size_t>(i)];
      if (current + 1 <= k2_ && static_cast<__int128>(current) + 1 + suffix_min <= available) {
        parts_[static_cast<std::size_t>(i)] = current + 1;
        fill_min_suffix(i + 1, available - (current + 1));
        return true;
      }
    }
    return false;
  }

  long long m_;
  long long n_;
  long long k1_;
  long long k2_;
  composition parts_;
  bool done_ = false;
};

/// Collects the enumeration, optionally truncated to the first `limit`
/// compositions.
inline std::vector<composition> enumerate(const problem_spec& spec,
                                          std::optional<std::uint64_t> limit = std::nullopt) {
  std::vector<composition> out;
  composition_enumerator stream(spec);
  composition parts;
  while ((!limit || out.size() < *limit) && stream.next(parts)) {
    out.push_back(parts);
  }
  return out;
}

/// Executable form of the violating-box ceiling: true iff every valid
/// composition of `spec` has at most floor(m / (kappa + 1)) parts strictly
/// above kappa.
inline bool check_lemma23(const problem_spec& spec, long long kappa) {
  if (kappa < 0) throw std::invalid_argument("check_lemma23: kappa must be non-negative");
  const long long bound = spec.balls / (kappa + 1);
  composition_enumerator stream(spec);
  composition parts;
  while (stream.next(parts)) {
    const long long violators =
        std::count_if(parts.begin(), parts.end(), [&](long long p) { return p > kappa; });
    if (violators > bound) return false;
  }
  return true;
}

}  // namespace urns
