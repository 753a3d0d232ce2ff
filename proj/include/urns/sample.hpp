#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "urns/counting.hpp"
#include "urns/exact.hpp"
#include "urns/oracle.hpp"
#include "urns/problem.hpp"

// Exact uniform sampling over the valid distributions of a spec. A draw is
// one uniform big-integer rank plus an unranking walk, so every valid
// composition carries probability 1 / count(spec) with no rounding anywhere.

namespace urns {
namespace detail {

/// Uniform natural in [0, bound) by rejection on the bit length of
/// bound - 1. Words come out of the engine lowest 64 bits first, which
/// pins the byte-for-byte output of a seeded run.
inline natural uniform_below(std::mt19937_64& rng, const natural& bound) {
  if (bound.is_zero()) {
    throw std::invalid_argument("uniform_below: bound must be positive");
  }
  const bigint& b = bound.value();
  if (b == 1) return natural(0);

  const unsigned bits = boost::multiprecision::msb(bigint(b - 1)) + 1;
  const unsigned words = (bits + 63) / 64;
  const std::uint64_t top_mask =
      (bits % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bits % 64)) - 1);
  while (true) {
    bigint candidate = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t chunk = rng();
      if (w + 1 == words) chunk &= top_mask;
      candidate |= bigint(chunk) << (64 * w);
    }
    if (candidate < b) return natural(std::move(candidate));
  }
}

}  // namespace detail

/// Maps a rank in [0, count(spec)) to the composition holding that position
/// in the lexicographic enumeration order. Box i takes the smallest value
/// whose block of completions still contains the rank.
inline composition unrank_composition(const problem_spec& spec, natural rank) {
  composition parts(static_cast<std::size_t>(spec.boxes));
  long long remaining = spec.balls;
  for (long long i = 0; i + 1 < spec.boxes; ++i) {
    const long long boxes_after = spec.boxes - 1 - i;
    const long long hi = std::min(spec.effective_upper(), remaining);
    bool placed = false;
    for (long long x = spec.lower; x <= hi; ++x) {
      const natural block =
          count(problem_spec(remaining - x, boxes_after, spec.lower, spec.upper)).count;
      if (rank < block) {
        parts[static_cast<std::size_t>(i)] = x;
        remaining -= x;
        placed = true;
        break;
      }
      rank -= block;
    }
    if (!placed) {
      throw std::out_of_range("unrank_composition: rank is not below the distribution count");
    }
  }
  if (!rank.is_zero() || remaining < spec.lower || remaining > spec.effective_upper()) {
    throw std::out_of_range("unrank_composition: rank is not below the distribution count");
  }
  parts[static_cast<std::size_t>(spec.boxes - 1)] = remaining;
  return parts;
}

/// Draws `draws` independent compositions, each uniform over the valid
/// distributions of `spec`. A fixed seed reproduces the same sequence.
inline std::vector<composition> uniform_sample(const problem_spec& spec, std::uint64_t seed,
                                               std::uint64_t draws) {
  const natural total = count(spec).count;
  if (total.is_zero()) {
    throw infeasible_error("uniform_sample: the spec admits no valid distribution");
  }
  std::mt19937_64 rng(seed);
  std::vector<composition> out;
  out.reserve(draws);
  for (std::uint64_t d = 0; d < draws; ++d) {
    out.push_back(unrank_composition(spec, detail::uniform_below(rng, total)));
  }
  return out;
}

}  // namespace urns
