#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "urns/counting.hpp"
#include "urns/exact.hpp"
#include "urns/oracle.hpp"
#include "urns/problem.hpp"

// Sweeps a parameter grid and cross-checks every closed-form count against
// the dynamic-programming oracle.

namespace urns {

/// One spec where the closed form and the oracle disagreed.
struct grid_mismatch {
  problem_spec spec;
  natural closed_form_value;
  natural oracle_value;
};

struct verification_report {
  std::uint64_t specs_checked = 0;
  std::vector<grid_mismatch> mismatches;
  double elapsed_seconds = 0.0;
};

namespace detail {

/// The sweep order is part of the contract: m, then n, then k1, with the
/// bounded k2 values before the unbounded spec for each k1.
inline std::vector<problem_spec> grid_specs(long long max_m, long long max_n, long long max_k) {
  std::vector<problem_spec> specs;
  for (long long m = 0; m <= max_m; ++m) {
    for (long long n = 1; n <= max_n; ++n) {
      for (long long k1 = 0; k1 <= max_k; ++k1) {
        for (long long k2 = k1; k2 <= max_k; ++k2) {
          specs.emplace_back(m, n, k1, k2);
        }
        specs.emplace_back(m, n, k1, std::nullopt);
      }
    }
  }
  return specs;
}

}  // namespace detail

/// Checks every spec in the grid. Work is striped across `jobs` threads;
/// results land in per-spec slots, so the report lists mismatches in sweep
/// order no matter how the threads interleave. `inject_fault` corrupts the
/// first closed-form value by one, to prove the sweep can actually fail.
inline verification_report verify_grid(long long max_m, long long max_n, long long max_k,
                                       unsigned jobs = 1, bool inject_fault = false) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<problem_spec> specs = detail::grid_specs(max_m, max_n, max_k);
  std::vector<std::optional<grid_mismatch>> slots(specs.size());

  const auto worker = [&](std::size_t first, std::size_t step) {
    for (std::size_t i = first; i < specs.size(); i += step) {
      natural closed = count(specs[i]).count;
      if (inject_fault && i == 0) closed += natural(1);
      natural truth = oracle_count_dp(specs[i]);
      if (closed != truth) {
        slots[i] = grid_mismatch{specs[i], std::move(closed), std::move(truth)};
      }
    }
  };

  if (jobs <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      threads.emplace_back(worker, t, jobs);
    }
    for (std::thread& t : threads) t.join();
  }

  verification_report report;
  report.specs_checked = specs.size();
  for (std::optional<grid_mismatch>& slot : slots) {
    if (slot) report.mismatches.push_back(std::move(*slot));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace urns
