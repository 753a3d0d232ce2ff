#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "urns/binomial.hpp"
#include "urns/exact.hpp"
#include "urns/problem.hpp"

namespace urns {

/// One summand of the alternating correction over the number alpha of
/// boxes forced past the cap kappa.
struct inclusion_exclusion_term {
  long long alpha = 0;       // summation index, 1-based
  int sign = 0;              // +1 for odd alpha, -1 for even
  natural choose_boxes;      // C(n, alpha)
  natural remaining_count;   // C(m - alpha*(kappa+1) + n - 1, n - 1)
  bigint term_value;         // sign * choose_boxes * remaining_count
};

/// Count plus the explanation of how it was obtained: the parameter-region
/// label, the residual problem when a lower-bound shift was applied, and
/// the correction terms when inclusion-exclusion was needed.
struct count_report {
  natural count;
  case_label label = case_label::unrestricted_baseline;
  std::optional<shifted_problem> shifted;
  std::vector<inclusion_exclusion_term> terms;
};

/// Ways to distribute m balls into n boxes with empty boxes allowed:
/// C(m + n - 1, n - 1).
inline natural stars_and_bars(long long m, long long n) {
  return binomial_cached(m + n - 1, n - 1);
}

/// Ways with no box empty: C(m - 1, n - 1). Zero when m < n, by the
/// binomial convention.
inline natural stars_and_bars_nonempty(long long m, long long n) {
  return binomial_cached(m - 1, n - 1);
}

/// A per-box lower bound k1 is satisfiable iff k1 <= floor(m/n); anything
/// larger would already need more than m balls.
inline bool lower_bound_feasible(long long m, long long n, long long k1) {
  return k1 <= m / n;
}

/// A per-box upper bound k2 is satisfiable iff k2 >= ceil(m/n); below that
/// even full boxes leave balls unplaced.
inline bool upper_bound_feasible(long long m, long long n, long long k2) {
  return k2 >= m / n + (m % n != 0 ? 1 : 0);
}

/// At most floor(m / (kappa + 1)) boxes can hold more than kappa balls.
inline long long max_violating_boxes(long long m, long long kappa) {
  return m / (kappa + 1);
}

/// Lower bound only: pre-place k1 balls per box, then distribute the rest
/// freely, giving C(m - n*k1 + n - 1, n - 1).
inline natural count_lower_only(long long m, long long n, long long k1) {
  if (!lower_bound_feasible(m, n, k1)) {
    throw infeasible_error("count_lower_only: lower bound exceeds floor(m/n)");
  }
  return binomial_cached(m - n * k1 + n - 1, n - 1);
}

/// Closed form for the band floor(m/2) <= k2 < m with n >= 2, where at
/// most one box can exceed k2: subtract the n * C(m - k2 + n - 2, n - 1)
/// single-violator distributions from the unrestricted count.
inline natural count_upper_single_violation(long long m, long long n, long long k2) {
  if (n < 2 || k2 < m / 2 || k2 >= m) {
    throw std::domain_error(
        "count_upper_single_violation: requires n >= 2 and floor(m/2) <= k2 < m");
  }
  return stars_and_bars(m, n) - natural(n) * binomial_cached(m - k2 + n - 2, n - 1);
}

namespace detail {

/// Unified upper-bound engine for a problem with lower = 0 that is already
/// known feasible. Fills count and terms; the label is the caller's job.
inline void apply_upper_bound(count_report& report, long long m, long long n,
                              std::optional<long long> k2) {
  if (!k2 || *k2 >= m) {
    report.count = stars_and_bars(m, n);
    return;
  }
  const long long kappa = *k2;
  // Terms with alpha > n vanish (C(n, alpha) = 0), so the sweep stops at
  // min(n, floor(m/(kappa+1))) without changing the sum.
  const long long alpha_last = std::min(n, max_violating_boxes(m, kappa));
  bigint correction = 0;
  report.terms.reserve(static_cast<std::size_t>(alpha_last));
  for (long long alpha = 1; alpha <= alpha_last; ++alpha) {
    inclusion_exclusion_term term;
    term.alpha = alpha;
    term.sign = alpha % 2 == 1 ? 1 : -1;
    term.choose_boxes = binomial_cached(n, alpha);
    term.remaining_count = binomial_cached(m - alpha * (kappa + 1) + n - 1, n - 1);
    term.term_value = term.sign * term.choose_boxes.value() * term.remaining_count.value();
    correction += term.term_value;
    report.terms.push_back(std::move(term));
  }
  report.count = natural(stars_and_bars(m, n).value() - correction);
}

}  // namespace detail

/// Maps a spec to its unique parameter region. Decision order: lower-bound
/// feasibility, upper-bound feasibility, the m < n reduction, then which
/// bounds remain active.
inline case_label classify(const problem_spec& spec) {
  const long long m = spec.balls;
  const long long n = spec.boxes;
  if (!lower_bound_feasible(m, n, spec.lower)) return case_label::infeasible_lower_lemma21;
  if (spec.upper && !upper_bound_feasible(m, n, *spec.upper)) {
    return case_label::infeasible_upper_lemma22;
  }
  if (m < n) return case_label::fewer_balls_than_boxes;  // feasibility forced lower = 0
  const bool upper_active = spec.upper && *spec.upper < m;
  if (!upper_active) {
    if (spec.lower == 0) return case_label::unrestricted_baseline;
    if (spec.lower == 1) return case_label::no_empty_baseline;
    return case_label::lower_only;
  }
  if (spec.lower > 0) return case_label::double_bound_shifted;
  if (*spec.upper >= m / 2) return case_label::upper_only_single_violation;
  return case_label::upper_only_inclusion_exclusion;
}

/// Stage one of the two-stage method: remove the mandatory k1 balls per
/// box, leaving a zero-lower-bound residual problem.
inline shifted_problem shift(const problem_spec& spec) {
  if (!lower_bound_feasible(spec.balls, spec.boxes, spec.lower)) {
    throw infeasible_error("shift: lower bound exceeds floor(m/n)");
  }
  shifted_problem out;
  out.residual_balls = spec.balls - spec.boxes * spec.lower;
  if (spec.upper) out.residual_upper = *spec.upper - spec.lower;
  return out;
}

/// Total dispatcher. Infeasible bounds yield a labeled zero, never an
/// error; every feasible spec is shifted by its lower bound and handed to
/// the unified upper-bound engine.
inline count_report count(const problem_spec& spec) {
  count_report report;
  report.label = classify(spec);
  if (is_infeasible(report.label)) {
    report.count = 0;
    return report;
  }
  const shifted_problem residual = shift(spec);
  detail::apply_upper_bound(report, residual.residual_balls, spec.boxes,
                            residual.residual_upper);
  if (spec.lower > 0) report.shifted = residual;
  return report;
}

/// Upper bound only. Handles every band internally: infeasible caps give
/// a labeled zero, caps >= m reduce to stars and bars, anything else goes
/// through the alternating sum.
inline count_report count_upper_only(long long m, long long n, long long k2) {
  return count(problem_spec(m, n, 0, k2));
}

}  // namespace urns
