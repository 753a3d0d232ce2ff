#pragma once

#include "urns/counting.hpp"
#include "urns/exact.hpp"

namespace urns {

/// Exact probability together with the counts it came from. `value` is the
/// reduced fraction numerator_count / denominator_count; `decimal_approx`
/// is display-only and never feeds back into computation.
struct probability_report {
  exact_rational value;
  natural numerator_count;
  natural denominator_count;
  double decimal_approx = 0.0;
};

/// Probability that a uniformly chosen unrestricted occupancy sequence of
/// m balls over n boxes keeps every box at or below kappa. The uniform
/// measure is over the C(m + n - 1, n - 1) occupancy sequences themselves,
/// not over distinguishable-ball throws.
inline probability_report prob_all_boxes_within(long long m, long long n, long long kappa) {
  probability_report report;
  report.numerator_count = count_upper_only(m, n, kappa).count;
  report.denominator_count = stars_and_bars(m, n);
  report.value = exact_rational(report.numerator_count, report.denominator_count);
  report.decimal_approx = report.value.to_double();
  return report;
}

/// Complement: probability that at least one box exceeds kappa.
inline probability_report prob_at_least_one_exceeds(long long m, long long n, long long kappa) {
  probability_report report = prob_all_boxes_within(m, n, kappa);
  report.numerator_count = report.denominator_count - report.numerator_count;
  report.value = exact_rational(report.numerator_count, report.denominator_count);
  report.decimal_approx = report.value.to_double();
  return report;
}

}  // namespace urns
