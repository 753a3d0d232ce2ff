#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace urns {

/// Raised when an operation requires a feasible parameter region and the
/// given bounds admit no distribution at all.
class infeasible_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Distribute `balls` indistinguishable balls into `boxes` distinct boxes,
/// every box holding between `lower` and `upper` balls (absent upper means
/// unbounded). A valid distribution is an occupancy sequence (X1..Xn) with
/// sum(Xi) = balls and lower <= Xi <= upper for every i; all balls must be
/// placed.
///
/// Construction rejects malformed parameters (boxes < 1, negative counts,
/// lower > upper); infeasible-but-well-formed bounds are fine here and
/// simply count zero.
struct problem_spec {
  long long balls = 0;
  long long boxes = 1;
  long long lower = 0;
  std::optional<long long> upper;

  problem_spec(long long m, long long n, long long k1 = 0,
               std::optional<long long> k2 = std::nullopt)
      : balls(m), boxes(n), lower(k1), upper(k2) {
    if (n < 1) throw std::invalid_argument("problem_spec: boxes must be >= 1");
    if (m < 0) throw std::invalid_argument("problem_spec: balls must be >= 0");
    if (k1 < 0) throw std::invalid_argument("problem_spec: lower bound must be >= 0");
    if (k2 && *k2 < k1) throw std::invalid_argument("problem_spec: upper bound below lower bound");
  }

  bool bounded() const { return upper.has_value(); }

  /// Upper bound with the irrelevant tail clamped: no box can ever hold
  /// more than `balls`, so any upper >= balls acts like balls.
  long long effective_upper() const {
    return upper ? std::min(*upper, balls) : balls;
  }

  friend bool operator==(const problem_spec&, const problem_spec&) = default;
};

/// Residual problem after stage one of the two-stage method: pre-placing
/// `lower` balls in every box leaves balls - boxes*lower to distribute
/// with a zero lower bound.
struct shifted_problem {
  long long residual_balls = 0;
  static constexpr long long residual_lower = 0;
  std::optional<long long> residual_upper;

  friend bool operator==(const shifted_problem&, const shifted_problem&) = default;
};

/// Which parameter region a spec falls in. classify() maps every valid
/// spec to exactly one label; the two infeasible labels force a zero count.
enum class case_label {
  infeasible_lower_lemma21,
  infeasible_upper_lemma22,
  no_empty_baseline,
  unrestricted_baseline,
  lower_only,
  upper_only_single_violation,
  upper_only_inclusion_exclusion,
  double_bound_shifted,
  fewer_balls_than_boxes,
};

constexpr std::string_view label_name(case_label label) {
  switch (label) {
    case case_label::infeasible_lower_lemma21: return "InfeasibleLowerLemma21";
    case case_label::infeasible_upper_lemma22: return "InfeasibleUpperLemma22";
    case case_label::no_empty_baseline: return "NoEmptyBaseline";
    case case_label::unrestricted_baseline: return "UnrestrictedBaseline";
    case case_label::lower_only: return "LowerOnly";
    case case_label::upper_only_single_violation: return "UpperOnlySingleViolation";
    case case_label::upper_only_inclusion_exclusion: return "UpperOnlyInclusionExclusion";
    case case_label::double_bound_shifted: return "DoubleBoundShifted";
    case case_label::fewer_balls_than_boxes: return "FewerBallsThanBoxes";
  }
  return "?";
}

/// Section of the derivation each region belongs to, as printed by the CLI.
constexpr std::string_view label_section(case_label label) {
  switch (label) {
    case case_label::infeasible_lower_lemma21: return "§2.1.3 (Lemma 2.1)";
    case case_label::infeasible_upper_lemma22: return "§2.2.2 (Lemma 2.2)";
    case case_label::no_empty_baseline: return "§2.1.1";
    case case_label::unrestricted_baseline: return "§2.1.2";
    case case_label::lower_only: return "§2.1.4";
    case case_label::upper_only_single_violation: return "§2.2.1";
    case case_label::upper_only_inclusion_exclusion: return "§2.2.3";
    case case_label::double_bound_shifted: return "§2.3";
    case case_label::fewer_balls_than_boxes: return "§3";
  }
  return "?";
}

constexpr bool is_infeasible(case_label label) {
  return label == case_label::infeasible_lower_lemma21 ||
         label == case_label::infeasible_upper_lemma22;
}

}  // namespace urns
