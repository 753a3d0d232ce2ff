#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "urns/binomial.hpp"
#include "urns/counting.hpp"
#include "urns/oracle.hpp"
#include "urns/problem.hpp"

using urns::case_label;
using urns::count;
using urns::count_report;
using urns::natural;
using urns::problem_spec;

namespace {

// Every k2 choice exercised by the verification grid, unbounded last.
std::vector<std::optional<long long>> upper_choices(long long k1, long long max_k) {
  std::vector<std::optional<long long>> uppers;
  for (long long k2 = k1; k2 <= max_k; ++k2) uppers.emplace_back(k2);
  uppers.emplace_back(std::nullopt);
  return uppers;
}

}  // namespace

TEST_CASE("problem_spec validation") {
  REQUIRE_NOTHROW(problem_spec(0, 1));
  REQUIRE_NOTHROW(problem_spec(5, 3, 1, 4));
  REQUIRE_THROWS_AS(problem_spec(5, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(problem_spec(-1, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(problem_spec(5, 3, -1), std::invalid_argument);
  REQUIRE_THROWS_AS(problem_spec(5, 3, 3, 2), std::invalid_argument);

  const problem_spec unbounded(5, 3, 1);
  REQUIRE_FALSE(unbounded.bounded());
  REQUIRE(unbounded.effective_upper() == 5);
  REQUIRE(problem_spec(5, 3, 0, 9).effective_upper() == 5);
  REQUIRE(problem_spec(5, 3, 0, 2).effective_upper() == 2);
}

TEST_CASE("stars and bars baselines") {
  REQUIRE(urns::stars_and_bars(3, 2) == natural(4));
  REQUIRE(urns::stars_and_bars(0, 5) == natural(1));
  REQUIRE(urns::stars_and_bars(5, 1) == natural(1));
  REQUIRE(urns::stars_and_bars(5, 3) == natural(21));

  REQUIRE(urns::stars_and_bars_nonempty(5, 3) == natural(6));
  REQUIRE(urns::stars_and_bars_nonempty(3, 3) == natural(1));
  REQUIRE(urns::stars_and_bars_nonempty(2, 3) == natural(0));
}

TEST_CASE("feasibility lemmas") {
  REQUIRE_FALSE(urns::lower_bound_feasible(5, 3, 2));
  REQUIRE(urns::lower_bound_feasible(6, 3, 2));
  REQUIRE(urns::lower_bound_feasible(0, 4, 0));

  REQUIRE_FALSE(urns::upper_bound_feasible(7, 3, 2));
  REQUIRE(urns::upper_bound_feasible(6, 3, 2));
  REQUIRE(urns::upper_bound_feasible(0, 3, 0));
}

TEST_CASE("max violating boxes") {
  REQUIRE(urns::max_violating_boxes(10, 3) == 2);
  REQUIRE(urns::max_violating_boxes(5, 2) == 1);
  REQUIRE(urns::max_violating_boxes(3, 5) == 0);
}

TEST_CASE("count with lower bound only") {
  REQUIRE(urns::count_lower_only(7, 3, 2) == natural(3));
  REQUIRE(urns::count_lower_only(6, 3, 2) == natural(1));
  for (long long m = 0; m <= 10; ++m) {
    REQUIRE(urns::count_lower_only(m, 4, 0) == urns::stars_and_bars(m, 4));
  }
  REQUIRE_THROWS_AS(urns::count_lower_only(5, 3, 2), urns::infeasible_error);
}

TEST_CASE("single-violation band formula") {
  REQUIRE(urns::count_upper_single_violation(5, 3, 3) == natural(12));
  REQUIRE(urns::count_upper_single_violation(5, 3, 4) == natural(18));
  REQUIRE(urns::count_upper_single_violation(4, 2, 2) == natural(1));

  // Outside its stated band the formula refuses to answer.
  REQUIRE_THROWS_AS(urns::count_upper_single_violation(5, 1, 3), std::domain_error);
  REQUIRE_THROWS_AS(urns::count_upper_single_violation(10, 3, 2), std::domain_error);
  REQUIRE_THROWS_AS(urns::count_upper_single_violation(5, 3, 5), std::domain_error);
}

TEST_CASE("count with upper bound only") {
  REQUIRE(urns::count_upper_only(5, 3, 2).count == natural(3));
  REQUIRE(urns::count_upper_only(6, 3, 2).count == natural(1));
  REQUIRE(urns::count_upper_only(7, 3, 2).count == natural(0));
  REQUIRE(urns::count_upper_only(7, 3, 2).label == case_label::infeasible_upper_lemma22);
  REQUIRE(urns::count_upper_only(5, 3, 5).count == natural(21));
  REQUIRE(urns::count_upper_only(5, 3, 5).label == case_label::unrestricted_baseline);
}

TEST_CASE("two-stage shift") {
  const urns::shifted_problem a = urns::shift(problem_spec(7, 3, 1, 3));
  REQUIRE(a.residual_balls == 4);
  REQUIRE(a.residual_upper == std::optional<long long>(2));

  const urns::shifted_problem b = urns::shift(problem_spec(6, 3, 2, 2));
  REQUIRE(b.residual_balls == 0);
  REQUIRE(b.residual_upper == std::optional<long long>(0));

  const urns::shifted_problem c = urns::shift(problem_spec(5, 2, 0, 4));
  REQUIRE(c.residual_balls == 5);
  REQUIRE(c.residual_upper == std::optional<long long>(4));

  const urns::shifted_problem d = urns::shift(problem_spec(7, 3, 2));
  REQUIRE(d.residual_balls == 1);
  REQUIRE_FALSE(d.residual_upper.has_value());

  REQUIRE_THROWS_AS(urns::shift(problem_spec(5, 3, 2)), urns::infeasible_error);
}

TEST_CASE("count dispatcher examples") {
  const count_report a = count(problem_spec(7, 3, 1, 3));
  REQUIRE(a.count == natural(6));
  REQUIRE(a.label == case_label::double_bound_shifted);
  REQUIRE(a.shifted.has_value());
  REQUIRE(a.shifted->residual_balls == 4);

  const count_report b = count(problem_spec(5, 3, 2, 4));
  REQUIRE(b.count == natural(0));
  REQUIRE(b.label == case_label::infeasible_lower_lemma21);

  REQUIRE(count(problem_spec(0, 4)).count == natural(1));
  REQUIRE(count(problem_spec(2, 5, 0, 1)).count == natural(10));
  REQUIRE(count(problem_spec(7, 3, 2)).count == natural(3));
}

TEST_CASE("classify examples and labels") {
  REQUIRE(urns::classify(problem_spec(5, 3, 0, 3)) == case_label::upper_only_single_violation);
  REQUIRE(urns::classify(problem_spec(7, 3, 1, 3)) == case_label::double_bound_shifted);
  REQUIRE(urns::classify(problem_spec(7, 3, 0, 2)) == case_label::infeasible_upper_lemma22);
  REQUIRE(urns::classify(problem_spec(5, 3)) == case_label::unrestricted_baseline);
  REQUIRE(urns::classify(problem_spec(5, 3, 1)) == case_label::no_empty_baseline);
  REQUIRE(urns::classify(problem_spec(7, 3, 2)) == case_label::lower_only);
  REQUIRE(urns::classify(problem_spec(6, 3, 0, 2)) == case_label::upper_only_inclusion_exclusion);
  REQUIRE(urns::classify(problem_spec(2, 5, 0, 1)) == case_label::fewer_balls_than_boxes);

  REQUIRE(urns::label_name(case_label::upper_only_single_violation) ==
          "UpperOnlySingleViolation");
  REQUIRE(urns::label_section(case_label::upper_only_single_violation) == "§2.2.1");
  REQUIRE(urns::label_section(case_label::infeasible_lower_lemma21) == "§2.1.3 (Lemma 2.1)");
  REQUIRE(urns::label_section(case_label::infeasible_upper_lemma22) == "§2.2.2 (Lemma 2.2)");
  REQUIRE(urns::label_section(case_label::double_bound_shifted) == "§2.3");
  REQUIRE(urns::is_infeasible(case_label::infeasible_lower_lemma21));
  REQUIRE_FALSE(urns::is_infeasible(case_label::lower_only));
}

TEST_CASE("count report structure is self-consistent") {
  for (long long m = 0; m <= 10; ++m) {
    for (long long n = 1; n <= 4; ++n) {
      for (long long k1 = 0; k1 <= 6; ++k1) {
        for (const auto& k2 : upper_choices(k1, 6)) {
          const problem_spec spec(m, n, k1, k2);
          const count_report report = count(spec);
          REQUIRE(report.label == urns::classify(spec));
          if (urns::is_infeasible(report.label)) {
            REQUIRE(report.count.is_zero());
            REQUIRE(report.terms.empty());
            continue;
          }
          // Shift bookkeeping: recorded exactly when a lower bound was active.
          REQUIRE(report.shifted.has_value() == (k1 > 0));
          const long long residual = m - n * k1;
          if (report.shifted) {
            REQUIRE(report.shifted->residual_balls == residual);
          }
          if (!report.terms.empty()) {
            // count = stars_and_bars(m*, n) - sum of signed terms
            urns::bigint correction = 0;
            long long previous_alpha = 0;
            const long long kappa = *k2 - k1;
            for (const urns::inclusion_exclusion_term& term : report.terms) {
              REQUIRE(term.alpha == previous_alpha + 1);
              previous_alpha = term.alpha;
              REQUIRE(term.sign == (term.alpha % 2 == 1 ? 1 : -1));
              REQUIRE(term.alpha <= residual / (kappa + 1));
              REQUIRE(term.choose_boxes == urns::binomial(n, term.alpha));
              REQUIRE(term.remaining_count ==
                      urns::binomial(residual - term.alpha * (kappa + 1) + n - 1, n - 1));
              REQUIRE(term.term_value ==
                      term.sign * term.choose_boxes.value() * term.remaining_count.value());
              correction += term.term_value;
            }
            REQUIRE(report.count ==
                    natural(urns::stars_and_bars(residual, n).value() - correction));
          }
        }
      }
    }
  }
}

TEST_CASE("closed form agrees with both oracles on the verification grid") {
  for (long long m = 0; m <= 12; ++m) {
    for (long long n = 1; n <= 6; ++n) {
      for (long long k1 = 0; k1 <= 12; ++k1) {
        for (const auto& k2 : upper_choices(k1, 12)) {
          const problem_spec spec(m, n, k1, k2);
          const natural closed = count(spec).count;
          REQUIRE(closed == urns::oracle_count_dp(spec));
          REQUIRE(closed == urns::oracle_count_polynomial(spec));
        }
      }
    }
  }
}

TEST_CASE("infeasible labels coincide with zero oracle counts") {
  for (long long m = 0; m <= 12; ++m) {
    for (long long n = 1; n <= 6; ++n) {
      for (long long k1 = 0; k1 <= 12; ++k1) {
        for (const auto& k2 : upper_choices(k1, 12)) {
          const problem_spec spec(m, n, k1, k2);
          const count_report report = count(spec);
          if (urns::is_infeasible(report.label)) {
            REQUIRE(report.count.is_zero());
            REQUIRE(urns::oracle_count_dp(spec).is_zero());
          } else {
            REQUIRE(!report.count.is_zero());  // feasible bounds always admit a fill
          }
        }
      }
    }
  }
}

TEST_CASE("shift correctness across the grid") {
  for (long long m = 0; m <= 12; ++m) {
    for (long long n = 1; n <= 6; ++n) {
      for (long long k1 = 0; k1 <= m / n; ++k1) {
        for (const auto& k2 : upper_choices(k1, 12)) {
          const natural direct = count(problem_spec(m, n, k1, k2)).count;
          const std::optional<long long> shifted_upper =
              k2 ? std::optional<long long>(*k2 - k1) : std::nullopt;
          const natural shifted = count(problem_spec(m - n * k1, n, 0, shifted_upper)).count;
          REQUIRE(direct == shifted);
        }
      }
    }
  }
}

TEST_CASE("complement symmetry across the grid") {
  for (long long m = 0; m <= 12; ++m) {
    for (long long n = 1; n <= 6; ++n) {
      for (long long k1 = 0; k1 <= 12; ++k1) {
        for (long long k2 = k1; k2 <= 12; ++k2) {
          const natural direct = count(problem_spec(m, n, k1, k2)).count;
          if (n * k2 < m) {
            REQUIRE(direct.is_zero());  // nothing to mirror: the boxes cannot hold m
          } else {
            REQUIRE(direct == count(problem_spec(n * k2 - m, n, 0, k2 - k1)).count);
          }
        }
      }
    }
  }
}

TEST_CASE("normalization: counts over all m sum to the number of bound vectors") {
  for (long long n = 1; n <= 5; ++n) {
    for (long long k1 = 0; k1 <= 6; ++k1) {
      for (long long k2 = k1; k2 <= 6; ++k2) {
        natural sum;
        for (long long m = 0; m <= n * k2; ++m) {
          sum += count(problem_spec(m, n, k1, k2)).count;
        }
        natural expected(1);
        for (long long i = 0; i < n; ++i) expected *= natural(k2 - k1 + 1);
        REQUIRE(sum == expected);
      }
    }
  }
}

TEST_CASE("band agreement between the single-violation formula and the general sum") {
  for (long long m = 0; m <= 30; ++m) {
    for (long long n = 2; n <= 6; ++n) {
      for (long long k2 = m / 2; k2 < m; ++k2) {
        REQUIRE(urns::count_upper_single_violation(m, n, k2) ==
                urns::count_upper_only(m, n, k2).count);
      }
    }
  }
}

TEST_CASE("truncation equivalence: extending the alternating sum changes nothing") {
  for (long long m = 0; m <= 12; ++m) {
    for (long long n = 1; n <= 6; ++n) {
      for (long long k2 = 0; k2 <= 12; ++k2) {
        urns::bigint truncated = urns::stars_and_bars(m, n).value();
        for (long long alpha = 1; alpha <= m / (k2 + 1); ++alpha) {
          truncated -= (alpha % 2 == 1 ? 1 : -1) * urns::binomial(n, alpha).value() *
                       urns::binomial(m - alpha * (k2 + 1) + n - 1, n - 1).value();
        }
        urns::bigint extended = urns::stars_and_bars(m, n).value();
        for (long long alpha = 1; alpha <= n; ++alpha) {
          extended -= (alpha % 2 == 1 ? 1 : -1) * urns::binomial(n, alpha).value() *
                      urns::binomial(m - alpha * (k2 + 1) + n - 1, n - 1).value();
        }
        REQUIRE(truncated == extended);
        if (urns::upper_bound_feasible(m, n, k2)) {
          REQUIRE(urns::count_upper_only(m, n, k2).count.value() == truncated);
        }
      }
    }
  }
}

TEST_CASE("count is monotone in each bound") {
  for (long long m = 0; m <= 10; ++m) {
    for (long long n = 1; n <= 4; ++n) {
      // Non-increasing as the lower bound tightens.
      for (long long k2 = 0; k2 <= 8; ++k2) {
        for (long long k1 = 1; k1 <= k2; ++k1) {
          REQUIRE(count(problem_spec(m, n, k1, k2)).count <=
                  count(problem_spec(m, n, k1 - 1, k2)).count);
        }
      }
      // Non-decreasing as the upper bound loosens.
      for (long long k1 = 0; k1 <= 8; ++k1) {
        for (long long k2 = k1 + 1; k2 <= 8; ++k2) {
          REQUIRE(count(problem_spec(m, n, k1, k2)).count >=
                  count(problem_spec(m, n, k1, k2 - 1)).count);
        }
        REQUIRE(count(problem_spec(m, n, k1)).count >=
                count(problem_spec(m, n, k1, 8)).count);
      }
    }
  }
}

TEST_CASE("unbounded baselines up to m = 30, n = 8") {
  for (long long m = 0; m <= 30; ++m) {
    for (long long n = 1; n <= 8; ++n) {
      REQUIRE(count(problem_spec(m, n, 0)).count == urns::stars_and_bars(m, n));
      REQUIRE(count(problem_spec(m, n, 1)).count == urns::stars_and_bars_nonempty(m, n));
    }
  }
}

TEST_CASE("single box and zero balls follow the occupancy semantics") {
  for (long long m = 0; m <= 10; ++m) {
    for (long long k1 = 0; k1 <= 12; ++k1) {
      for (const auto& k2 : upper_choices(k1, 12)) {
        const bool inside = k1 <= m && (!k2 || m <= *k2);
        REQUIRE(count(problem_spec(m, 1, k1, k2)).count == natural(inside ? 1 : 0));
      }
    }
  }
  for (long long n = 1; n <= 6; ++n) {
    for (long long k1 = 0; k1 <= 4; ++k1) {
      for (const auto& k2 : upper_choices(k1, 4)) {
        REQUIRE(count(problem_spec(0, n, k1, k2)).count == natural(k1 == 0 ? 1 : 0));
      }
    }
  }
}
