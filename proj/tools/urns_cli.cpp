// Command-line front end for the capacity-urns library: counting,
// probability, enumeration, sampling, bulk tables, and grid verification.
//
// Exit codes: 0 success, 2 usage error (malformed arguments, infeasible
// sample), 3 verification mismatch.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "urns/urns.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string case_string(urns::case_label label) {
  return std::string(urns::label_name(label)) + " (" + std::string(urns::label_section(label)) +
         ")";
}

std::string upper_cell(const std::optional<long long>& upper) {
  return upper ? std::to_string(*upper) : "-";
}

ordered_json upper_json(const std::optional<long long>& upper) {
  return upper ? ordered_json(*upper) : ordered_json(nullptr);
}

std::string join_parts(const urns::composition& parts) {
  std::ostringstream line;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) line << ' ';
    line << parts[i];
  }
  return line.str();
}

ordered_json make_envelope(const std::string& command, ordered_json inputs, ordered_json result,
                           ordered_json case_field) {
  ordered_json env;
  env["schema_version"] = "1";
  env["command"] = command;
  env["inputs"] = std::move(inputs);
  env["result"] = std::move(result);
  env["case"] = std::move(case_field);
  return env;
}

void emit_json(const ordered_json& env) { std::cout << env.dump(2) << "\n"; }

ordered_json terms_json(const urns::count_report& report) {
  ordered_json terms = ordered_json::array();
  for (const urns::inclusion_exclusion_term& term : report.terms) {
    ordered_json row;
    row["alpha"] = term.alpha;
    row["sign"] = term.sign;
    row["choose"] = term.choose_boxes.str();
    row["remaining"] = term.remaining_count.str();
    row["term"] = term.term_value.str();
    terms.push_back(std::move(row));
  }
  return terms;
}

// a..b with both endpoints included.
std::pair<long long, long long> parse_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  if (sep == std::string::npos) {
    throw std::invalid_argument("range must look like a..b, got '" + text + "'");
  }
  const std::string lo_text = text.substr(0, sep);
  const std::string hi_text = text.substr(sep + 2);
  std::size_t used = 0;
  const long long lo = std::stoll(lo_text, &used);
  if (used != lo_text.size()) throw std::invalid_argument("bad range endpoint '" + lo_text + "'");
  const long long hi = std::stoll(hi_text, &used);
  if (used != hi_text.size()) throw std::invalid_argument("bad range endpoint '" + hi_text + "'");
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

int run_count(long long m, long long n, long long k1, std::optional<long long> k2,
              const std::string& format, bool verbose) {
  const urns::problem_spec spec(m, n, k1, k2);
  const urns::count_report report = urns::count(spec);

  if (format == "json") {
    ordered_json inputs;
    inputs["m"] = m;
    inputs["n"] = n;
    inputs["min"] = k1;
    inputs["max"] = upper_json(k2);
    ordered_json result;
    result["count"] = report.count.str();
    result["label"] = urns::label_name(report.label);
    result["section"] = urns::label_section(report.label);
    if (report.shifted) {
      ordered_json shifted;
      shifted["residual_balls"] = report.shifted->residual_balls;
      shifted["residual_min"] = 0;
      shifted["residual_max"] = upper_json(report.shifted->residual_upper);
      result["shifted"] = std::move(shifted);
    } else {
      result["shifted"] = nullptr;
    }
    result["terms"] = terms_json(report);
    emit_json(make_envelope("count", std::move(inputs), std::move(result),
                            urns::label_section(report.label)));
  } else if (format == "tsv") {
    std::cout << "m\tn\tk1\tk2\tcount\tcase\n";
    std::cout << m << '\t' << n << '\t' << k1 << '\t' << upper_cell(k2) << '\t'
              << report.count.str() << '\t' << case_string(report.label) << "\n";
  } else {
    std::cout << "count: " << report.count << "\n";
    std::cout << "case: " << case_string(report.label) << "\n";
    if (verbose) {
      if (report.shifted) {
        std::cout << "shifted: m*=" << report.shifted->residual_balls
                  << " k2*=" << upper_cell(report.shifted->residual_upper) << "\n";
      }
      if (!report.terms.empty()) {
        std::cout << "alpha\tsign\tchoose\tremaining\tterm\n";
        for (const urns::inclusion_exclusion_term& term : report.terms) {
          std::cout << term.alpha << '\t' << (term.sign > 0 ? '+' : '-') << '\t'
                    << term.choose_boxes << '\t' << term.remaining_count << '\t'
                    << term.term_value << "\n";
        }
      }
    }
  }
  return 0;
}

int run_prob(long long m, long long n, long long kappa, const std::string& format) {
  const urns::probability_report report = urns::prob_all_boxes_within(m, n, kappa);
  const urns::case_label label = urns::count(urns::problem_spec(m, n, 0, kappa)).label;

  std::ostringstream decimal;
  decimal << std::fixed << std::setprecision(6) << report.decimal_approx;

  if (format == "json") {
    ordered_json inputs;
    inputs["m"] = m;
    inputs["n"] = n;
    inputs["kappa"] = kappa;
    ordered_json result;
    result["numerator"] = report.numerator_count.str();
    result["denominator"] = report.denominator_count.str();
    result["value"] = report.value.str();
    result["decimal"] = report.decimal_approx;
    emit_json(
        make_envelope("prob", std::move(inputs), std::move(result), urns::label_section(label)));
  } else if (format == "tsv") {
    std::cout << "m\tn\tkappa\tnumerator\tdenominator\tvalue\tdecimal\n";
    std::cout << m << '\t' << n << '\t' << kappa << '\t' << report.numerator_count.str() << '\t'
              << report.denominator_count.str() << '\t' << report.value.str() << '\t'
              << decimal.str() << "\n";
  } else {
    std::cout << "P = " << report.numerator_count << "/" << report.denominator_count << " = "
              << report.value.str() << " ≈ " << decimal.str() << "\n";
  }
  return 0;
}

int run_enumerate(long long m, long long n, long long k1, std::optional<long long> k2,
                  std::optional<std::uint64_t> limit) {
  const urns::problem_spec spec(m, n, k1, k2);
  urns::composition_enumerator stream(spec);
  urns::composition parts;
  std::uint64_t printed = 0;
  while ((!limit || printed < *limit) && stream.next(parts)) {
    std::cout << join_parts(parts) << "\n";
    ++printed;
  }
  std::cout << "total " << urns::count(spec).count << "\n";
  return 0;
}

int run_sample(long long m, long long n, long long k1, std::optional<long long> k2,
               std::uint64_t draws, std::uint64_t seed) {
  const urns::problem_spec spec(m, n, k1, k2);
  for (const urns::composition& parts : urns::uniform_sample(spec, seed, draws)) {
    std::cout << join_parts(parts) << "\n";
  }
  return 0;
}

int run_table(const std::string& m_range, const std::string& n_range, long long k1,
              std::optional<long long> k2, const std::string& format) {
  const auto [m_from, m_to] = parse_range(m_range);
  const auto [n_from, n_to] = parse_range(n_range);

  struct row {
    long long m, n;
    urns::count_report report;
  };
  std::vector<row> rows;
  for (long long m = m_from; m <= m_to; ++m) {
    for (long long n = n_from; n <= n_to; ++n) {
      rows.push_back({m, n, urns::count(urns::problem_spec(m, n, k1, k2))});
    }
  }

  if (format == "json") {
    ordered_json inputs;
    inputs["m_from"] = m_from;
    inputs["m_to"] = m_to;
    inputs["n_from"] = n_from;
    inputs["n_to"] = n_to;
    inputs["min"] = k1;
    inputs["max"] = upper_json(k2);
    ordered_json result;
    result["rows"] = ordered_json::array();
    for (const row& r : rows) {
      ordered_json cell;
      cell["m"] = r.m;
      cell["n"] = r.n;
      cell["k1"] = k1;
      cell["k2"] = upper_json(k2);
      cell["count"] = r.report.count.str();
      cell["label"] = urns::label_name(r.report.label);
      cell["section"] = urns::label_section(r.report.label);
      result["rows"].push_back(std::move(cell));
    }
    emit_json(make_envelope("table", std::move(inputs), std::move(result), nullptr));
  } else if (format == "tsv") {
    std::cout << "m\tn\tk1\tk2\tcount\tcase\n";
    for (const row& r : rows) {
      std::cout << r.m << '\t' << r.n << '\t' << k1 << '\t' << upper_cell(k2) << '\t'
                << r.report.count.str() << '\t' << case_string(r.report.label) << "\n";
    }
  } else {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"m", "n", "k1", "k2", "count", "case"});
    for (const row& r : rows) {
      cells.push_back({std::to_string(r.m), std::to_string(r.n), std::to_string(k1),
                       upper_cell(k2), r.report.count.str(), case_string(r.report.label)});
    }
    std::vector<std::size_t> widths(cells[0].size(), 0);
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
    }
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (c + 1 == line.size()) {
          std::cout << line[c];  // last column unpadded
        } else {
          std::cout << std::left << std::setw(static_cast<int>(widths[c])) << line[c] << "  ";
        }
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_verify(long long max_m, long long max_n, long long max_k, unsigned jobs,
               bool inject_fault) {
  const urns::verification_report report =
      urns::verify_grid(max_m, max_n, max_k, jobs, inject_fault);
  for (const urns::grid_mismatch& mm : report.mismatches) {
    std::cout << "mismatch m=" << mm.spec.balls << " n=" << mm.spec.boxes
              << " k1=" << mm.spec.lower << " k2=" << upper_cell(mm.spec.upper)
              << ": closed=" << mm.closed_form_value << " oracle=" << mm.oracle_value << "\n";
  }
  std::cout << "specs checked: " << report.specs_checked << "\n";
  std::cout << report.mismatches.size() << " mismatches\n";
  std::cerr << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed_seconds
            << "s\n";
  return report.mismatches.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of bounded distributions of balls into boxes"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"plain", "json", "tsv"};
  int exit_code = 0;

  long long count_m = 0, count_n = 0, count_min = 0;
  std::optional<long long> count_max;
  std::string count_format = "plain";
  bool count_verbose = false;
  CLI::App* cmd_count = app.add_subcommand("count", "Count the valid distributions of one spec");
  cmd_count->add_option("m", count_m, "number of balls")->required();
  cmd_count->add_option("n", count_n, "number of boxes")->required();
  cmd_count->add_option("--min", count_min, "per-box lower bound k1 (default 0)");
  cmd_count->add_option("--max", count_max, "per-box upper bound k2 (absent = unbounded)");
  cmd_count->add_option("--format", count_format, "output format")
      ->check(CLI::IsMember(formats));
  cmd_count->add_flag("--verbose", count_verbose, "print the inclusion-exclusion term table");
  cmd_count->callback(
      [&] { exit_code = run_count(count_m, count_n, count_min, count_max, count_format,
                                  count_verbose); });

  long long prob_m = 0, prob_n = 0, prob_kappa = 0;
  std::string prob_format = "plain";
  CLI::App* cmd_prob =
      app.add_subcommand("prob", "Probability that every box holds at most kappa balls");
  cmd_prob->add_option("m", prob_m, "number of balls")->required();
  cmd_prob->add_option("n", prob_n, "number of boxes")->required();
  cmd_prob->add_option("--kappa", prob_kappa, "per-box cap")->required();
  cmd_prob->add_option("--format", prob_format, "output format")->check(CLI::IsMember(formats));
  cmd_prob->callback([&] { exit_code = run_prob(prob_m, prob_n, prob_kappa, prob_format); });

  long long enum_m = 0, enum_n = 0, enum_min = 0;
  std::optional<long long> enum_max;
  std::optional<std::uint64_t> enum_limit;
  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "List the valid distributions in lexicographic order");
  cmd_enumerate->add_option("m", enum_m, "number of balls")->required();
  cmd_enumerate->add_option("n", enum_n, "number of boxes")->required();
  cmd_enumerate->add_option("--min", enum_min, "per-box lower bound k1 (default 0)");
  cmd_enumerate->add_option("--max", enum_max, "per-box upper bound k2 (absent = unbounded)");
  cmd_enumerate->add_option("--limit", enum_limit, "print at most this many lines");
  cmd_enumerate->callback(
      [&] { exit_code = run_enumerate(enum_m, enum_n, enum_min, enum_max, enum_limit); });

  long long sample_m = 0, sample_n = 0, sample_min = 0;
  std::optional<long long> sample_max;
  std::uint64_t sample_draws = 1, sample_seed = 0;
  CLI::App* cmd_sample =
      app.add_subcommand("sample", "Draw uniform random distributions (deterministic per seed)");
  cmd_sample->add_option("m", sample_m, "number of balls")->required();
  cmd_sample->add_option("n", sample_n, "number of boxes")->required();
  cmd_sample->add_option("--min", sample_min, "per-box lower bound k1 (default 0)");
  cmd_sample->add_option("--max", sample_max, "per-box upper bound k2 (absent = unbounded)");
  cmd_sample->add_option("--draws", sample_draws, "number of draws (default 1)");
  cmd_sample->add_option("--seed", sample_seed, "random seed (default 0)");
  cmd_sample->callback([&] {
    exit_code = run_sample(sample_m, sample_n, sample_min, sample_max, sample_draws, sample_seed);
  });

  std::string table_m_range, table_n_range;
  long long table_min = 0;
  std::optional<long long> table_max;
  std::string table_format = "plain";
  CLI::App* cmd_table = app.add_subcommand("table", "Counts for a rectangle of (m, n) values");
  cmd_table->add_option("--m-range", table_m_range, "balls range a..b")->required();
  cmd_table->add_option("--n-range", table_n_range, "boxes range c..d")->required();
  cmd_table->add_option("--min", table_min, "per-box lower bound k1 (default 0)");
  cmd_table->add_option("--max", table_max, "per-box upper bound k2 (absent = unbounded)");
  cmd_table->add_option("--format", table_format, "output format")->check(CLI::IsMember(formats));
  cmd_table->callback([&] {
    exit_code = run_table(table_m_range, table_n_range, table_min, table_max, table_format);
  });

  long long verify_max_m = 12, verify_max_n = 6, verify_max_k = 12;
  unsigned verify_jobs = 1;
  bool verify_inject_fault = false;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Cross-check closed forms against the oracle over a grid");
  cmd_verify->add_option("--max-m", verify_max_m, "largest ball count (default 12)")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--max-n", verify_max_n, "largest box count (default 6)")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--max-k", verify_max_k, "largest bound value (default 12)")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--jobs", verify_jobs, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_flag("--inject-fault", verify_inject_fault)->group("");
  cmd_verify->callback([&] {
    exit_code =
        run_verify(verify_max_m, verify_max_n, verify_max_k, verify_jobs, verify_inject_fault);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
