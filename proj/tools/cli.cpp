#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finrel/binomial.hpp"
#include "finrel/errors.hpp"
#include "finrel/finite.hpp"
#include "finrel/infinite.hpp"
#include "finrel/oracle.hpp"
#include "finrel/tabulate.hpp"

namespace finrel::cli {
namespace {

using nlohmann::json;

// Bad flag values that CLI11 cannot see (probabilities are parsed by hand).
struct UsageProblem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sig4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string percent_and_value(double v) { return format_percent(v) + "% (" + sig4(v) + ")"; }

Probability probability_arg(const std::string& text, const char* flag) {
  const auto value = parse_probability(text);
  if (!value) throw UsageProblem(std::string("invalid probability for ") + flag + ": '" + text + "'");
  return Probability(*value);
}

json plan_json(const TestEvidence& ev, const CLI::Option* m_opt, Count m) {
  json j{{"n", ev.n}, {"f", ev.f}};
  if (m_opt->count() > 0) {
    j["m"] = m;
  } else {
    j["m"] = "inf";
  }
  return j;
}

struct Evidence {
  Count n = 0;
  Count f = 0;
  Count m = 0;
  CLI::Option* m_opt = nullptr;
  bool infinite = false;
  std::string format = "text";

  [[nodiscard]] TestEvidence evidence() const { return {n, f}; }
  [[nodiscard]] bool finite() const { return m_opt->count() > 0; }
  [[nodiscard]] FinitePlan plan() const { return {evidence(), m}; }
};

void add_evidence(CLI::App* sub, Evidence& e, bool with_m) {
  sub->add_option("-n", e.n, "Number of tested samples")->required();
  sub->add_option("-f", e.f, "Failures among the tested samples")->default_val(0);
  if (with_m) {
    e.m_opt = sub->add_option("-m", e.m, "Additional samples that will be produced");
    auto* inf = sub->add_flag("--infinite", e.infinite, "Unbounded population (default)");
    e.m_opt->excludes(inf);
  }
  sub->add_option("--format", e.format, "Output format")->check(CLI::IsMember({"text", "json"}))->default_val("text");
}

int emit(std::ostream& out, const std::string& format, const json& j, const std::string& text) {
  if (format == "json") {
    out << j.dump() << '\n';
  } else {
    out << text << '\n';
  }
  return kSuccess;
}

int cmd_confidence(const Evidence& e, const std::string& r_text, std::ostream& out) {
  const Probability r = probability_arg(r_text, "-r");
  const Probability c = e.finite() ? confidence_finite(e.plan(), r) : confidence_infinite(e.evidence(), r);
  json j = plan_json(e.evidence(), e.m_opt, e.m);
  j["quantity"] = "confidence";
  j["reliability"] = r.value();
  j["value"] = c.value();
  return emit(out, e.format, j, percent_and_value(c.value()));
}

int cmd_reliability(const Evidence& e, const std::string& c_text, std::ostream& out) {
  const Probability c = probability_arg(c_text, "-c");
  const Probability r = e.finite() ? reliability_finite(e.plan(), c) : reliability_infinite(e.evidence(), c);
  json j = plan_json(e.evidence(), e.m_opt, e.m);
  j["quantity"] = "reliability";
  j["confidence"] = c.value();
  j["value"] = r.value();
  return emit(out, e.format, j, percent_and_value(r.value()));
}

int cmd_assurance(const Evidence& e, std::ostream& out) {
  json j = plan_json(e.evidence(), e.m_opt, e.m);
  j["quantity"] = "assurance";
  if (!e.finite()) {
    const double a = assurance_infinite(e.evidence()).value();
    j["value"] = a;
    return emit(out, e.format, j, percent_and_value(a));
  }
  const AssuranceResult res = assurance_finite(e.plan());
  j["value"] = res.assurance;
  j["achieved_at_d"] = res.achieved_at_d;
  j["reliability_at"] = res.reliability_at;
  j["confidence_at"] = res.confidence_at;
  const std::string text = format_percent(res.assurance) + "% (achieved at d=" + std::to_string(res.achieved_at_d) +
                           ", reliability " + sig4(res.reliability_at) + ", confidence " +
                           sig4(res.confidence_at) + ")";
  return emit(out, e.format, j, text);
}

struct TableArgs {
  Count n_min = kDefaultTableRows.first;
  Count n_max = kDefaultTableRows.last;
  Count m_min = kDefaultTableColumns.first;
  Count m_max = kDefaultTableColumns.last;
  Count f = 0;
  bool no_infinite = false;
  std::string format = "csv";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const AssuranceTable table = assurance_table({a.n_min, a.n_max}, {a.m_min, a.m_max}, !a.no_infinite, a.f);
  if (a.format == "json") {
    out << to_json(table) << '\n';
  } else {
    out << to_csv(table);
  }
  return kSuccess;
}

int cmd_grid(const Evidence& e, std::ostream& out) {
  const FinitePlan plan = e.plan();
  const auto steps = step_grid(plan);
  if (e.format == "json") {
    out << to_json(plan, steps) << '\n';
  } else {
    out << to_csv(steps);
  }
  return kSuccess;
}

struct SeriesArgs {
  Count n = 0;
  Count f = 0;
  std::vector<Count> m_values{10, 20, 30};
  bool no_infinite = false;
  int resolution = 100;
  std::string axis = "step";
  std::string format = "csv";
};

int emit_series(const std::vector<PlotSeries>& series, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(series) << '\n';
  } else {
    out << to_csv(series);
  }
  return kSuccess;
}

struct VerifyArgs {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 20231019;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  bool all_passed = true;
  json probes = json::array();
  for (const auto& probe : default_coverage_probes()) {
    const CoverageOutcome o = check_coverage(probe, a.trials, a.seed);
    all_passed = all_passed && o.passed;
    probes.push_back({{"n", probe.evidence.n},
                      {"f", probe.evidence.f},
                      {"reliability", probe.reliability},
                      {"estimate", o.estimate.probability},
                      {"standard_error", o.estimate.standard_error},
                      {"analytic", o.analytic},
                      {"passed", o.passed}});
    if (a.format == "text") {
      char line[200];
      std::snprintf(line, sizeof line, "%s coverage n=%lld f=%lld r=%g: estimate=%.6f analytic=%.6f se=%.2e",
                    o.passed ? "PASS" : "FAIL", static_cast<long long>(probe.evidence.n),
                    static_cast<long long>(probe.evidence.f), probe.reliability, o.estimate.probability, o.analytic,
                    o.estimate.standard_error);
      out << line << '\n';
    }
  }

  Count mismatches = 0;
  for (Count n = 1; n <= 25; ++n) {
    for (Count f = 0; f <= std::min<Count>(3, n); ++f) {
      for (Count m = 1; m <= 40; ++m) {
        const FinitePlan plan{{n, f}, m};
        const AssuranceResult lib = assurance_finite(plan);
        const AssuranceResult ref = enumerate_assurance_oracle(plan);
        if (lib.assurance != ref.assurance || lib.achieved_at_d != ref.achieved_at_d) ++mismatches;
      }
    }
  }
  all_passed = all_passed && mismatches == 0;
  if (a.format == "json") {
    out << json{{"trials", a.trials},
                {"seed", a.seed},
                {"coverage", probes},
                {"enumeration_mismatches", mismatches},
                {"passed", all_passed}}
               .dump()
        << '\n';
  } else {
    out << (mismatches == 0 ? "PASS" : "FAIL") << " enumeration n<=25 f<=3 m<=40: " << mismatches
        << " mismatches\n";
  }
  return all_passed ? kSuccess : kVerificationFailure;
}

}  // namespace

std::optional<double> parse_probability(std::string_view text) {
  bool percent = false;
  if (!text.empty() && text.back() == '%') {
    percent = true;
    text.remove_suffix(1);
  }
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return percent ? value / 100.0 : value;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reliability, confidence and assurance for pass/fail test campaigns"};
  app.require_subcommand(1);

  Evidence conf_args;
  std::string r_text;
  auto* conf = app.add_subcommand("confidence", "Confidence that reliability is at least r");
  add_evidence(conf, conf_args, true);
  conf->add_option("-r", r_text, "Reliability, e.g. 0.9 or 90%")->required();

  Evidence rel_args;
  std::string c_text;
  auto* rel = app.add_subcommand("reliability", "Minimum reliability at confidence c");
  add_evidence(rel, rel_args, true);
  rel->add_option("-c", c_text, "Confidence, e.g. 0.9 or 90%")->required();

  Evidence assur_args;
  auto* assur = app.add_subcommand("assurance", "Assurance: reliability and confidence held at the same level");
  add_evidence(assur, assur_args, true);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Assurance table over n and m at fixed f");
  table->add_option("--n-min", table_args.n_min, "First tested-sample row")->capture_default_str();
  table->add_option("--n-max", table_args.n_max, "Last tested-sample row")->capture_default_str();
  table->add_option("--m-min", table_args.m_min, "First additional-sample column")->capture_default_str();
  table->add_option("--m-max", table_args.m_max, "Last additional-sample column")->capture_default_str();
  table->add_option("-f", table_args.f, "Failures among the tested samples")->capture_default_str();
  table->add_flag("--no-infinite", table_args.no_infinite, "Omit the unbounded-population column");
  table->add_option("--format", table_args.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  Evidence grid_args;
  auto* grid = app.add_subcommand("grid", "Discrete reliability steps of a finite plan");
  grid->add_option("-n", grid_args.n, "Number of tested samples")->required();
  grid->add_option("-f", grid_args.f, "Failures among the tested samples")->default_val(0);
  grid_args.m_opt = grid->add_option("-m", grid_args.m, "Additional samples that will be produced")->required();
  grid_args.format = "csv";
  grid->add_option("--format", grid_args.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Plot-ready data series");
  series->require_subcommand(1);
  auto add_series_opts = [&](CLI::App* s, bool with_m) {
    s->add_option("-n", series_args.n, "Number of tested samples")->required();
    s->add_option("-f", series_args.f, "Failures among the tested samples")->default_val(0);
    if (with_m) {
      s->add_option("-m", series_args.m_values, "Additional sample counts")->capture_default_str();
      s->add_flag("--no-infinite", series_args.no_infinite, "Omit the unbounded-population curve");
    }
    s->add_option("--resolution", series_args.resolution, "Grid points per curve")->capture_default_str();
    s->add_option("--format", series_args.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };
  auto* series_conf = series->add_subcommand("confidence", "Confidence against reliability");
  add_series_opts(series_conf, true);
  series_conf->add_option("--axis", series_args.axis, "Plot finite steps at step or overall reliability")
      ->check(CLI::IsMember({"step", "overall"}))
      ->capture_default_str();
  auto* series_rel = series->add_subcommand("reliability", "Reliability against confidence");
  add_series_opts(series_rel, true);
  auto* series_cross = series->add_subcommand("assurance-crossing", "Reliability and confidence over failure probability");
  add_series_opts(series_cross, false);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Monte Carlo and enumeration self-checks");
  verify->add_option("--trials", verify_args.trials, "Monte Carlo trials per probe")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed, "Random seed")->capture_default_str();
  verify->add_option("--format", verify_args.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (conf->parsed()) return cmd_confidence(conf_args, r_text, out);
    if (rel->parsed()) return cmd_reliability(rel_args, c_text, out);
    if (assur->parsed()) return cmd_assurance(assur_args, out);
    if (table->parsed()) return cmd_table(table_args, out);
    if (grid->parsed()) return cmd_grid(grid_args, out);
    if (series_conf->parsed() || series_rel->parsed() || series_cross->parsed()) {
      const TestEvidence ev{series_args.n, series_args.f};
      const bool with_inf = !series_args.no_infinite;
      if (series_conf->parsed()) {
        const StepAxis axis = series_args.axis == "overall" ? StepAxis::kOverall : StepAxis::kStep;
        return emit_series(confidence_series(ev, series_args.m_values, with_inf, series_args.resolution, axis),
                           series_args.format, out);
      }
      if (series_rel->parsed()) {
        return emit_series(reliability_series(ev, series_args.m_values, with_inf, series_args.resolution),
                           series_args.format, out);
      }
      return emit_series(assurance_crossing_series(ev, series_args.resolution), series_args.format, out);
    }
    if (verify->parsed()) return cmd_verify(verify_args, out);
  } catch (const UsageProblem& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace finrel::cli
