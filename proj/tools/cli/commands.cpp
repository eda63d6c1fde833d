#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "trapcub/oracle.hpp"
#include "trapcub/parallel.hpp"

namespace trapcub::cli {

namespace {

using nlohmann::json;

// Full round-trip precision for machine-readable output.
std::string full(double x) { return fmt::format("{}", x); }

// Display precision of the remainder tables.
std::string sci(double x) { return fmt::format("{:.3e}", x); }

std::string opt_full(const std::optional<double>& x) { return x ? full(*x) : ""; }

json opt_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return OutputFormat::text;
}

const std::map<std::string, std::string> kFormats = {
    {"text", "text"}, {"json", "json"}, {"csv", "csv"}};

}  // namespace

std::vector<TableRow> compute_table(BuiltinId id, std::span<const int> ns) {
  double reference = 0.0;
  switch (id) {
    case BuiltinId::exp_xy: reference = oracle::ref_exp_integral().value; break;
    case BuiltinId::sin_xy: reference = oracle::ref_sin_integral().value; break;
    default:
      throw InvalidArgument("tables are available for exp_xy and sin_xy only");
  }
  const Interval iv(0.0, 1.0);
  const Integrand2D F = make_builtin(id, iv).integrand;
  std::vector<TableRow> rows;
  rows.reserve(ns.size());
  for (const int n : ns) {
    if (n < 1) throw InvalidArgument("table entries need n >= 1");
    const double m1 = s_minus(F, iv, n).value;
    const double m2 = s_minus(F, iv, 2 * n).value;
    const double p1 = s_plus(F, iv, n).value;
    const double p2 = s_plus(F, iv, 2 * n).value;
    const double c = comparison_constant(CubatureRule::s_plus, n);
    rows.push_back({n, reference - m1, 0.5 * std::abs(m2 - m1), reference - p1,
                    c * std::abs(p2 - p1)});
  }
  return rows;
}

std::string format_table(std::span<const TableRow> rows, OutputFormat fmt) {
  std::string out;
  switch (fmt) {
    case OutputFormat::csv:
      out += "n,rem_minus,half_diff_minus,rem_plus,bound_plus\n";
      for (const TableRow& r : rows) {
        out += fmt::format("{},{},{},{},{}\n", r.n, full(r.rem_minus),
                           full(r.half_diff_minus), full(r.rem_plus),
                           full(r.bound_plus));
      }
      break;
    case OutputFormat::json:
      for (const TableRow& r : rows) {
        json j = {{"n", r.n},
                  {"rem_minus", r.rem_minus},
                  {"half_diff_minus", r.half_diff_minus},
                  {"rem_plus", r.rem_plus},
                  {"bound_plus", r.bound_plus}};
        out += j.dump() + "\n";
      }
      break;
    case OutputFormat::text:
      out += fmt::format("{:>5}  {:>11}  {:>17}  {:>11}  {:>25}\n", "n",
                         "R[S_n^-]", "|S_2n^- - S_n^-|/2", "R[S_n^+]",
                         "(4n-1)/(4n-3)|S_2n^+ - S_n^+|");
      for (const TableRow& r : rows) {
        out += fmt::format("{:>5}  {:>11}  {:>17}  {:>11}  {:>25}\n", r.n,
                           sci(r.rem_minus), sci(r.half_diff_minus),
                           sci(r.rem_plus), sci(r.bound_plus));
      }
      break;
  }
  return out;
}

std::vector<TableRow> parse_table_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::vector<TableRow> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream fields(line);
    std::string f[5];
    for (auto& s : f) std::getline(fields, s, ',');
    rows.push_back({std::stoi(f[0]), std::stod(f[1]), std::stod(f[2]),
                    std::stod(f[3]), std::stod(f[4])});
  }
  return rows;
}

std::string format_report(const RefinementReport& report, std::string_view fn,
                          const Interval& iv, OutputFormat fmt) {
  std::string out;
  switch (fmt) {
    case OutputFormat::json: {
      json levels = json::array();
      for (const RefinementLevel& l : report.levels) {
        levels.push_back({{"n", l.n},
                          {"estimate", l.estimate},
                          {"diff", opt_json(l.diff)},
                          {"aposteriori_bound", opt_json(l.aposteriori_bound)},
                          {"table_column", opt_json(l.table_column)},
                          {"total_bound", opt_json(l.total_bound)},
                          {"trace_err_budget", l.trace_err_budget}});
      }
      json j = {{"function", std::string(fn)},
                {"a", iv.a()},
                {"b", iv.b()},
                {"rule", std::string(to_string(report.rule))},
                {"declared_d22_sign", std::string(to_string(report.declared_sign))},
                {"final_n", report.final_n()},
                {"final_value", report.final_value},
                {"final_bound", report.final_bound},
                {"termination", std::string(to_string(report.termination))},
                {"levels", levels}};
      out = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::csv:
      out += fmt::format("# function={} a={} b={} rule={} declared_d22_sign={}\n", fn,
                         full(iv.a()), full(iv.b()), to_string(report.rule),
                         to_string(report.declared_sign));
      out += fmt::format("# final_n={} final_value={} final_bound={} termination={}\n",
                         report.final_n(), full(report.final_value),
                         full(report.final_bound), to_string(report.termination));
      out += "n,estimate,diff,aposteriori_bound,table_column,total_bound,trace_err_budget\n";
      for (const RefinementLevel& l : report.levels) {
        out += fmt::format("{},{},{},{},{},{},{}\n", l.n, full(l.estimate),
                           opt_full(l.diff), opt_full(l.aposteriori_bound),
                           opt_full(l.table_column), opt_full(l.total_bound),
                           full(l.trace_err_budget));
      }
      break;
    case OutputFormat::text: {
      auto cell = [](const std::optional<double>& x) { return x ? sci(*x) : std::string("-"); };
      out += fmt::format("integrand     {} on [{}, {}]^2 (D22 declared {})\n", fn,
                         iv.a(), iv.b(), to_string(report.declared_sign));
      out += fmt::format("rule          {}\n\n", to_string(report.rule));
      out += fmt::format("{:>6}  {:>20}  {:>10}  {:>10}  {:>10}  {:>10}\n", "n",
                         "estimate", "diff", "bound", "table", "total");
      for (const RefinementLevel& l : report.levels) {
        out += fmt::format("{:>6}  {:>20.15f}  {:>10}  {:>10}  {:>10}  {:>10}\n", l.n,
                           l.estimate, cell(l.diff), cell(l.aposteriori_bound),
                           cell(l.table_column), cell(l.total_bound));
      }
      out += fmt::format("\nfinal n       {}\n", report.final_n());
      out += fmt::format("value         {:.15f}\n", report.final_value);
      out += fmt::format("bound         {}\n", sci(report.final_bound));
      out += fmt::format("termination   {}\n", to_string(report.termination));
      break;
    }
  }
  return out;
}

std::string format_scan(const KernelSpec& spec, const ScanReport& report,
                        OutputFormat fmt) {
  const bool is_phi = spec.kind == KernelKind::phi_minus || spec.kind == KernelKind::phi_plus;
  if (fmt == OutputFormat::json) {
    json j = {{"kernel", std::string(to_string(spec.kind))},
              {"n", spec.n},
              {"a", spec.iv.a()},
              {"b", spec.iv.b()},
              {"resolution", report.grid_resolution},
              {"expected_sign", std::string(to_string(report.expected_sign))},
              {"max_abs_value", report.max_abs_value},
              {"slack", report.slack},
              {"violation_count", report.violations.size()},
              {"max_abs_violation", report.max_abs_violation}};
    if (is_phi) j["c"] = spec.c;
    if (!report.passed()) {
      j["worst"] = {{"t", report.worst.t}, {"tau", report.worst.tau}, {"value", report.worst.value}};
    }
    return j.dump(2) + "\n";
  }
  if (fmt == OutputFormat::csv) {
    std::string out = "t,tau,value\n";
    for (const Violation& v : report.violations) {
      out += fmt::format("{},{},{}\n", full(v.t), full(v.tau), full(v.value));
    }
    return out;
  }
  std::string out;
  out += fmt::format("kernel          {} n={}{} on [{}, {}]^2\n", to_string(spec.kind),
                     spec.n, is_phi ? fmt::format(" c={}", spec.c) : std::string(),
                     spec.iv.a(), spec.iv.b());
  out += fmt::format("resolution      {} ({} x {} points)\n", report.grid_resolution,
                     report.grid_resolution + 1, report.grid_resolution + 1);
  out += fmt::format("expected sign   {}\n", to_string(report.expected_sign));
  out += fmt::format("max |kernel|    {}\n", sci(report.max_abs_value));
  out += fmt::format("slack           {}\n", sci(report.slack));
  out += fmt::format("violations      {}\n", report.violations.size());
  if (!report.passed()) {
    out += fmt::format("worst           {} at (t, tau) = ({}, {})\n", sci(report.worst.value),
                       report.worst.t, report.worst.tau);
  }
  out += fmt::format("result          {}\n", report.passed() ? "PASS" : "FAIL");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv("CUBATURE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      err << "CUBATURE_THREADS must be a positive integer, got '" << env << "'\n";
      return kUsage;
    }
    set_thread_limit(static_cast<unsigned>(v));
  }

  CLI::App app{"Definite trapezium-type cubature on [a,b]^2 with certified bounds"};
  app.require_subcommand(1);

  std::string fn, rule = "minus", format = "text";
  double a = 0.0, b = 1.0, tol = 1e-6, trace_tol = 1e-12;
  int n0 = 4, max_n = 1024;
  auto* integrate = app.add_subcommand("integrate", "integrate a builtin with a posteriori stopping");
  integrate->add_option("--fn", fn, "builtin integrand")
      ->required()
      ->check(CLI::IsMember(builtin_names()));
  integrate->add_option("--rule", rule, "minus | plus | mean")
      ->check(CLI::IsMember({"minus", "plus", "mean"}));
  integrate->add_option("--a", a, "left end of [a,b]");
  integrate->add_option("--b", b, "right end of [a,b]");
  integrate->add_option("--n0", n0, "initial n")->check(CLI::PositiveNumber);
  integrate->add_option("--tol", tol, "absolute tolerance")->check(CLI::PositiveNumber);
  integrate->add_option("--max-n", max_n, "largest n to try")->check(CLI::PositiveNumber);
  integrate->add_option("--trace-tol", trace_tol, "Romberg tolerance for inexact traces")
      ->check(CLI::PositiveNumber);
  integrate->add_option("--format", format, "text | json | csv")->check(CLI::IsMember(kFormats));

  std::string table_fn, table_format = "text";
  std::vector<int> n_list = {4, 8, 16, 32, 64, 128};
  auto* table = app.add_subcommand("table", "remainder table on [0,1]^2");
  table->add_option("--fn", table_fn, "exp_xy | sin_xy")
      ->required()
      ->check(CLI::IsMember({"exp_xy", "sin_xy"}));
  table->add_option("--n-list", n_list, "comma-separated n values")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  table->add_option("--format", table_format, "text | json | csv")->check(CLI::IsMember(kFormats));

  std::string kernel, scan_format = "text";
  int scan_n = 4, resolution = 0;
  double c = 1.0, scan_a = 0.0, scan_b = 1.0;
  auto* scan = app.add_subcommand("scan", "grid scan of a Peano kernel's sign");
  scan->add_option("--kernel", kernel, "k22-minus | k22-plus | phi-minus | phi-plus")
      ->required()
      ->check(CLI::IsMember({"k22-minus", "k22-plus", "phi-minus", "phi-plus"}));
  scan->add_option("--n", scan_n, "rule parameter n")->check(CLI::PositiveNumber);
  scan->add_option("--c", c, "comparison constant (phi kernels)")->check(CLI::PositiveNumber);
  scan->add_option("--resolution", resolution, "grid intervals per axis (default 32 n)")
      ->check(CLI::Range(2, 1 << 16));
  scan->add_option("--a", scan_a, "left end of [a,b]");
  scan->add_option("--b", scan_b, "right end of [a,b]");
  scan->add_option("--format", scan_format, "text | json | csv")->check(CLI::IsMember(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*integrate) {
      const Interval iv(a, b);
      const BuiltinIntegrand builtin = make_builtin(parse_builtin(fn), iv);
      const RefineOptions opts{n0, tol, max_n, trace_tol};
      const RefineRule r = rule == "plus" ? RefineRule::s_plus
                           : rule == "mean" ? RefineRule::mean
                                            : RefineRule::s_minus;
      const RefinementReport report = refine(builtin.integrand, iv, r, opts);
      out << format_report(report, builtin.name, iv, parse_format(format));
      return report.termination == Termination::tolerance_met ? kSuccess : kNotConverged;
    }
    if (*table) {
      const auto rows = compute_table(parse_builtin(table_fn), n_list);
      out << format_table(rows, parse_format(table_format));
      return kSuccess;
    }
    if (*scan) {
      const KernelKind kind = kernel == "k22-minus"   ? KernelKind::k22_s_minus
                              : kernel == "k22-plus"  ? KernelKind::k22_s_plus
                              : kernel == "phi-minus" ? KernelKind::phi_minus
                                                      : KernelKind::phi_plus;
      const KernelSpec spec{kind, Interval(scan_a, scan_b), scan_n, c};
      const int res = resolution > 0 ? resolution : 32 * scan_n;
      const ScanReport report = definiteness_scan(spec, proven_sign(kind), res);
      out << format_scan(spec, report, parse_format(scan_format));
      return report.passed() ? kSuccess : kViolation;
    }
  } catch (const ConvergenceFailure& e) {
    err << "error: " << e.what() << "\n";
    return kNotConverged;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace trapcub::cli
