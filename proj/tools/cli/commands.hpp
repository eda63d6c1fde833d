#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cli/builtins.hpp"
#include "trapcub/adaptive.hpp"
#include "trapcub/kernels.hpp"

namespace trapcub::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,
  kUsage = 2,
  kNotConverged = 3,
};

enum class OutputFormat { text, json, csv };

/// One row of the remainder table for the pair (n, 2n).
struct TableRow {
  int n;
  double rem_minus;          ///< I - S_n^-
  double half_diff_minus;    ///< |S_{2n}^- - S_n^-| / 2
  double rem_plus;           ///< I - S_n^+
  double bound_plus;         ///< (4n-1)/(4n-3) |S_{2n}^+ - S_n^+|
};

/// Remainders on [0,1]^2 against the series reference values.
/// Only exp_xy and sin_xy have reference values.
std::vector<TableRow> compute_table(BuiltinId id, std::span<const int> ns);

std::string format_table(std::span<const TableRow> rows, OutputFormat fmt);

/// Inverse of format_table(rows, csv).
std::vector<TableRow> parse_table_csv(const std::string& csv);

std::string format_report(const RefinementReport& report, std::string_view fn,
                          const Interval& iv, OutputFormat fmt);

std::string format_scan(const KernelSpec& spec, const ScanReport& report,
                        OutputFormat fmt);

/// Entry point shared by the executable and the tests. Subcommands:
/// integrate, table, scan. Honors CUBATURE_THREADS.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trapcub::cli
