#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pantslab::cli {

enum ExitCode : int { kSuccess = 0, kFailedVerdict = 1, kUsageError = 2 };

struct IntRange {
  int lo = 0;
  int hi = 0;  ///< inclusive

  /// "lo:hi" or a single integer.
  static IntRange parse(const std::string& text);
};

enum class SweepFormat { json, csv };

struct SweepSpec {
  std::optional<IntRange> k_range;
  std::optional<IntRange> t_range;
  std::optional<int> max_a;
  std::string output;  ///< empty: standard output
  SweepFormat format = SweepFormat::json;
  int threads = 0;  ///< 0: OpenMP default; 1: serial reference path

  /// Exactly one of (k and t ranges) or max_a.
  void validate() const;
};

/// Runs one command line (args excludes the program name). Writes results to
/// `out` and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pantslab::cli
