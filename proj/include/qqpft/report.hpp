#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qqpft {

/// Outcome of one identity or theorem check. pass <=> max_abs_error <= tolerance
/// (a NaN error never passes).
struct VerificationReport {
  std::string name;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string grid;
  std::string parameters;
  std::optional<std::uint64_t> seed;
  /// Secondary measurements that are reported but not asserted.
  std::map<std::string, double> details;

  static VerificationReport make(std::string name, double error, double tolerance, std::string grid = {},
                                 std::string parameters = {}) {
    VerificationReport r;
    r.name = std::move(name);
    r.max_abs_error = error;
    r.tolerance = tolerance;
    r.pass = error <= tolerance;
    r.grid = std::move(grid);
    r.parameters = std::move(parameters);
    return r;
  }
};

}  // namespace qqpft
