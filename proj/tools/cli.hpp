#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qqpft/qqpft.hpp"
#include "qqpft/uncertainty.hpp"

namespace qqpft::cli {

/// exit_code: 0 success, 1 some asserted check failed, 2 usage or I/O error.
struct CommandResult {
  int exit_code = 0;
  nlohmann::json report;
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteOptions {
  std::size_t n = 16;
  double extent = 12.0;
  std::uint64_t seed = 0;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "parseval",       "fast-vs-direct", "shift",
                                              "modulation", "hausdorff-young", "special-cases",  "split-lemma"};
  return names;
}

/// Runs one named suite ("all" runs every suite in suite_names() order) and
/// returns its report objects. Throws std::invalid_argument for unknown names.
nlohmann::json run_suite(const std::string& name, const SuiteOptions& options);

/// "a,b,c,d,e" -> QPFTParams.
QPFTParams parse_params(const std::string& text);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const UPReport& r, const std::string& parameters = {});

/// True iff every report object passed (unasserted ones are ignored).
bool all_pass(const nlohmann::json& reports);

}  // namespace qqpft::cli
