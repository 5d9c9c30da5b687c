#ifndef GIRARD_REPORT_HPP
#define GIRARD_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace girard {

inline constexpr const char* kVersion = "0.1.0";

/// One verified law or construction step in a CLI report. The anchor names
/// the statement being exercised so reports read as a traceability table.
struct CheckResult {
  std::string name;
  std::string anchor;
  bool pass = true;
  std::string witness;  ///< counterexample description when failing
  std::optional<double> error;
};

struct Report {
  std::string command;
  std::string inputs_digest;
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  void add(std::string name, std::string anchor, bool pass,
           std::string witness = "",
           std::optional<double> error = std::nullopt) {
    checks.push_back(
        {std::move(name), std::move(anchor), pass, std::move(witness), error});
  }

  int total() const { return static_cast<int>(checks.size()); }
  int failed() const {
    int f = 0;
    for (const auto& c : checks)
      if (!c.pass) ++f;
    return f;
  }
  bool pass() const { return failed() == 0; }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// FNV-1a digest of the input description, rendered as hex.
std::string digest(std::string_view data);

}  // namespace girard

#endif
