#include "girard/report.hpp"

#include <iomanip>
#include <sstream>

namespace girard {

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs_digest"] = inputs_digest;
  j["version"] = version;
  j["seed"] = seed;
  j["totals"] = {{"checks", total()}, {"failed", failed()}};
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["pass"] = c.pass;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    if (c.error) jc["error"] = *c.error;
    j["checks"].push_back(std::move(jc));
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "girard " << version << " | " << command << '\n';
  out << "inputs: " << inputs_digest << "  seed: " << seed << '\n';
  for (const auto& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.anchor
        << ']';
    if (c.error) out << "  err=" << std::scientific << std::setprecision(3)
                     << *c.error;
    if (!c.witness.empty()) out << "  witness: " << c.witness;
    out << '\n';
  }
  out << (pass() ? "PASS" : "FAIL") << "  " << (total() - failed()) << '/'
      << total() << " checks\n";
  return out.str();
}

std::string digest(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace girard
