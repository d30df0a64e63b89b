#include "gelfand/report.hpp"

#include <algorithm>
#include <sstream>

namespace gelfand {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::merge(const Report& other) {
  for (Check c : other.checks) {
    c.name = other.scope + "/" + c.name;
    checks.push_back(std::move(c));
  }
  if (!other.data.empty()) data[other.scope] = other.data;
}

nlohmann::json Report::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) j["witness"] = c.witness;
    list.push_back(std::move(j));
  }
  return {{"scope", scope}, {"n", n}, {"passed", passed()}, {"checks", std::move(list)},
          {"data", data}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "verify " << scope << " n=" << n << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << " (" << c.cases << " cases)";
    if (!c.passed) os << " witness: " << c.witness;
    os << '\n';
  }
  return os.str();
}

bool CheckBuilder::expect(bool ok, const std::string& witness_if_failed) {
  return expect_lazy(ok, [&] { return witness_if_failed; });
}

void CheckBuilder::fail(const std::string& witness) {
  ++check_.cases;
  if (check_.passed) {
    check_.passed = false;
    check_.witness = witness;
  }
}

}  // namespace gelfand
