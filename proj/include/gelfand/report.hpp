#pragma once

// Verification reports shared by the model modules and the CLI.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gelfand {

/// One named identity checked over `cases` instances. A failing check carries
/// the first witness found (n, generator, involution, class ...).
struct Check {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::string witness;
};

struct Report {
  std::string scope;
  int n = 0;
  std::vector<Check> checks;
  /// Scope-specific payload (character tables, class counts).
  nlohmann::json data = nlohmann::json::object();

  bool passed() const;
  /// Appends every check of `other`, prefixing names with its scope.
  void merge(const Report& other);

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Accumulates a Check while cases are evaluated. Only the first failure is kept as witness.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

  /// Records one case; returns `ok` so callers can short-circuit.
  bool expect(bool ok, const std::string& witness_if_failed = {});
  template <typename WitnessFn>
  bool expect_lazy(bool ok, WitnessFn&& witness) {
    ++check_.cases;
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.witness = witness();
    }
    return ok;
  }
  void fail(const std::string& witness);
  Check finish() const { return check_; }

 private:
  Check check_;
};

}  // namespace gelfand
