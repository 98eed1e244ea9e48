#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetatop/fixtures.hpp"

namespace zetatop {

enum class CheckStatus { pass, fail, expected_diff };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  int criterion = 0;
  std::string group;
  std::string fixture;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyOptions {
  // Restricts the run to one group of verify_groups().
  std::optional<std::string> only;
  int jobs = 1;
  int budget = 64;
  // Bounds for the exploration group; empty means the default box.
  std::string bounds;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
};

// zeta, monodromy, resolve, family, explore, properties
const std::vector<std::string>& verify_groups();

// Replays every reference computation against the catalog's expected values.
// Failures inside a check are reported, never thrown; an unknown group throws
// ValidationError.
VerifyReport run_verify(const FixtureCatalog& catalog, const VerifyOptions& opt = {});

std::string render_text(const VerifyReport& r);
std::string render_json(const VerifyReport& r);

}  // namespace zetatop
