#pragma once

// Runs every reproducible claim as a named check. Check names are stable.

#include <functional>
#include <string>
#include <vector>

#include "arrlab/catalog.hpp"
#include "arrlab/json_io.hpp"

namespace arrlab {

enum class CheckStatus { Pass, Fail, Unsupported, Skipped };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string citation;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;  // no Fail
  int count(CheckStatus s) const;
};

struct VerifyOptions {
  bool skip_slow = false;
  int threads = 1;
  /// Catalog source; tests substitute a tampered one.
  std::function<catalog::CatalogEntry(const std::string&)> catalog = catalog::entry;
};

VerifyReport run_verify(const VerifyOptions& opts = {});

/// Elapsed times are left out unless asked for, so output is byte-stable.
Json to_json(const VerifyReport& r, bool timings = false);
std::string to_text(const VerifyReport& r, bool timings = false);

}  // namespace arrlab
