#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "polymatroid/cone.hpp"

namespace pm {

struct PipelineOptions {
  int max_n = 5;
  std::optional<std::string> rays_from;  // precomputed rays for n = max_n
  double budget_seconds = 3600.0;
  int jobs = 1;
};

struct PipelineResult {
  bool pass = false;
  nlohmann::ordered_json certificate;
};

// Runs the whole verification: for every n up to max_n, enumerate (or import)
// the extreme rays, classify them up to isomorphism, apply the elimination
// rules, and verify the survivors. PASS requires every reference count and
// representative set to match and no class to report a star violation. The
// certificate carries machine-checkable witnesses for each step.
PipelineResult run_verification(const PipelineOptions& options);

}  // namespace pm
