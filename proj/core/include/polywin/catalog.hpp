#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polywin/formats.hpp"

namespace polywin {

struct CatalogOptions {
  int jobs = 1;
  bool cross_check = true;
  uint64_t position_cap = 10'000'000;   // priority verifier
  uint64_t solver_node_cap = 2'000'000'000;
};

struct ClaimOutcome {
  bool ok = false;
  std::string detail;
};

struct EntryReport {
  std::string name;
  bool ok = false;
  std::vector<std::string> lines;
};

struct CatalogReport {
  bool ok = false;
  std::vector<EntryReport> entries;
  std::vector<std::string> global_lines;  // cross-entry checks

  std::string text() const;
};

// Verify one claim against its witness; used by run_all and the CLI.
ClaimOutcome verify_claim(const CatalogEntry& entry, const Claim& claim,
                          const CatalogOptions& opts);

// Verify every witness, close the evidence under monotone implications, run
// the threshold and consistency checks and the solver cross-checks.
CatalogReport run_all(const Catalog& cat, const CatalogOptions& opts = {});

}  // namespace polywin
