#pragma once

#include <optional>
#include <string>
#include <vector>

namespace riordan {

struct VerifyReport {
  std::string id;
  bool pass = false;
  std::string witness;  // first failing detail; empty iff pass
  double elapsed_ms = 0.0;
};

struct ClaimInfo {
  std::string id;
  std::string description;
  unsigned default_n;
};

/// Fixed registry order; `verify --claim all` reports in this order.
const std::vector<ClaimInfo>& claim_registry();

bool is_known_claim(const std::string& id);

/// Runs one claim; n overrides the claim's default depth.
VerifyReport run_claim(const std::string& id, std::optional<unsigned> n = std::nullopt);

std::vector<VerifyReport> run_all_claims(std::optional<unsigned> n = std::nullopt);

}  // namespace riordan
