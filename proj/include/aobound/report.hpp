#pragma once

#include "aobound/config.hpp"
#include "aobound/verify.hpp"

#include <string>

namespace aobound {

inline constexpr unsigned kMaxEscalatedBits = 1024;

struct RunOutput {
  std::string report;
  unsigned precision_bits = kDefaultPrecisionBits;  ///< precision that succeeded
  bool verify_passed = true;
};

/// Assembles the ledger, evaluates the requested bounds and renders the
/// report.  An IndeterminateError triggers a retry at doubled precision, up to
/// kMaxEscalatedBits; after that it propagates, as do OverflowError and
/// DomainError.
RunOutput run(const RunConfig& config, const VerifyProviders& providers = {});

/// The log2 of a Magnitude rendered "lo..hi" with 6 decimals, for text reports.
std::string describe(const Magnitude& m);

}  // namespace aobound
