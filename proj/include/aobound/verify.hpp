#pragma once

#include "aobound/bigint.hpp"
#include "aobound/config.hpp"
#include "aobound/rootsys.hpp"

#include <functional>
#include <string>
#include <vector>

namespace aobound {

/// The functions under test.  Tests swap entries to check that a broken
/// implementation is caught.
struct VerifyProviders {
  std::function<Integer(const RootDatumSpec&)> center_order = aobound::center_order;
  std::function<std::vector<int>(const RootDatumSpec&)> exponents = aobound::exponents;
  std::function<Integer(const RootDatumSpec&)> weyl_order = aobound::weyl_order;
  std::function<Integer(long)> minkowski_bound = aobound::minkowski_bound;
};

struct InvariantResult {
  std::string name;  ///< e.g. "det_cartan_identity", "prime_density"
  bool passed = true;
  std::string detail;  ///< first failure, empty on success
};

struct VerifySummary {
  std::vector<InvariantResult> results;
  bool passed() const;
};

/// fast: rank <= 4, 100 matrices, density to 10^5.
/// full: rank <= 8, 1000 matrices, density to 10^6.
VerifySummary verify(VerifyLevel level, const VerifyProviders& providers = {});

/// One "name: ok" or "name: FAIL (detail)" line per invariant.
std::string format_summary(const VerifySummary& summary);

}  // namespace aobound
