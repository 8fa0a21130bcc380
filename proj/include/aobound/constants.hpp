#pragma once

#include "aobound/bigint.hpp"
#include "aobound/magnitude.hpp"
#include "aobound/rootsys.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aobound {

/// A Q-simple factor Res_{F/Q} of the given split type, [F:Q] = degree.
struct GroupFactor {
  RootDatumSpec type;
  int degree = 1;
};

/// Largest total rank accepted; A = (2^r)! is carried as an exact integer.
inline constexpr long kMaxAmbientRank = 12;

/// Description of the ambient adjoint group G, its representation and level.
struct AmbientDatumSpec {
  std::vector<GroupFactor> factors;
  long rep_dim = 2;                   ///< n = dim of the faithful representation
  std::uint64_t bad_prime_ceiling = 2;  ///< N: K_p hyperspecial for all p >= N
  std::set<std::uint64_t> declared_sigma;  ///< Sigma(G, K), all < N
};

void validate(const AmbientDatumSpec& spec);

struct RankAndDim {
  long rank = 0;
  long dim = 0;
};

RankAndDim rank_and_dim(const AmbientDatumSpec& spec);

/// 2^r: the largest prod (r_i + 1) over splittings of total rank <= r.
Integer bound_B(long total_rank);
Integer bound_B(const AmbientDatumSpec& spec);

/// Minkowski's bound on the order of a finite subgroup of GL_r(Z).
Integer minkowski_bound(long r);

/// Character-coordinate bound D for total rank r and representation
/// dimension n; throws CapExceeded when weight enumeration hits the cap.
Integer bound_D(long total_rank, long rep_dim, long weight_cap = kDefaultWeightCap);
Integer bound_D(const AmbientDatumSpec& spec, long weight_cap = kDefaultWeightCap);

/// Maxima of |W|, |Phi+| and 2 * (largest highest-root mark) over semisimple
/// types with total rank <= r and total dimension <= dim.
struct SubgroupMaxima {
  Integer weyl_order;
  long positive_roots = 0;
  long local_mark = 0;
};

SubgroupMaxima subgroup_maxima(long total_rank, long total_dim);

using LedgerValue = std::variant<Integer, Rational, Magnitude>;

struct LedgerEntry {
  std::string name;
  LedgerValue value;
  std::string provenance;
  std::string formula;
};

/// Ordered table of named constants.  Lookups throw DomainError for unknown
/// names or mismatched kinds.
class ConstantsLedger {
 public:
  void set(std::string name, LedgerValue value, std::string provenance,
           std::string formula);

  bool contains(std::string_view name) const;
  const LedgerEntry& entry(std::string_view name) const;
  const std::vector<LedgerEntry>& entries() const noexcept { return entries_; }

  const Integer& integer(std::string_view name) const;
  const Rational& rational(std::string_view name) const;
  /// Magnitude entries as stored; integer entries are converted at `bits`.
  Magnitude magnitude(std::string_view name, unsigned bits = kDefaultPrecisionBits) const;

  friend bool operator==(const ConstantsLedger& a, const ConstantsLedger& b);

 private:
  std::vector<LedgerEntry> entries_;
};

/// Names every assembled ledger carries, in report order.
const std::vector<std::string>& ledger_entry_names();
/// Provenance tags a ledger entry may carry.
const std::set<std::string>& known_provenances();

struct AssembleOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  long weight_cap = kDefaultWeightCap;
};

ConstantsLedger assemble_ledger(const AmbientDatumSpec& spec,
                                const AssembleOptions& options = {});

/// One line per entry: `<name>=<kind>:<value>|prov:<provenance>|formula:<formula>`
/// with kind int, rat or log2 (log2 carries "<low>,<high>").
std::string serialize_ledger(const ConstantsLedger& ledger, std::string_view prefix = "");

/// Inverse of serialize_ledger; lines without the prefix are skipped.
ConstantsLedger parse_ledger(std::string_view text, std::string_view prefix = "");

std::string format_value(const LedgerValue& value);

}  // namespace aobound
