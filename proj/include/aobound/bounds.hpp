#pragma once

#include "aobound/bigint.hpp"
#include "aobound/constants.hpp"
#include "aobound/magnitude.hpp"

#include <optional>
#include <set>
#include <vector>

namespace aobound {

/// Exponent in "more than c x^(1-eps) primes below x" and its constant.
inline const Rational kPrimeDensityEpsilon{1, 4};
inline const Rational kPrimeDensityConstant{1, 2};
/// delta in deg V > c1 * Pi_V^delta.
inline const Rational kDelta{1, 4};

struct SubvarietyProblem {
  long dim_Z = 1;
  Integer deg_Z = 1;
};

void validate(const SubvarietyProblem& problem);

/// The simply connected cover H~ = prod Res H'_i of a special subvariety's
/// group, plus its bad primes.
struct SpecialSubgroupData {
  std::vector<GroupFactor> factors;
  std::set<std::uint64_t> sigma_V;
  Integer index_lower = 1;  ///< lower bound for [K(H~)^m : K(H~)]
  Integer pi_tilde = 1;     ///< Pi(H~, K(H~)^m), 1 when unknown
};

void validate(const SpecialSubgroupData& data, long ambient_rank);

/// prod_i (prod_j m_ij! / (2 pi)^(m_ij + 1))^[K_i : Q].
Magnitude prasad_factor(const SpecialSubgroupData& data,
                        unsigned bits = kDefaultPrecisionBits);

/// Lower bound for the volume of Gamma(H) \ X_H^+.
Magnitude volume_lower_bound(const ConstantsLedger& ledger,
                             const SpecialSubgroupData& data,
                             unsigned bits = kDefaultPrecisionBits);

struct C1Delta {
  Magnitude c1;
  Rational delta;
  /// Integer T at or above c3, c5, C^4 and (C / c4)^(4/3).
  Integer threshold;
  /// True when prod_{p <= T} was bounded via pi(T) <= T, prod p <= 4^T
  /// instead of sieving.
  bool chebyshev_product = false;
};

C1Delta synthesize_c1_delta(const ConstantsLedger& ledger,
                            unsigned bits = kDefaultPrecisionBits);

/// min(c4 p, sqrt p) / C >= p^(1/4), certified at p.
Certified certify_c1_boundary(const ConstantsLedger& ledger, const Integer& p,
                              unsigned bits = kDefaultPrecisionBits);

/// The `count` smallest primes above the threshold (consecutive integers when
/// the threshold is beyond 64-bit primality testing).
std::vector<Integer> boundary_points(const Integer& threshold, int count);

/// c1 * Pi_V^delta.  Nondecreasing as sigma_V grows.
Magnitude degree_lower_bound(const ConstantsLedger& ledger,
                             const SpecialSubgroupData& data,
                             unsigned bits = kDefaultPrecisionBits);

/// max(degree_lower_bound, volume_lower_bound).  Both are lower bounds for
/// deg V; the volume term shrinks by C^-1 per bad prime unless index_lower or
/// pi_tilde grow with it, so this one is not monotone in sigma_V.
Magnitude best_lower_bound(const ConstantsLedger& ledger,
                           const SpecialSubgroupData& data,
                           unsigned bits = kDefaultPrecisionBits);

/// p^(2f+k) * deg^2.
Magnitude iteration_step(const ConstantsLedger& ledger, const Magnitude& deg,
                         const Integer& p, unsigned bits = kDefaultPrecisionBits);

/// c(eps)^(-1/(1-eps)) [ln(x/c1) / (delta ln 2) + N + 1]^(1/(1-eps)), rounded up.
Magnitude admissible_prime_ceiling(const ConstantsLedger& ledger, const Magnitude& x,
                                   const Integer& N,
                                   unsigned bits = kDefaultPrecisionBits);

/// F(x) = [d P(x)^(2f+k)]^t deg_Z^(2^t), t = max(dim_Z - 2, 0).
Magnitude cutting_bound(const ConstantsLedger& ledger, const SubvarietyProblem& problem,
                        const Integer& N, const Magnitude& x,
                        unsigned bits = kDefaultPrecisionBits);

struct FinalBoundOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  /// Search ceiling on log2 x; exceeding it raises OverflowError.
  Integer max_log2{"1000000000000000000000000000000"};
};

struct FinalBound {
  Magnitude x0;
  /// Set when x0 is an exact integer (the dim_Z <= 2 clamp).
  std::optional<Integer> exact;
  /// x0 = 2^log2_x0 on the search grid (unset for the clamp).
  std::optional<Integer> log2_x0;
  Magnitude f_at_x0;
  Magnitude f_at_2x0;
  Certified below_at_x0 = Certified::yes;
  Certified below_at_2x0 = Certified::yes;
  Certified slope_below_one = Certified::yes;
  long evaluations = 0;
};

FinalBound final_degree_bound(const ConstantsLedger& ledger,
                              const SubvarietyProblem& problem, const Integer& N,
                              const FinalBoundOptions& options = {});

/// Certifies slope(log2 F, log2 x) < 1 at x = 2^m.
Certified certify_slope_below_one(const ConstantsLedger& ledger,
                                  const SubvarietyProblem& problem, const Integer& N,
                                  const Integer& m, unsigned bits = kDefaultPrecisionBits);

}  // namespace aobound
