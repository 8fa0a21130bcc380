#pragma once

#include "aobound/bigint.hpp"
#include "aobound/lattice.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace aobound {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One irreducible reduced root system, e.g. {Family::E, 8}.
///
/// Node numbering and root realizations follow Bourbaki (see docs/conventions.md).
struct RootDatumSpec {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A1", "E8", ...; throws DomainError naming the problem.
  static RootDatumSpec parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const RootDatumSpec&, const RootDatumSpec&) = default;
  friend auto operator<=>(const RootDatumSpec&, const RootDatumSpec&) = default;
};

bool is_valid(const RootDatumSpec& spec);
void validate(const RootDatumSpec& spec);

/// Coordinates in the simple-root basis.
using RootVector = std::vector<int>;
/// Highest-weight coordinates in the fundamental-weight basis, all >= 0.
using WeightVector = std::vector<long>;

/// A[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
IntMatrix cartan_matrix(const RootDatumSpec& spec);

/// |P(R)/Q(R)| = |det A|.
Integer center_order(const RootDatumSpec& spec);

/// Positive roots ordered by height, ties broken lexicographically.
std::vector<RootVector> positive_roots(const RootDatumSpec& spec);

/// Exponents m_1 <= ... <= m_rank, read off the root-height partition.
std::vector<int> exponents(const RootDatumSpec& spec);

/// |W| = prod (m_j + 1).
Integer weyl_order(const RootDatumSpec& spec);

/// Dimension of the irreducible representation with highest weight lambda.
Integer weyl_dim(const RootDatumSpec& spec, const WeightVector& lambda);

/// Raised when enumeration would need a weight coordinate at or above the cap.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr long kDefaultWeightCap = 1L << 20;

/// Every dominant lambda with weyl_dim(spec, lambda) <= n, in lexicographic order.
std::vector<WeightVector> dominant_weights_up_to_dim(const RootDatumSpec& spec,
                                                     const Integer& n,
                                                     long coordinate_cap = kDefaultWeightCap);

/// Highest-root coefficients followed by the affine node's 1.
std::vector<int> highest_root_marks(const RootDatumSpec& spec);

/// Exact A^{-1}; column i holds the fundamental weight omega_i in the
/// simple-root basis.
RatMatrix inverse_cartan(const RootDatumSpec& spec);

/// Dimension of the split simple Lie algebra (classical table).
long split_dimension(const RootDatumSpec& spec);

/// Every valid irreducible type with rank <= max_rank (B2 and C2, A3 and D3
/// are listed separately).
std::vector<RootDatumSpec> irreducible_types_up_to_rank(int max_rank);

/// Precomputed positive coroots for repeated dimension evaluations.
class WeylDimension {
 public:
  explicit WeylDimension(const RootDatumSpec& spec);
  Integer operator()(const WeightVector& lambda) const;
  int rank() const noexcept { return rank_; }

 private:
  int rank_;
  std::vector<RootVector> coroots_;
  Integer denominator_;
};

}  // namespace aobound
