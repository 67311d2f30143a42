#pragma once

// Reflection quasilattices as finite-rank integer modules.
//
// Each module carries two descriptions:
//   * the published basis together with a coefficient rule (membership is
//     decided by solving for the coefficients and checking the rule, or for
//     H4 by the half-golden form plus the mod-2 parity constraints), and
//   * a Z-basis computed by Hermite reduction from generators implied by
//     the rule, used for sampling, scaling and lattice-coordinate solves.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/exact_vector.hpp"
#include "qlat/linalg.hpp"
#include "qlat/root_system.hpp"

namespace qlat {

enum class QLId { I2_5, I2_8, I2_12, H3_Primitive, H3_Fcc, H3_Bcc, H4 };

/// Rows of the classification table, in table order.
const std::vector<QLId>& all_ql_ids();
std::string to_string(QLId id);
/// Accepts names like "H4", "H3-bcc", "H3-3", "I2-5", "I2-10" (same module as I2-5).
QLId parse_ql_id(std::string_view text);
RootSystemId root_system_of(QLId id);

enum class CoefficientRule { Unrestricted, EvenSum, AllIntegerOrAllHalf, H4Parity };
std::string to_string(CoefficientRule rule);

struct Membership {
  bool member = false;
  /// Coefficients on the published basis (empty when the form check fails).
  RationalVector coefficients;
  std::string reason;  // empty for members
};

class QLModule {
 public:
  QLId id() const { return id_; }
  const RootSystemId& system() const { return system_; }
  const Frame& frame() const { return frame_; }
  int kappa() const { return frame_.kappa; }
  std::size_t dim() const { return frame_.dim(); }
  std::size_t rank() const { return 2 * dim(); }
  CoefficientRule rule() const { return rule_; }

  /// Published basis (2d vectors).
  const std::vector<ExactVector>& basis() const { return basis_; }
  /// A Z-basis of the module.
  const std::vector<ExactVector>& lattice_basis() const { return lattice_basis_; }

  Membership membership(const ExactVector& v) const;
  bool contains(const ExactVector& v) const { return membership(v).member; }

  /// Coordinates on lattice_basis() when v is in the module.  This route
  /// does not consult the coefficient rule.
  std::optional<IntegerVector> lattice_coordinates(const ExactVector& v) const;
  ExactVector from_lattice_coordinates(const std::vector<long long>& c) const;

  /// Random member with lattice coordinates uniform in [-box, box].
  ExactVector sample(std::mt19937_64& rng, int box) const;

  /// Float rendering of the lattice basis (frame-embedded).
  std::vector<FloatVector> float_lattice_basis() const;

 private:
  friend QLModule ql(QLId id);
  void check_vector(const ExactVector& v) const;

  QLId id_ = QLId::H4;
  RootSystemId system_;
  Frame frame_;
  CoefficientRule rule_ = CoefficientRule::Unrestricted;
  std::vector<ExactVector> basis_;
  std::vector<ExactVector> lattice_basis_;
  RationalMatrix basis_inverse_;    // expanded coords -> published coefficients
  RationalMatrix lattice_inverse_;  // expanded coords -> lattice coordinates
};

QLModule ql(QLId id);

/// Module spanned (over Z) by the given vectors, as a Z-basis in expanded
/// coordinates; used to compare modules.
std::vector<RationalVector> span_basis(const std::vector<ExactVector>& generators);

/// --- H4 residues -----------------------------------------------------------

/// Mod-2 class of (m_i, n_i) for lambda = (1/2){m_i + n_i tau}.
struct H4Residue {
  std::array<int, 4> m{};
  std::array<int, 4> n{};
  friend auto operator<=>(const H4Residue&, const H4Residue&) = default;
};

/// True when the parity constraints hold for every even permutation.
bool satisfies_h4_parity(const std::array<Integer, 4>& m, const std::array<Integer, 4>& n);
bool is_allowed_residue(const H4Residue& r);
/// All 256 classes filtered by the parity constraints, sorted.
std::vector<H4Residue> enumerate_h4_residues();
/// Residue of a half-golden vector; nullopt when a coordinate is outside (1/2)Z[tau].
std::optional<H4Residue> residue_of(const ExactVector& v);
/// Representative (1/2){m + n tau} with m, n in {0, 1}.
ExactVector residue_vector(const H4Residue& r);

struct GoldenMultipleWitness {
  QuadraticNumber multiplier;  // golden integer
  ExactVector root;
};
/// Finds a golden integer g and an H4 root r with residue(g r) == residue.
/// Throws DomainError for residues outside the allowed set.
std::optional<GoldenMultipleWitness> golden_multiple_of_root(const H4Residue& r);
bool residue_is_golden_multiple_of_root(const H4Residue& r);

/// --- Scale invariance -------------------------------------------------------

enum class ScaleVerdict { Invariant, ProperSublattice, NotClosed };
std::string to_string(ScaleVerdict v);

struct ScaleClassification {
  ScaleVerdict verdict = ScaleVerdict::NotClosed;
  Integer index = 0;      // |det| when closed (1 for invariant)
  RationalMatrix action;  // multiplication by factor^power in lattice coordinates
};

/// Classifies factor^power * QL against QL.  The factor must be a unit of
/// the QL's quadratic ring.
ScaleClassification scale_classification(const QLModule& ql, const QuadraticNumber& factor,
                                         long long power);

struct Table1Row {
  QLId id;
  int kappa = 5;
  QuadraticNumber fundamental_unit;
  QuadraticNumber expected_factor;
  int expected_power = 1;
  QuadraticNumber derived_factor;
  int minimal_power = 0;  // 0 when no invariant power <= max searched
  bool negation_invariant = false;
  bool pass = false;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  std::size_t passed() const;
};

Table1Report verify_table1();

/// --- Root containment --------------------------------------------------------

struct RootCopyWitness {
  bool found = false;
  QuadraticNumber scale;  // c with c * Phi inside the module
  ExactVector member;     // member used for the doubling argument
  ExactVector root;       // mirror normal used
};

/// Runs the reflection-doubling argument: for a member m and root r,
/// m - s_r(m) = c r lies in the module, and c * Phi is then checked exactly.
/// The scale is reduced by factors of two while containment persists.
RootCopyWitness contains_root_copy(const QLModule& ql);

/// Smallest nonzero float norm over members with lattice coordinates in
/// [-box, box]; a finite-box proxy for the density of the module.
double min_nonzero_norm(const QLModule& ql, int box);

/// Minimum distance between two members whose published-basis coefficients
/// obey the rule and lie in [-box, box]: the smallest nonzero norm over
/// rule-satisfying coefficient vectors in [-2 box, 2 box].
double min_pairwise_distance(const QLModule& ql, int box);

}  // namespace qlat
