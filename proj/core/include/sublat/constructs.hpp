#pragma once

// Constructive results on L(V): the isotropy threshold m(q), the explicit
// sum-of-squares bounds on it, orthogonal bases and the Boolean subalgebras
// they generate, and the horizontal sum 2^m + 2^2 sitting inside L(V).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sublat/gfield.hpp"
#include "sublat/lattice.hpp"
#include "sublat/linvec.hpp"
#include "sublat/props.hpp"

namespace sublat::constructs {

/// Divisibility-based upper bounds on m(q) for characteristic p.
struct BoundReport {
  std::uint32_t p = 0;

  /// 6 | (p-1)(2p-1): (1, 2, ..., p-1) is isotropic, so m(q) <= p-1.
  bool first_applies = false;
  std::uint32_t first_bound = 0;
  std::vector<std::uint32_t> first_witness;

  /// p > 2 and 24 | (p+1)(p-1): (1, 2, ..., (p-1)/2) is isotropic.
  bool second_applies = false;
  std::uint32_t second_bound = 0;
  std::vector<std::uint32_t> second_witness;

  /// p > 2 and p = -1 mod 3, which forces the first hypothesis.
  bool corollary_applies = false;
  std::uint32_t corollary_bound = 0;
};

/// Throws NonPrimeCharacteristic.
BoundReport thm5_bounds(std::uint32_t p);

struct MqResult {
  std::uint32_t q = 0;
  gf::Polynomial modulus;
  std::uint32_t m_q = 0;
  /// m_q nonzero elements (by index) whose squares sum to zero.
  std::vector<gf::Index> witness;
  BoundReport bounds;
  /// Each applicable bound is >= m_q.
  bool bounds_hold = true;
};

/// Least k >= 2 with nonzero a_1..a_k, sum a_i^2 = 0, by iterating the set of
/// reachable k-fold sums of nonzero squares.
MqResult compute_mq(const gf::Field& field);

/// True iff |B| distinct vectors, pairwise orthogonal, with nonzero
/// self-products. Throws DimensionMismatch if B.size() != m.
bool is_orthogonal_basis(std::span<const lin::Vector> basis);

/// Field membership for a subset of a parent lattice.
struct ClosureWitness {
  std::string op;  // "+", "^" or "perp"
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t result = 0;  // parent index, not in the subset
};

struct SubPoset {
  std::uint32_t q = 0;
  std::size_t m = 0;
  gf::Polynomial modulus;
  /// Parent indices, ascending.
  std::vector<std::uint32_t> elements;
  /// Induced order and restricted orthocomplement; join/meet are the
  /// induced least upper / greatest lower bounds.
  props::OrthoLattice order;
  bool is_subuniverse = false;
  std::optional<ClosureWitness> closure_witness;
  props::Verdict orthomodular_as_poset;

  std::optional<std::uint32_t> local_index(std::uint32_t parent_index) const;
};

/// Restricts a parent lattice to `members` (which must contain bounds and be
/// closed under perp).
SubPoset induced_subposet(const lattice::SubspaceLattice& parent, std::vector<std::uint32_t> members);

struct BooleanSubalgebra {
  SubPoset poset;
  /// parent index of <b_i : i in I> for every bitmask I.
  std::vector<std::uint32_t> by_subset;
  /// I -> U_I is an order isomorphism taking union to +, intersection to ^
  /// and set complement to perp.
  bool power_set_isomorphism = false;
  /// <b_i : i in I>^perp = <b_i : i not in I> for all I.
  bool complement_identity = false;
};

/// Throws NotOrthogonalBasis.
BooleanSubalgebra boolean_subalgebra(const lattice::SubspaceLattice& parent, std::span<const lin::Vector> basis);

/// The power-set lattice 2^k with set complement. Labels are "0", "1" for the
/// bounds and prefix + "{i,j}" otherwise (1-based).
props::OrthoLattice boolean_algebra(unsigned k, const std::string& prefix = "");

/// Glues two ortholattices at their bounds; cross-component joins are 1 and
/// meets 0. Throws TrivialInput for a factor with <= 2 elements,
/// OverlapViolation when non-bound labels collide, DomainError when a factor
/// is not an ortholattice.
props::OrthoLattice horizontal_sum(const props::OrthoLattice& first, const props::OrthoLattice& second);

/// An order isomorphism a -> b as a map of indices, optionally also
/// commuting with the complements.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const props::OrthoLattice& a,
                                                           const props::OrthoLattice& b, bool preserve_perp);

struct HorizontalSumSubposet {
  SubPoset poset;
  /// U_I for the standard basis, by bitmask I.
  std::vector<std::uint32_t> coordinate;
  std::uint32_t w = 0;       // <(1,...,1)>
  std::uint32_t w_perp = 0;  // its orthocomplement
  /// Order- and complement-isomorphic to horizontal_sum(2^m, 2^2).
  bool matches_horizontal_sum = false;
};

/// S = {U_I : I subset of {1..m}} u {W, W^perp}, W = <(1,...,1)>. Throws
/// HypothesisViolated when p | m or m < 2.
HorizontalSumSubposet horizontal_sum_subposet(const lattice::SubspaceLattice& parent);
HorizontalSumSubposet horizontal_sum_subposet(const gf::Field& field, std::size_t m);

struct M2Report {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  /// {(x, y) : 1 <= x <= y <= p/2}
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  /// First pair with p | x^2 + y^2.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> divisible;
  /// A divisible pair rules out orthomodularity for any q = p^n.
  bool predicts_not_orthomodular = false;
  /// Prime fields only: orthomodular iff no pair is divisible.
  std::optional<bool> predicted_orthomodular;
  bool orthomodular = false;  // check_orthomodular on L(GF(q)^2)
  std::optional<std::size_t> mn;
  std::optional<std::size_t> mon;
  /// Every applicable prediction matched, M_{q+1} recognised, and
  /// MO_{(q+1)/2} whenever orthomodular.
  bool consistent = false;
};

/// Runs all parts for q = p; for n > 1 only the divisible-pair implication is
/// evaluated and predicted_orthomodular stays empty.
M2Report m2_theorem_check(const gf::Field& field);

}  // namespace sublat::constructs
