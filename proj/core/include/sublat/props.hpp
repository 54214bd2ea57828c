#pragma once

// Exhaustive decision procedures for the lattice laws, run over a finite
// bounded lattice with a unary map held as dense join/meet tables.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sublat/lattice.hpp"

namespace sublat::props {

/// Largest lattice for which dense n x n tables are built.
inline constexpr std::size_t kTableCap = 2048;

/// A finite bounded lattice (L, <=, join, meet, ', 0, 1) with labelled
/// elements. The unary map is not assumed to be an involution; the checkers
/// decide that.
class OrthoLattice {
 public:
  /// Empty; only useful as a placeholder to assign into.
  OrthoLattice() = default;

  /// Tables from the subspace operations (sum, intersection, orthocomplement).
  /// Throws CapExceeded above `cap` elements.
  static OrthoLattice from_subspace_lattice(const lattice::SubspaceLattice& lattice,
                                            std::size_t cap = kTableCap);

  /// Join and meet taken as least upper / greatest lower bounds of `leq`.
  /// Throws DomainError if `leq` is not a partial order and NotALattice if a
  /// bound is missing.
  static OrthoLattice from_order(std::vector<std::string> labels,
                                 const std::function<bool(std::uint32_t, std::uint32_t)>& leq,
                                 std::vector<std::uint32_t> complement);

  /// Explicit tables; `leq` is derived as a <= b iff join(a, b) == b.
  static OrthoLattice from_tables(std::vector<std::string> labels, std::vector<std::uint32_t> join,
                                  std::vector<std::uint32_t> meet, std::vector<std::uint32_t> complement);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t bottom() const noexcept { return bottom_; }
  std::uint32_t top() const noexcept { return top_; }
  bool leq(std::uint32_t a, std::uint32_t b) const noexcept {
    return (leq_[std::size_t{a} * words_ + b / 64] >> (b % 64)) & 1u;
  }
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const noexcept { return join_[std::size_t{a} * n_ + b]; }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const noexcept { return meet_[std::size_t{a} * n_ + b]; }
  std::uint32_t perp(std::uint32_t a) const noexcept { return perp_[a]; }
  const std::string& label(std::uint32_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::uint32_t> find_label(const std::string& label) const;

  /// Elements covering bottom / covered by top.
  std::vector<std::uint32_t> atoms() const;
  std::vector<std::uint32_t> coatoms() const;
  /// Generic transitive reduction of leq: lower_covers()[b] lists a < b with
  /// nothing strictly between.
  std::vector<std::vector<std::uint32_t>> lower_covers() const;

 private:
  void set_leq(std::uint32_t a, std::uint32_t b) { leq_[std::size_t{a} * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }
  void find_bounds();

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::uint32_t bottom_ = 0;
  std::uint32_t top_ = 0;
  std::vector<std::uint64_t> leq_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> perp_;
  std::vector<std::string> labels_;
};

struct Verdict {
  bool holds = true;
  /// Element indices of the first failing tuple in index order.
  std::vector<std::uint32_t> witness;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<std::uint32_t> w, std::string why) { return {false, std::move(w), std::move(why)}; }
  bool operator==(const Verdict&) const = default;
};

/// x <= z implies x v (y ^ z) = (x v y) ^ z. Witness (x, y, z).
Verdict check_modular(const OrthoLattice& L);
/// Every element is the join of the atoms below it. Witness (x).
Verdict check_atomistic(const OrthoLattice& L);
/// x'' = x (witness (x)) and x <= y implies y' <= x' (witness (x, y)).
Verdict check_antitone_involution(const OrthoLattice& L);
/// (x ^ y)' = x' v y'. Witness (x, y).
Verdict check_de_morgan(const OrthoLattice& L);
/// x v x' = 1 and x ^ x' = 0. Witness (x).
Verdict check_complementation(const OrthoLattice& L);
/// Re-checks involution, antitonicity and complementation, then
/// x <= y implies y = x v (x' ^ y) (witness (x, y)).
Verdict check_orthomodular(const OrthoLattice& L);
/// x <= y and x' ^ y = 0 imply x = y. Witness (x, y).
Verdict check_paraorthomodular(const OrthoLattice& L);
/// Equal-length maximal chains from 0 to every element. Witness (x).
Verdict check_chain_condition(const OrthoLattice& L);

/// First x where exactly one of x ^ x' = 0 and x v x' = 1 holds. In L(V)
/// the dimension identity rules this out.
std::optional<std::uint32_t> complement_conditions_diverge(const OrthoLattice& L);

/// n if L is M_n: height 2 with n >= 2 pairwise incomparable middle
/// elements, each both an atom and a coatom.
std::optional<std::size_t> recognize_Mn(const OrthoLattice& L);

/// n if L is M_{2n} and ' pairs the 2n atoms off with a' != a.
std::optional<std::size_t> recognize_MOn(const OrthoLattice& L);

inline const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {"modular",          "atomistic",        "antitone_involution",
                                                 "complementation",  "orthomodular",     "paraorthomodular",
                                                 "chain_condition"};
  return names;
}

struct PropertyReport {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::size_t m = 0;
  std::size_t size = 0;
  std::map<std::string, Verdict> verdicts;
  std::optional<std::size_t> mn;
  std::optional<std::size_t> mon;

  bool operator==(const PropertyReport&) const = default;
};

/// Every law, for one subspace lattice. The chain condition is taken from
/// lattice::chain_condition_check, which also pins chain length to dim.
PropertyReport check_all(const lattice::SubspaceLattice& lattice);
PropertyReport check_all(const lattice::SubspaceLattice& lattice, const OrthoLattice& tables);

}  // namespace sublat::props
