#pragma once

// The lattice L(V) of all subspaces of GF(q)^m, built exhaustively.
//
// Elements are ordered by ascending dimension, then lexicographically on the
// RREF basis matrix; element 0 is {0} and the last element is V.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sublat/gfield.hpp"
#include "sublat/linvec.hpp"
#include "sublat/order.hpp"

namespace sublat::lattice {

inline constexpr std::uint64_t kLatticeCap = 100000;

using Count = std::uint64_t;

/// Number of d-dimensional subspaces of GF(q)^m, a_m / (a_d a_{m-d}) with
/// a_n = prod_{i=1}^n (q^i - 1). Exact; throws DomainError if d > m or the
/// result does not fit in 64 bits.
Count gaussian_count(std::uint64_t q, unsigned m, unsigned d);

/// (q^m - 1)/(q - 1). Requires m >= 1.
Count atom_count(std::uint64_t q, unsigned m);

/// Covers above a d-dimensional subspace: (q^{m-d} - 1)/(q - 1). d < m.
Count upper_covers_count(std::uint64_t q, unsigned m, unsigned d);

/// Covers below a d-dimensional subspace: (q^d - 1)/(q - 1). d > 0.
Count lower_covers_count(std::uint64_t q, unsigned m, unsigned d);

/// Sum of gaussian_count over d = 0..m.
Count total_subspaces(std::uint64_t q, unsigned m);

class SubspaceLattice;

SubspaceLattice build_lattice(const gf::Field& field, std::size_t m, std::uint64_t cap = kLatticeCap);

class SubspaceLattice {
 public:
  const gf::Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return m_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::uint32_t bottom() const noexcept { return 0; }
  std::uint32_t top() const noexcept { return static_cast<std::uint32_t>(elements_.size() - 1); }

  const lin::Subspace& element(std::uint32_t i) const { return elements_.at(i); }
  std::span<const lin::Subspace> elements() const noexcept { return elements_; }
  std::size_t dim(std::uint32_t i) const { return elements_.at(i).dim(); }

  std::optional<std::uint32_t> index_of(const lin::Subspace& u) const;
  /// index_of that throws DomainError when u is not in this lattice's ambient.
  std::uint32_t require_index(const lin::Subspace& u) const;

  bool leq(std::uint32_t a, std::uint32_t b) const;
  /// All b with a <= b, ascending.
  std::span<const std::uint32_t> up_set(std::uint32_t a) const { return up_.at(a); }
  std::span<const std::uint32_t> upper_covers(std::uint32_t a) const { return upper_.at(a); }
  std::span<const std::uint32_t> lower_covers(std::uint32_t a) const { return lower_.at(a); }
  std::uint32_t perp(std::uint32_t a) const { return perp_.at(a); }

  /// Subspace sum, looked up.
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const;
  /// Subspace intersection, looked up.
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const;

  std::vector<std::uint32_t> atoms() const;
  std::vector<std::uint32_t> coatoms() const;

  /// "GF(9) = Z_3[x]/(x^2+1), m=2"
  std::string describe() const;

 private:
  friend SubspaceLattice build_lattice(const gf::Field&, std::size_t, std::uint64_t);

  struct KeyHash {
    std::size_t operator()(const std::vector<gf::Index>& k) const noexcept;
  };

  SubspaceLattice(gf::Field field, std::size_t m) : field_(std::move(field)), m_(m) {}

  gf::Field field_;
  std::size_t m_;
  std::vector<lin::Subspace> elements_;
  std::unordered_map<std::vector<gf::Index>, std::uint32_t, KeyHash> index_;
  std::vector<std::vector<std::uint32_t>> up_;
  std::vector<std::vector<std::uint32_t>> upper_;
  std::vector<std::vector<std::uint32_t>> lower_;
  std::vector<std::uint32_t> perp_;
};

/// Lower covers computed from leq alone (generic transitive reduction),
/// independent of how the lattice stored its cover lists.
std::vector<std::vector<std::uint32_t>> transitive_reduction(const SubspaceLattice& lattice);

/// Chain condition over the transitive reduction of leq. Besides equal
/// lengths, requires the common length to equal dim(U) for every U.
order::ChainCheck chain_condition_check(const SubspaceLattice& lattice);

struct CountProfile {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::vector<Count> by_dimension;
  Count atom_count = 0;
  /// Distinct numbers of upper / lower covers seen per dimension.
  std::vector<std::set<Count>> upper_cover_counts;
  std::vector<std::set<Count>> lower_cover_counts;

  bool operator==(const CountProfile&) const = default;
};

/// Profile counted off a built lattice.
CountProfile count_profile(const SubspaceLattice& lattice);

/// Profile from the closed-form counts.
CountProfile expected_profile(std::uint64_t q, unsigned m);

struct DotOptions {
  bool show_basis = false;
  bool show_perp = false;
};

/// Hasse diagram of the cover relation as a DOT digraph, ranked by dimension.
std::string export_dot(const SubspaceLattice& lattice, const DotOptions& options = {});

}  // namespace sublat::lattice
