#pragma once

// Vectors over GF(q) with the dot form a.b = sum a_i b_i, and subspaces held
// as their unique reduced row echelon basis.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sublat/gfield.hpp"

namespace sublat::lin {

/// Upper bound on q^m for any operation that walks vectors one by one.
inline constexpr std::uint64_t kVectorCap = std::uint64_t{1} << 20;

class Vector {
 public:
  /// Throws DimensionMismatch for an empty entry list, DomainError for an
  /// entry outside the field.
  Vector(gf::Field field, std::vector<gf::Index> entries);
  Vector(gf::Field field, std::initializer_list<gf::Index> entries)
      : Vector(std::move(field), std::vector<gf::Index>(entries)) {}

  static Vector zero(gf::Field field, std::size_t m);
  /// e_i, zero-based i.
  static Vector unit(gf::Field field, std::size_t m, std::size_t i);

  const gf::Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  std::span<const gf::Index> entries() const noexcept { return entries_; }
  gf::Index operator[](std::size_t i) const { return entries_[i]; }
  gf::Element at(std::size_t i) const { return field_.element(entries_[i]); }
  bool is_zero() const noexcept;

  Vector operator+(const Vector& o) const;
  Vector scaled(gf::Index c) const;

  bool operator==(const Vector& o) const noexcept;

  /// "(1,x)" style with polynomial spelling of each entry.
  std::string to_string() const;

 private:
  gf::Field field_;
  std::vector<gf::Index> entries_;
};

/// Throws DimensionMismatch or FieldMismatch.
gf::Element dot(const Vector& a, const Vector& b);

/// a != 0 and a.a = 0.
bool is_isotropic(const Vector& a);

/// A linear subspace of GF(q)^m, stored as its RREF basis (r x m, row-major).
/// The zero subspace has r = 0 and an empty basis.
class Subspace {
 public:
  static Subspace zero(gf::Field field, std::size_t m);
  static Subspace full(gf::Field field, std::size_t m);

  /// Wraps a matrix that is already in reduced row echelon form. Throws
  /// DomainError when it is not.
  static Subspace from_rref(gf::Field field, std::size_t m, std::vector<gf::Index> basis);

  const gf::Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_ == 0 ? 0 : basis_.size() / m_; }
  std::span<const gf::Index> basis() const noexcept { return basis_; }
  std::span<const gf::Index> row_span(std::size_t i) const {
    return std::span<const gf::Index>(basis_).subspan(i * m_, m_);
  }
  Vector row(std::size_t i) const;
  std::vector<Vector> rows() const;
  std::vector<std::size_t> pivots() const;

  bool contains(const Vector& v) const;
  /// Containment of row spaces; throws AmbientMismatch.
  bool is_subspace_of(const Subspace& other) const;
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_full() const noexcept { return dim() == m_; }

  bool operator==(const Subspace& o) const noexcept;
  /// Ascending dimension, then lexicographic on the basis matrix.
  std::strong_ordering operator<=>(const Subspace& o) const noexcept;

  /// "<(0,1),(1,0)>" or "{0}".
  std::string to_string() const;

 private:
  Subspace(gf::Field field, std::size_t m, std::vector<gf::Index> basis)
      : field_(std::move(field)), m_(m), basis_(std::move(basis)) {}

  friend Subspace rref(const gf::Field&, std::size_t, std::span<const Vector>);
  friend Subspace rref_rows(const gf::Field&, std::size_t, std::vector<gf::Index>);
  friend Subspace orthocomplement(const Subspace&);

  gf::Field field_;
  std::size_t m_;
  std::vector<gf::Index> basis_;
};

/// Canonical basis of the row span. Throws DimensionMismatch / FieldMismatch
/// when rows disagree with (field, m).
Subspace rref(const gf::Field& field, std::size_t m, std::span<const Vector> rows);
/// Same, on a raw row-major matrix with m columns.
Subspace rref_rows(const gf::Field& field, std::size_t m, std::vector<gf::Index> matrix);
/// Span of a nonempty set of vectors.
Subspace span_of(std::span<const Vector> rows);

/// All q^r vectors of u, coefficient tuples over the basis in lexicographic
/// order (first basis row most significant). Throws CapExceeded.
std::vector<Vector> members(const Subspace& u, std::uint64_t cap = kVectorCap);

/// {x : x.y = 0 for all y in u}.
Subspace orthocomplement(const Subspace& u);

/// Lattice join.
Subspace sum(const Subspace& u, const Subspace& w);

/// Lattice meet, via the kernel of (a, b) -> aU - bW.
Subspace intersect(const Subspace& u, const Subspace& w);

/// Basis of {x : A x = 0} for a row-major rows x cols matrix A, in RREF.
std::vector<gf::Index> nullspace(const gf::Field& field, std::size_t rows, std::size_t cols,
                                 std::vector<gf::Index> matrix);

/// Visits every vector of GF(q)^m in lexicographic order, leftmost coordinate
/// most significant. The callback returns false to stop. Throws CapExceeded.
void for_each_vector(const gf::Field& field, std::size_t m,
                     const std::function<bool(std::span<const gf::Index>)>& visit,
                     std::uint64_t cap = kVectorCap);

/// First isotropic vector in lexicographic order, if any.
std::optional<Vector> find_isotropic(const gf::Field& field, std::size_t m,
                                     std::uint64_t cap = kVectorCap);

}  // namespace sublat::lin
