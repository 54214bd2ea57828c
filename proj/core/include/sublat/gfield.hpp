#pragma once

// Exact arithmetic in GF(p^n) with elements stored as their base-p integer
// index: the coefficient vector (c_0, ..., c_{n-1}) of the residue polynomial
// maps to sum c_i p^i.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sublat::gf {

using Index = std::uint32_t;

/// Coefficient sequence over Z_p, constant term first.
using Polynomial = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;

bool is_prime(std::uint64_t n);

/// True iff `poly` (monic, degree >= 1, coefficients in [0, p)) has no
/// nontrivial factorisation over Z_p. Degree <= 3 is decided by root search,
/// higher degrees by trial division against all monic irreducibles of degree
/// at most half.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// All monic irreducibles of the given degree, in ascending constant-first
/// lexicographic order.
std::vector<Polynomial> monic_irreducibles(std::uint32_t p, std::uint32_t degree);

/// Lexicographically smallest monic irreducible of degree n, comparing
/// coefficient sequences constant term first.
Polynomial smallest_irreducible(std::uint32_t p, std::uint32_t n);

/// Renders a polynomial in x, highest degree first, e.g. "x^2+1".
std::string format_polynomial(std::span<const std::uint32_t> poly);

namespace detail {
struct FieldData;
}

class Element;

/// A validated finite field GF(p^n). Cheap to copy; all copies share one
/// immutable table set.
class Field {
 public:
  /// Throws NonPrimeCharacteristic, InvalidModulus, ReduciblePolynomial, or
  /// CapExceeded when q > 2^16.
  static Field make(std::uint32_t p, std::uint32_t n,
                    std::optional<Polynomial> modulus = std::nullopt);

  /// GF(q) for a prime power q with the default modulus.
  static Field of_order(std::uint64_t q);

  std::uint32_t p() const noexcept;
  std::uint32_t n() const noexcept;
  std::uint32_t q() const noexcept;
  const Polynomial& modulus() const noexcept;

  // Index-level arithmetic. Operands must be < q; no field identity checks.
  Index add(Index a, Index b) const noexcept;
  Index sub(Index a, Index b) const noexcept;
  Index neg(Index a) const noexcept;
  Index mul(Index a, Index b) const noexcept;
  Index inv(Index a) const;  // ZeroInverse on 0
  Index pow(Index a, std::uint64_t e) const noexcept;

  std::vector<std::uint32_t> coeffs(Index a) const;
  Index from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Polynomial spelling of an element, e.g. "2x+2", "x", "0".
  std::string format(Index a) const;

  Element element(Index a) const;
  Element zero() const;
  Element one() const;
  /// All q elements in ascending index order; index 0 is zero.
  std::vector<Element> all_elements() const;

  /// Two fields are the same when characteristic and modulus agree.
  bool operator==(const Field& other) const noexcept;

  /// e.g. "GF(9) = Z_3[x]/(x^2+1)"
  std::string describe() const;

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

/// An immutable element bound to its field.
class Element {
 public:
  Element(Field field, Index index);

  const Field& field() const noexcept { return field_; }
  Index index() const noexcept { return index_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(index_); }
  bool is_zero() const noexcept { return index_ == 0; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element inverse() const;

  /// Elements of different fields compare unequal.
  bool operator==(const Element& o) const noexcept;

  std::string to_string() const { return field_.format(index_); }

 private:
  void require_same(const Element& o) const;

  Field field_;
  Index index_;
};

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element inv(const Element& a);

}  // namespace sublat::gf
