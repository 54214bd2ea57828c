#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sublat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrimeCharacteristic : public Error {
 public:
  using Error::Error;
};

class ReduciblePolynomial : public Error {
 public:
  using Error::Error;
};

/// Modulus not monic, wrong degree, or coefficient out of range.
class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroInverse : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotOrthogonalBasis : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class OverlapViolation : public Error {
 public:
  using Error::Error;
};

class TrivialInput : public Error {
 public:
  using Error::Error;
};

/// An order that was expected to be a lattice lacks a join or meet.
class NotALattice : public Error {
 public:
  using Error::Error;
};

/// An exhaustive operation would exceed its enumeration cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : Error(what + ": " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

}  // namespace sublat
