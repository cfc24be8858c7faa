#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <string_view>

namespace hopfcoh {

using Index = std::uint64_t;
using Elem = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction would exceed the configured ambient-dimension guard.
class ResourceGuardError : public Error {
 public:
  ResourceGuardError(const std::string& what, Index required, Index limit)
      : Error(what), required_(required), limit_(limit) {}
  Index required() const { return required_; }
  Index limit() const { return limit_; }

 private:
  Index required_;
  Index limit_;
};

/// A structure failed its axioms; violations lists the failing checks by name.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::vector<std::string> violations)
      : Error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Characteristic of the ground field: 0 for the rationals, otherwise a prime below 2^31.
struct FieldSpec {
  std::uint32_t characteristic = 2;

  static FieldSpec checked(std::int64_t characteristic);
  bool is_rational() const { return characteristic == 0; }
  friend bool operator==(FieldSpec, FieldSpec) = default;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p. Elements are residues in [0, p).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);
  explicit PrimeField(FieldSpec spec) : PrimeField(spec.characteristic) {}

  std::uint32_t p() const { return p_; }
  FieldSpec spec() const { return FieldSpec{p_}; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_int(std::int64_t v) const;
  Elem sign(int exponent) const { return (exponent % 2 == 0) ? 1 : p_ - 1; }

  /// Parses a decimal integer or "a/b" fraction and reduces it mod p.
  Elem parse(std::string_view text) const;
  std::string format(Elem a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

}  // namespace hopfcoh
