#pragma once

#include <cstdint>
#include <stdexcept>

namespace sigbasis {

// Residue in [0, p). Always fully reduced by the PrimeField that produced it.
struct FieldElem {
  std::uint32_t value = 0;

  constexpr bool isZero() const { return value == 0; }
  friend constexpr bool operator==(FieldElem, FieldElem) = default;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in prime field") {}
};

// GF(p) for a prime p < 2^31. Products of two residues fit in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  // Throws std::invalid_argument unless 2 <= p < 2^31 and p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }

  // Reduces an arbitrary signed integer into the field.
  FieldElem fromInt(std::int64_t v) const;
  FieldElem zero() const { return FieldElem{0}; }
  FieldElem one() const { return FieldElem{1}; }

  FieldElem add(FieldElem a, FieldElem b) const {
    std::uint32_t s = a.value + b.value;
    return FieldElem{s >= p_ ? s - p_ : s};
  }
  FieldElem sub(FieldElem a, FieldElem b) const {
    return FieldElem{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElem neg(FieldElem a) const { return FieldElem{a.value == 0 ? 0 : p_ - a.value}; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    return FieldElem{static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }

  // Extended Euclid. Throws DivisionByZero on a = 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool isPrime(std::uint64_t n);

}  // namespace sigbasis
