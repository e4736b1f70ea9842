#include "sigbasis/field.hpp"

#include <string>

namespace sigbasis {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p >= kMaxModulus) {
    throw std::invalid_argument("field modulus out of range [2, 2^31): " + std::to_string(p));
  }
  if (!isPrime(p)) {
    throw std::invalid_argument("field modulus is not prime: " + std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

FieldElem PrimeField::fromInt(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.isZero()) throw DivisionByZero();
  std::int64_t r0 = p_, r1 = a.value;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  // r0 == 1 since p is prime.
  return fromInt(s0);
}

}  // namespace sigbasis
