#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigbasis {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

// Dense exponent vector with cached total degree. Slots past nvars() are zero,
// so whole-array comparisons are valid for equal dimensions.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::initializer_list<std::uint32_t> exps);
  Monomial(std::size_t nvars, std::span<const std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  bool isOne() const { return deg_ == 0; }

  // Throws std::overflow_error when an exponent would reach 2^16.
  Monomial operator*(const Monomial& other) const;
  // Throws std::domain_error unless other divides *this.
  Monomial operator/(const Monomial& other) const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Lex, GrLex, GrevLex };

// x_1 > x_2 > ... > x_n in every kind.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  OrderKind kind() const { return kind_; }

  // Throws std::invalid_argument on dimension mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  OrderKind kind_ = OrderKind::GrevLex;
};

// Throws std::invalid_argument on unknown names.
OrderKind parseOrderKind(const std::string& name);
std::string toString(OrderKind kind);

// Ascending comparator usable with std containers.
struct MonomialLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.less(a, b); }
};

// Ordered, distinct variable names. Index i is x_{i+1}.
class VarSet {
 public:
  VarSet() = default;
  // Throws std::invalid_argument on duplicates, empty list or too many names.
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // Returns size() when absent.
  std::size_t indexOf(const std::string& name) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

std::string formatMonomial(const Monomial& m, const VarSet& vars);

}  // namespace sigbasis
