#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sigbasis/polynomial.hpp"

namespace sigbasis {

// mono * e_index, index in 1..m.
struct ModuleMonomial {
  std::uint32_t index = 1;
  Monomial mono;

  ModuleMonomial mulBy(const Monomial& t) const { return ModuleMonomial{index, mono * t}; }
  // Same index and mono divides other.mono.
  bool divides(const ModuleMonomial& other) const {
    return index == other.index && mono.divides(other.mono);
  }

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

enum class ModuleOrderKind { Pot, Top, Schreyer };

ModuleOrderKind parseModuleOrderKind(const std::string& name);
std::string toString(ModuleOrderKind kind);

// Order on k[X]^m. POT uses e_1 < e_2 < ... < e_m. TOP compares monomials
// first, then the index. Schreyer compares mono * lm(f_index) under the base
// order, ties broken by the larger index being greater.
class ModuleOrder {
 public:
  ModuleOrder(ModuleOrderKind kind, MonomialOrder base, std::vector<Monomial> inputLms = {});

  ModuleOrderKind kind() const { return kind_; }
  const MonomialOrder& base() const { return base_; }
  std::size_t rank() const { return inputLms_.size(); }

  std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) const;
  bool less(const ModuleMonomial& a, const ModuleMonomial& b) const { return compare(a, b) < 0; }

 private:
  ModuleOrderKind kind_;
  MonomialOrder base_;
  std::vector<Monomial> inputLms_;
};

std::string formatModuleMonomial(const ModuleMonomial& s, const VarSet& vars);

// Where a labeled polynomial came from, enough to rebuild its module vector:
//   v = scale * (origin - sum_k coeff_k * mult_k * v[reducer_k])
// where origin is e_i (generator) or t * v[parent] (JPair).
struct GeneratorOrigin {
  std::uint32_t index;  // 1-based
};
struct JPairOrigin {
  Monomial t;
  std::size_t parent;  // id
};
struct ReductionStep {
  FieldElem coeff;
  Monomial mult;
  std::size_t reducer;  // id
};
struct ProvenanceTrace {
  std::variant<GeneratorOrigin, JPairOrigin> origin;
  std::vector<ReductionStep> steps;
  FieldElem scale{1};
};

// One element (signature, phi(v)) of a strong Groebner basis. id is the
// creation ordinal and equals the position in the basis.
struct LabeledPoly {
  ModuleMonomial sig;
  Polynomial poly;
  ProvenanceTrace trace;
  std::size_t id = 0;
};

struct JPair {
  Monomial t;
  std::size_t parent;   // id of the multiplied element
  ModuleMonomial sig;   // t * parent.sig
  Monomial prod_lm;     // t * lm(parent.poly)

  friend bool operator==(const JPair&, const JPair&) = default;
};

// The signature-larger side of the S-pair of a and b, or nothing when both
// sides carry the same signature.
std::optional<JPair> makeJPair(const LabeledPoly& a, const LabeledPoly& b, const ModuleOrder& mord);

// For i < j, the leading module monomial of f_j e_i - f_i e_j. Sorted
// ascending under mord, duplicates merged.
std::vector<ModuleMonomial> principalSyzygyLms(std::span<const Polynomial> generators,
                                               const ModuleOrder& mord);

// Leading monomials of the generators, for Schreyer orders.
std::vector<Monomial> leadingMonomials(std::span<const Polynomial> generators);

// Removes elements divisible by another member (keeps the first of equals).
std::vector<ModuleMonomial> minimalModuleMonomials(std::vector<ModuleMonomial> set,
                                                   const ModuleOrder& mord);

}  // namespace sigbasis
