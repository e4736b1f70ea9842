#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sigbasis/field.hpp"
#include "sigbasis/monomial.hpp"

namespace sigbasis {

struct Term {
  Monomial mono;
  FieldElem coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Terms strictly descending under the owning ring's order, no zero
// coefficients. The empty list is the zero polynomial. Polynomials do not
// carry their ring; every operation that depends on the order takes one.
class Polynomial {
 public:
  Polynomial() = default;

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  // Throw std::domain_error on the zero polynomial.
  const Term& leadTerm() const;
  const Monomial& leadMono() const { return leadTerm().mono; }
  FieldElem leadCoeff() const { return leadTerm().coeff; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class Ring;
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

// Coefficient field, variables and the active monomial order.
class Ring {
 public:
  Ring(PrimeField field, VarSet vars, MonomialOrder order);

  const PrimeField& field() const { return field_; }
  const VarSet& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return vars_.size(); }

  Ring withOrder(MonomialOrder order) const { return Ring(field_, vars_, order); }

  Monomial one() const { return Monomial(nvars()); }
  Monomial var(std::size_t i, std::uint32_t power = 1) const {
    return Monomial::variable(nvars(), i, power);
  }

  // Sorts, merges equal monomials and drops zeros.
  Polynomial make(std::vector<Term> terms) const;
  Polynomial constant(FieldElem c) const;
  Polynomial monomial(const Monomial& m, FieldElem c) const;
  Polynomial monomial(const Monomial& m) const { return monomial(m, field_.one()); }
  // Re-sorts a polynomial that was built under another order.
  Polynomial reorder(const Polynomial& f) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial scale(const Polynomial& f, FieldElem c) const;
  // c*m*f
  Polynomial mulTerm(const Polynomial& f, FieldElem c, const Monomial& m) const;
  // f - c*m*g in one merge pass.
  Polynomial subMulTerm(const Polynomial& f, FieldElem c, const Monomial& m,
                        const Polynomial& g) const;
  // f*g as a sum of term products.
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  // Scales to leading coefficient 1; zero stays zero.
  Polynomial monic(const Polynomial& f) const;

  // Throws std::domain_error on the zero polynomial.
  Term leading(const Polynomial& f) const { return f.leadTerm(); }

 private:
  PrimeField field_;
  VarSet vars_;
  MonomialOrder order_;
};

// Full (tail) reduction of f by gs. When cofactors is non-null it receives
// q_i with f = sum q_i g_i + result.
Polynomial normalForm(const Ring& ring, const Polynomial& f, std::span<const Polynomial> gs,
                      std::vector<Polynomial>* cofactors = nullptr);

// (lcm/lt(f))*f - (lcm/lt(g))*g. Throws std::domain_error if either is zero.
Polynomial sPolynomial(const Ring& ring, const Polynomial& f, const Polynomial& g);

// Minimal, autoreduced, monic, sorted by leading monomial descending (ties
// by exponent vector). The reduced Groebner basis when gs is a Groebner basis.
std::vector<Polynomial> interreduce(const Ring& ring, std::span<const Polynomial> gs);

}  // namespace sigbasis
