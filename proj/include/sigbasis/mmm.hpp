#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sigbasis/polynomial.hpp"

namespace sigbasis {

// Sparse coordinates, strictly increasing positions, no zero entries.
using SparseVector = std::vector<std::pair<std::uint32_t, FieldElem>>;

// A k-linear map from k[X] into a finite-dimensional space, given by its
// values on monomials. eval must be pure.
class LinearMap {
 public:
  LinearMap(std::size_t dim, std::function<SparseVector(const Monomial&)> eval)
      : dim_(dim), eval_(std::move(eval)) {}

  std::size_t dim() const { return dim_; }
  SparseVector eval(const Monomial& m) const { return eval_(m); }
  // Term-wise extension to polynomials.
  SparseVector apply(const Polynomial& f, const PrimeField& field) const;

 private:
  std::size_t dim_;
  std::function<SparseVector(const Monomial&)> eval_;
};

class NotZeroDimensional : public std::runtime_error {
 public:
  NotZeroDimensional() : std::runtime_error("ideal is not zero-dimensional") {}
};

// Monomials outside the leading-monomial ideal of gb, ascending. Throws
// NotZeroDimensional when some variable has no pure power among the leading
// monomials.
std::vector<Monomial> quotientBasis(const Ring& ring, std::span<const Polynomial> gb);

// eval(m) = coordinates of normalForm(m, gb) on quotientBasis(gb).
LinearMap nfMapFromGb(const Ring& ring, std::vector<Polynomial> gb);

// Row of the echelon basis: pivot is the first position of coords.
struct EchelonRow {
  std::uint32_t pivot;
  SparseVector coords;
  Monomial preimage_lm;
  Polynomial preimage;
};

struct MmmStats {
  std::size_t evaluations = 0;
  std::size_t echelon_rows = 0;
  std::size_t staircase = 0;
};

struct MmmResult {
  std::vector<Polynomial> basis;  // reduced, lm descending
  std::vector<EchelonRow> rows;
  MmmStats stats;
};

// Reduced Groebner basis of the kernel of map under ring's order.
MmmResult mmmKernelRun(const LinearMap& map, const Ring& ring);

inline std::vector<Polynomial> mmmKernelGb(const LinearMap& map, const Ring& ring) {
  return mmmKernelRun(map, ring).basis;
}

// Order change for a zero-dimensional ideal: gbSrc is a Groebner basis under
// ringSrc's order; the result is the reduced basis under dstOrder.
std::vector<Polynomial> fglm(const Ring& ringSrc, std::span<const Polynomial> gbSrc,
                             MonomialOrder dstOrder);

}  // namespace sigbasis
