#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sigbasis/polynomial.hpp"

namespace sigbasis {

struct CriticalPair {
  std::size_t i;  // i < j
  std::size_t j;
  Monomial lcm;
  std::uint32_t deg;
};

struct BuchbergerOptions {
  // Product and chain criteria (Gebauer-Moeller update). Off = every pair of
  // every basis element is reduced.
  bool criteria = true;
};

struct BuchbergerStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t product_criterion = 0;
  std::uint64_t chain_criterion = 0;
};

struct BuchbergerResult {
  std::vector<Polynomial> basis;  // monic, not interreduced
  BuchbergerStats stats;
};

// Normal selection strategy: the pair with the smallest lcm under the ring's
// order is reduced first (for degree orders this is smallest degree first).
// Reducers are tried in increasing order of leading monomial. Zero generators are
// ignored; throws std::invalid_argument if nothing else remains.
BuchbergerResult buchbergerRun(const Ring& ring, std::span<const Polynomial> generators,
                               const BuchbergerOptions& options = {});

inline std::vector<Polynomial> buchberger(const Ring& ring, std::span<const Polynomial> generators) {
  return buchbergerRun(ring, generators).basis;
}

// An S-polynomial of the basis that does not reduce to zero.
struct SPairWitness {
  std::size_t i;
  std::size_t j;
  Polynomial s_poly;
  Polynomial remainder;
};

std::optional<SPairWitness> findNonReducingSPair(const Ring& ring, std::span<const Polynomial> g);

inline bool isGroebner(const Ring& ring, std::span<const Polynomial> g) {
  return !findNonReducingSPair(ring, g).has_value();
}

}  // namespace sigbasis
