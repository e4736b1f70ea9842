#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sigbasis/buchberger.hpp"
#include "sigbasis/gvw.hpp"
#include "sigbasis/io.hpp"
#include "sigbasis/polynomial.hpp"

namespace testutil {

using namespace sigbasis;

inline std::string dataPath(const std::string& name) {
  return std::string(SIGBASIS_TEST_DATA) + "/" + name;
}

inline Problem fixture(const std::string& name) { return loadProblem(dataPath(name + ".ideal")); }

inline Problem fixture(const std::string& name, OrderKind order) {
  Problem p = fixture(name);
  Ring r = p.ring.withOrder(MonomialOrder(order));
  std::vector<Polynomial> gens;
  for (const auto& g : p.generators) gens.push_back(r.reorder(g));
  return Problem{r, gens};
}

inline Ring makeRing(std::uint64_t p, std::vector<std::string> vars, OrderKind order) {
  return Ring(PrimeField(p), VarSet(std::move(vars)), MonomialOrder(order));
}

inline Polynomial poly(const Ring& r, const std::string& text) { return parsePolynomial(text, r); }

inline std::vector<Polynomial> polys(const Ring& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parsePolynomial(t, r));
  return out;
}

inline std::string show(const Ring& r, const std::vector<Polynomial>& gs) {
  std::string out;
  for (const auto& g : gs) out += formatPolynomial(g, r) + "\n";
  return out;
}

inline std::string reducedBuchberger(const Ring& r, const std::vector<Polynomial>& gens) {
  return show(r, interreduce(r, buchberger(r, gens)));
}

inline ModuleMonomial sig(const Ring& r, std::uint32_t index, const std::string& mono) {
  Polynomial m = parsePolynomial(mono, r);
  return ModuleMonomial{index, m.leadMono()};
}

inline Monomial mono(const Ring& r, const std::string& text) {
  return parsePolynomial(text, r).leadMono();
}

inline Monomial randomMonomial(std::mt19937& rng, std::size_t nvars, std::uint32_t maxExp) {
  std::uniform_int_distribution<std::uint32_t> d(0, maxExp);
  std::vector<std::uint32_t> e(nvars);
  for (auto& x : e) x = d(rng);
  return Monomial(nvars, std::span<const std::uint32_t>(e));
}

inline Polynomial randomPolynomial(std::mt19937& rng, const Ring& r, std::size_t terms,
                                   std::uint32_t maxExp) {
  std::uniform_int_distribution<std::uint32_t> c(1, r.field().modulus() - 1);
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    ts.push_back(Term{randomMonomial(rng, r.nvars(), maxExp), FieldElem{c(rng)}});
  }
  return r.make(std::move(ts));
}

// Reduced basis frozen from an independent computer-algebra system, see
// data/oracle/generate.py.
inline std::vector<Polynomial> oracleBasis(const Ring& r, const std::string& name) {
  std::string file = dataPath("oracle/" + name + "." + toString(r.order().kind()) + ".gb");
  return interreduce(r, parsePolynomialList(readFile(file), r));
}

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{
      "worked_example",    "katsura3",          "katsura4",          "cyclic4",
      "random_quadrics_1", "random_quadrics_2", "random_quadrics_3", "random_quadrics_4",
      "random_quadrics_5"};
  return names;
}

}  // namespace testutil
