#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigbasis/polynomial.hpp"

namespace sigbasis {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Terms joined by + or -, each a product of integers and var^exp factors, e.g.
// "x^2*y + 3*x - 1" or "2xy". Whitespace is insignificant. Integers are read
// modulo p; '/' is rejected. line/column locate text[0] in error messages.
Polynomial parsePolynomial(std::string_view text, const Ring& ring, std::size_t line = 1,
                           std::size_t column = 1);

// Descending terms. Residues above p/2 print as negated, so -1 appears as
// "- x" rather than "+ (p-1)*x".
std::string formatPolynomial(const Polynomial& f, const Ring& ring);

// Line-oriented ideal description:
//   field <p>
//   vars x,y,z
//   order lex|grlex|grevlex        (optional, grevlex by default)
//   poly <expr>                    (one per generator)
// '#' starts a comment.
struct Problem {
  Ring ring;
  std::vector<Polynomial> generators;  // in file order, zeros kept
};

Problem parseProblem(std::string_view text);
Problem loadProblem(const std::string& path);

// One polynomial per non-empty, non-comment line, over the given ring.
std::vector<Polynomial> parsePolynomialList(std::string_view text, const Ring& ring);

std::string readFile(const std::string& path);

}  // namespace sigbasis
