#include "sigbasis/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace sigbasis {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Ring& ring, std::size_t line, std::size_t column)
      : text_(text), ring_(ring), line_(line), column_(column) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skipSpace();
    if (atEnd()) fail("empty polynomial");
    bool first = true;
    while (!atEnd()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skipSpace();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parseTerm();
      if (negative) t.coeff = ring_.field().neg(t.coeff);
      terms.push_back(t);
      first = false;
      skipSpace();
    }
    return ring_.make(std::move(terms));
  }

 private:
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + pos_);
  }

  static bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::uint64_t parseInteger() {
    std::uint64_t v = 0;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::uint64_t{1} << 56)) fail("integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  // Longest variable name that prefixes the input, so "xy" splits into x*y
  // when only x and y are declared.
  std::size_t parseVariable() {
    std::size_t end = pos_;
    while (end < text_.size() && isIdentChar(text_[end])) ++end;
    for (std::size_t len = end - pos_; len > 0; --len) {
      std::string name(text_.substr(pos_, len));
      std::size_t idx = ring_.vars().indexOf(name);
      if (idx < ring_.nvars()) {
        pos_ += len;
        return idx;
      }
    }
    fail("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'");
  }

  Term parseTerm() {
    const auto& F = ring_.field();
    FieldElem coeff = F.one();
    std::vector<std::uint32_t> exps(ring_.nvars(), 0);
    bool any = false;
    while (true) {
      skipSpace();
      if (atEnd()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t v = parseInteger();
        coeff = F.mul(coeff, F.fromInt(static_cast<std::int64_t>(v % F.modulus())));
      } else if (isIdentStart(c)) {
        std::size_t idx = parseVariable();
        std::uint64_t e = 1;
        skipSpace();
        if (!atEnd() && peek() == '^') {
          ++pos_;
          skipSpace();
          if (atEnd() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = parseInteger();
        }
        if (exps[idx] + e >= kMaxExponent) fail("exponent too large");
        exps[idx] += static_cast<std::uint32_t>(e);
      } else if (c == '/') {
        fail("rational coefficients are not supported");
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skipSpace();
      if (!atEnd() && peek() == '/') fail("rational coefficients are not supported");
      if (!atEnd() && peek() == '*') {
        ++pos_;
        continue;
      }
      // Juxtaposition ("3x", "2 y") also multiplies.
      if (!atEnd() && (std::isdigit(static_cast<unsigned char>(peek())) || isIdentStart(peek()))) {
        continue;
      }
      break;
    }
    if (!any) fail("expected a term");
    return Term{Monomial(ring_.nvars(), std::span<const std::uint32_t>(exps)), coeff};
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view stripComment(std::string_view s) {
  auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::vector<std::string_view> splitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

Polynomial parsePolynomial(std::string_view text, const Ring& ring, std::size_t line,
                           std::size_t column) {
  return ExprParser(text, ring, line, column).parse();
}

std::string formatPolynomial(const Polynomial& f, const Ring& ring) {
  if (f.isZero()) return "0";
  const std::uint32_t p = ring.field().modulus();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::uint32_t c = t.coeff.value;
    bool negative = c > p / 2;
    std::uint32_t mag = negative ? p - c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.isOne()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += formatMonomial(t.mono, ring.vars());
    }
  }
  return out;
}

Problem parseProblem(std::string_view text) {
  std::optional<std::uint64_t> modulus;
  std::optional<std::vector<std::string>> varNames;
  OrderKind order = OrderKind::GrevLex;
  struct PolyLine {
    std::string_view expr;
    std::size_t line;
    std::size_t column;
  };
  std::vector<PolyLine> polyLines;

  auto lines = splitLines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t lineNo = ln + 1;
    std::string_view raw = stripComment(lines[ln]);
    std::string_view body = trim(raw);
    if (body.empty()) continue;
    const std::size_t bodyCol = static_cast<std::size_t>(body.data() - lines[ln].data()) + 1;
    auto sp = body.find_first_of(" \t");
    std::string_view key = body.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view() : trim(body.substr(sp));
    const std::size_t restCol =
        rest.empty() ? bodyCol + key.size() : static_cast<std::size_t>(rest.data() - lines[ln].data()) + 1;

    if (key == "field") {
      if (rest.empty()) throw ParseError("missing field modulus", lineNo, restCol);
      std::uint64_t p = 0;
      for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("field modulus must be a positive integer (rationals are not supported)",
                           lineNo, restCol);
        }
        if (p > (std::uint64_t{1} << 40)) throw ParseError("field modulus too large", lineNo, restCol);
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      try {
        PrimeField check(p);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineNo, restCol);
      }
      modulus = p;
    } else if (key == "vars") {
      std::vector<std::string> names;
      std::string_view r = rest;
      while (true) {
        auto comma = r.find(',');
        std::string_view name = trim(r.substr(0, comma));
        names.emplace_back(name);
        if (comma == std::string_view::npos) break;
        r = r.substr(comma + 1);
      }
      for (const auto& n : names) {
        bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
        for (char c : n) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw ParseError("invalid variable name '" + n + "'", lineNo, restCol);
      }
      try {
        VarSet check(names);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineNo, restCol);
      }
      varNames = std::move(names);
    } else if (key == "order") {
      try {
        order = parseOrderKind(std::string(rest));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineNo, restCol);
      }
    } else if (key == "poly") {
      if (rest.empty()) throw ParseError("empty polynomial", lineNo, restCol);
      polyLines.push_back(PolyLine{rest, lineNo, restCol});
    } else {
      throw ParseError("unknown directive '" + std::string(key) + "'", lineNo, bodyCol);
    }
  }
  if (!modulus) throw ParseError("missing 'field' line", lines.size(), 1);
  if (!varNames) throw ParseError("missing 'vars' line", lines.size(), 1);
  if (polyLines.empty()) throw ParseError("no 'poly' lines", lines.size(), 1);

  Problem problem{Ring(PrimeField(*modulus), VarSet(*varNames), MonomialOrder(order)), {}};
  for (const auto& pl : polyLines) {
    problem.generators.push_back(parsePolynomial(pl.expr, problem.ring, pl.line, pl.column));
  }
  return problem;
}

std::vector<Polynomial> parsePolynomialList(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> out;
  auto lines = splitLines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view body = trim(stripComment(lines[ln]));
    if (body.empty()) continue;
    const std::size_t col = static_cast<std::size_t>(body.data() - lines[ln].data()) + 1;
    out.push_back(parsePolynomial(body, ring, ln + 1, col));
  }
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Problem loadProblem(const std::string& path) { return parseProblem(readFile(path)); }

}  // namespace sigbasis
