#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace sigbasis;
using namespace testutil;

TEST_CASE("monomial order examples") {
  Ring lex = makeRing(7, {"x", "y"}, OrderKind::Lex);
  Ring grevlex = makeRing(7, {"x", "y"}, OrderKind::GrevLex);
  CHECK(lex.order().compare(mono(lex, "x"), mono(lex, "y")) > 0);
  CHECK(grevlex.order().compare(mono(grevlex, "x^2"), mono(grevlex, "x*y")) > 0);
  for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    MonomialOrder ord(kind);
    CHECK(ord.compare(mono(lex, "x*y^3"), mono(lex, "x*y^3")) == 0);
  }
  // Orders differ on x*z^2 vs y^3 and x vs y^2.
  Ring r3 = makeRing(7, {"x", "y", "z"}, OrderKind::Lex);
  Monomial a = mono(r3, "x*z^2"), b = mono(r3, "y^3"), c = mono(r3, "x*y*z"), d = mono(r3, "y^2*z");
  CHECK(MonomialOrder(OrderKind::Lex).greater(a, b));
  CHECK(MonomialOrder(OrderKind::GrLex).greater(a, b));
  CHECK(MonomialOrder(OrderKind::GrevLex).less(a, b));
  CHECK(MonomialOrder(OrderKind::GrLex).greater(c, d));
  CHECK(MonomialOrder(OrderKind::Lex).greater(mono(r3, "x"), mono(r3, "y^2")));
  CHECK(MonomialOrder(OrderKind::GrevLex).less(mono(r3, "x"), mono(r3, "y^2")));
  CHECK_THROWS_AS(MonomialOrder().compare(Monomial(2), Monomial(3)), std::invalid_argument);
}

TEST_CASE("monomial order properties on random samples") {
  std::mt19937 rng(3);
  for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    MonomialOrder ord(kind);
    for (int i = 0; i < 2000; ++i) {
      Monomial a = randomMonomial(rng, 4, 5), b = randomMonomial(rng, 4, 5), c = randomMonomial(rng, 4, 5);
      auto ab = ord.compare(a, b);
      CHECK(ord.compare(b, a) == (0 <=> ab));
      CHECK((ab == 0) == (a == b));
      if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
      CHECK(ord.compare(a * c, b * c) == ab);
      CHECK_FALSE(ord.less(a, Monomial(4)));
    }
  }
}

TEST_CASE("monomial operations") {
  Ring r = makeRing(7, {"x", "y", "z"}, OrderKind::Lex);
  CHECK(mono(r, "x^2*y").lcm(mono(r, "x*y^3")) == mono(r, "x^2*y^3"));
  CHECK(mono(r, "x*y").divides(mono(r, "x^2*y")));
  CHECK(mono(r, "x^2*y") / mono(r, "x*y") == mono(r, "x"));
  CHECK_FALSE(mono(r, "x^2").divides(mono(r, "x*y")));
  CHECK_THROWS_AS(mono(r, "x^2") / mono(r, "x*y"), std::domain_error);
  CHECK(mono(r, "x^2*y").coprime(mono(r, "z^3")));
  CHECK_FALSE(mono(r, "x*y").coprime(mono(r, "y*z")));
  CHECK(mono(r, "x^2*y*z^3").degree() == 6);
  Monomial big = r.var(0, kMaxExponent - 1);
  CHECK_THROWS_AS(big * r.var(0), std::overflow_error);
  CHECK(formatMonomial(mono(r, "x^2*z"), r.vars()) == "x^2*z");
  CHECK(formatMonomial(r.one(), r.vars()) == "1");
}

TEST_CASE("variable sets") {
  CHECK_THROWS_AS(VarSet(std::vector<std::string>{"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(VarSet(std::vector<std::string>{}), std::invalid_argument);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(VarSet{many}, std::invalid_argument);
  VarSet v(std::vector<std::string>{"a", "b"});
  CHECK(v.indexOf("b") == 1);
  CHECK(v.indexOf("c") == v.size());
}

TEST_CASE("polynomial arithmetic examples") {
  Ring r = makeRing(7, {"x", "y"}, OrderKind::Lex);
  Polynomial f = poly(r, "x^2 - y");
  CHECK(r.add(f, r.neg(f)).isZero());
  CHECK(r.sub(f, f).isZero());
  CHECK(r.scale(poly(r, "x + 1"), r.field().fromInt(3)) == poly(r, "3*x + 3"));
  CHECK(r.mulTerm(f, r.field().one(), mono(r, "y")) == poly(r, "x^2*y - y^2"));
  CHECK(r.subMulTerm(poly(r, "x^2*y - x"), r.field().one(), mono(r, "y"), f) == poly(r, "y^2 - x"));
  CHECK(r.mul(poly(r, "x + y"), poly(r, "x - y")) == poly(r, "x^2 - y^2"));
  CHECK(r.monic(poly(r, "3*x + 1")) == poly(r, "x + 5"));
  CHECK(r.make({Term{mono(r, "x"), FieldElem{3}}, Term{mono(r, "x"), FieldElem{4}}}).isZero());
}

TEST_CASE("leading terms") {
  Ring lex = makeRing(7, {"x", "y"}, OrderKind::Lex);
  Ring grevlex = lex.withOrder(MonomialOrder(OrderKind::GrevLex));
  Term t = lex.leading(poly(lex, "x - y^2"));
  CHECK(t.mono == mono(lex, "x"));
  CHECK(t.coeff == FieldElem{1});
  Term u = grevlex.leading(poly(grevlex, "x - y^2"));
  CHECK(u.mono == mono(grevlex, "y^2"));
  CHECK(u.coeff == FieldElem{6});
  Term c = lex.leading(poly(lex, "5"));
  CHECK(c.mono.isOne());
  CHECK(c.coeff == FieldElem{5});
  CHECK_THROWS_AS(lex.leading(Polynomial()), std::domain_error);
}

TEST_CASE("reorder keeps the polynomial and changes term order") {
  Ring lex = makeRing(7, {"x", "y"}, OrderKind::Lex);
  Ring grevlex = lex.withOrder(MonomialOrder(OrderKind::GrevLex));
  Polynomial f = poly(lex, "x - y^2");
  Polynomial g = grevlex.reorder(f);
  CHECK(g.leadMono() == mono(lex, "y^2"));
  CHECK(lex.reorder(g) == f);
}

TEST_CASE("normal form examples") {
  Ring r = makeRing(7, {"x", "y"}, OrderKind::Lex);
  Polynomial f = poly(r, "x^2 + 3*x*y - 2");
  CHECK(normalForm(r, f, {}) == f);
  CHECK(normalForm(r, poly(r, "x^2 - y"), polys(r, {"x - y^2"})) == poly(r, "y^4 - y"));
  CHECK(normalForm(r, poly(r, "y^4 - y"), polys(r, {"y^3 - 1"})).isZero());
}

TEST_CASE("normal form cofactors reconstruct the input on random data") {
  std::mt19937 rng(7);
  for (auto kind : {OrderKind::Lex, OrderKind::GrevLex}) {
    Ring r = makeRing(32003, {"x", "y", "z"}, kind);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Polynomial> gs;
      for (int k = 0; k < 3; ++k) gs.push_back(randomPolynomial(rng, r, 3, 2));
      Polynomial f = randomPolynomial(rng, r, 8, 4);
      std::vector<Polynomial> q;
      Polynomial rem = normalForm(r, f, gs, &q);
      Polynomial sum = rem;
      for (std::size_t i = 0; i < gs.size(); ++i) sum = r.add(sum, r.mul(q[i], gs[i]));
      CHECK(sum == f);
      for (const auto& t : rem.terms()) {
        for (const auto& g : gs) CHECK_FALSE(g.leadMono().divides(t.mono));
      }
    }
  }
}

TEST_CASE("S-polynomial examples") {
  Ring r = makeRing(7, {"x", "y"}, OrderKind::Lex);
  Polynomial f = poly(r, "x^2 - y");
  CHECK(sPolynomial(r, f, f).isZero());
  CHECK(sPolynomial(r, f, poly(r, "x*y - 1")) == poly(r, "x - y^2"));
  auto g = polys(r, {"x - y^2", "y^3 - 1"});
  CHECK(normalForm(r, sPolynomial(r, g[0], g[1]), g).isZero());
  CHECK_THROWS_AS(sPolynomial(r, f, Polynomial()), std::domain_error);
}

TEST_CASE("interreduce examples") {
  Ring r = makeRing(7, {"x", "y"}, OrderKind::Lex);
  CHECK(show(r, interreduce(r, polys(r, {"x - y^2", "y^4 - y", "y^3 - 1"}))) == "x - y^2\ny^3 - 1\n");
  CHECK(show(r, interreduce(r, polys(r, {"3*x*y + 1"}))) == "x*y - 2\n");
  CHECK(show(r, interreduce(r, polys(r, {"x", "2*x"}))) == "x\n");
}

TEST_CASE("interreduce is idempotent on corpus bases") {
  for (const auto& name : corpus()) {
    for (auto kind : {OrderKind::Lex, OrderKind::GrevLex}) {
      Problem p = fixture(name, kind);
      auto once = interreduce(p.ring, buchberger(p.ring, p.generators));
      CHECK(interreduce(p.ring, once) == once);
    }
  }
}

TEST_CASE("parse and format") {
  Ring r = makeRing(7, {"x", "y", "xy"}, OrderKind::Lex);
  CHECK(formatPolynomial(poly(r, "x^2*y + 3*x - 1"), r) == "x^2*y + 3*x - 1");
  CHECK(formatPolynomial(poly(r, "2xy"), r) == "2*xy");
  CHECK(formatPolynomial(poly(r, "2x y"), r) == "2*x*y");
  CHECK(formatPolynomial(poly(r, "-x + 8"), r) == "-x + 1");
  CHECK(formatPolynomial(poly(r, "x - x"), r) == "0");
  CHECK(formatPolynomial(poly(r, "6*x"), r) == "-x");
  CHECK(poly(r, "4*x").leadCoeff() == FieldElem{4});
}

TEST_CASE("parse errors carry line and column") {
  Ring r = makeRing(7, {"x", "y"}, OrderKind::Lex);
  auto fails = [&](const std::string& text, std::size_t column) {
    try {
      parsePolynomial(text, r, 3, 5);
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == column);
      return;
    }
    FAIL("no error for " << text);
  };
  fails("x + z", 9);
  fails("x^", 7);
  fails("x + ", 9);
  fails("1/2*x", 6);
  try {
    parsePolynomial("1/2", r);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("rational") != std::string::npos);
  }
}

TEST_CASE("problem files") {
  Problem p = parseProblem("# demo\nfield 7\nvars x,y\norder lex\npoly x^2 - y\npoly x*y - 1\n");
  CHECK(p.ring.field().modulus() == 7);
  CHECK((p.ring.order().kind() == OrderKind::Lex));
  CHECK(p.generators.size() == 2);
  Problem q = parseProblem("field 11\nvars a\npoly a + 1\n");
  CHECK((q.ring.order().kind() == OrderKind::GrevLex));
  CHECK_THROWS_AS(parseProblem("field 8\nvars x\npoly x\n"), ParseError);
  CHECK_THROWS_AS(parseProblem("vars x\npoly x\n"), ParseError);
  CHECK_THROWS_AS(parseProblem("field 7\nvars x\norder weird\npoly x\n"), ParseError);
  try {
    parseProblem("field 7\nvars x\npoly x + q\n");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("format then parse round-trips on random polynomials") {
  std::mt19937 rng(19);
  for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    Ring r = makeRing(32003, {"x", "y", "z"}, kind);
    for (int i = 0; i < 200; ++i) {
      Polynomial f = randomPolynomial(rng, r, 6, 4);
      std::string once = formatPolynomial(f, r);
      CHECK(parsePolynomial(once, r) == f);
      CHECK(formatPolynomial(parsePolynomial(once, r), r) == once);
    }
  }
}
