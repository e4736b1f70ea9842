#include <doctest.h>

#include "sigbasis/mmm.hpp"
#include "support.hpp"

using namespace sigbasis;
using namespace testutil;

namespace {

std::vector<Polynomial> grevlexGb(const Ring& r, const std::vector<Polynomial>& gens) {
  return interreduce(r, buchberger(r, gens));
}

}  // namespace

TEST_CASE("quotient basis examples") {
  Ring r = makeRing(7, {"x", "y"}, OrderKind::GrevLex);
  auto gb = grevlexGb(r, polys(r, {"x^2 - y", "x*y - 1"}));
  CHECK(show(r, gb) == "x^2 - y\nx*y - 1\ny^2 - x\n");
  CHECK(quotientBasis(r, gb) == std::vector<Monomial>{mono(r, "1"), mono(r, "y"), mono(r, "x")});

  CHECK(quotientBasis(r, polys(r, {"x - 1", "y - 2"})) == std::vector<Monomial>{mono(r, "1")});
  CHECK(quotientBasis(r, polys(r, {"1"})).empty());
  CHECK_THROWS_AS(quotientBasis(r, polys(r, {"x^2"})), NotZeroDimensional);
  CHECK_THROWS_AS(quotientBasis(r, polys(r, {"x*y"})), NotZeroDimensional);
}

TEST_CASE("normal form map examples") {
  Ring r = makeRing(7, {"x", "y"}, OrderKind::GrevLex);
  auto gb = grevlexGb(r, polys(r, {"x^2 - y", "x*y - 1"}));
  LinearMap map = nfMapFromGb(r, gb);
  CHECK(map.dim() == 3);
  const FieldElem one = r.field().one();
  CHECK(map.eval(mono(r, "1")) == SparseVector{{0, one}});
  CHECK(map.eval(mono(r, "x")) == SparseVector{{2, one}});
  CHECK(map.eval(mono(r, "x^2")) == SparseVector{{1, one}});
  CHECK(map.eval(mono(r, "x*y")) == SparseVector{{0, one}});
  CHECK(map.apply(poly(r, "x^2 - y"), r.field()).empty());
  CHECK(map.apply(poly(r, "2*x + 3*x*y"), r.field()) ==
        SparseVector{{0, r.field().fromInt(3)}, {2, r.field().fromInt(2)}});
}

TEST_CASE("kernel examples") {
  Ring r = makeRing(7, {"x", "y"}, OrderKind::Lex);
  LinearMap zero(0, [](const Monomial&) { return SparseVector{}; });
  CHECK(show(r, mmmKernelGb(zero, r)) == "1\n");

  Ring r1 = makeRing(7, {"x"}, OrderKind::Lex);
  const PrimeField& f = r1.field();
  LinearMap evalAt2(1, [&f](const Monomial& m) {
    FieldElem v = f.one();
    for (std::uint32_t k = 0; k < m.degree(); ++k) v = f.mul(v, f.fromInt(2));
    return SparseVector{{0, v}};
  });
  auto res = mmmKernelRun(evalAt2, r1);
  CHECK(show(r1, res.basis) == "x - 2\n");
  CHECK(res.rows.size() == 1);

  // Evaluation at the two points (0, 0) and (1, 1).
  LinearMap points(2, [&](const Monomial& m) {
    SparseVector v;
    if (m.isOne()) v.push_back({0, r.field().one()});
    v.push_back({1, r.field().one()});
    return v;
  });
  CHECK(show(r, mmmKernelGb(points, r)) == "x - y\ny^2 - y\n");
}

TEST_CASE("kernel of the normal form map is the ideal") {
  for (const char* name : {"worked_example", "katsura3", "katsura4", "random_quadrics_1"}) {
    CAPTURE(name);
    Problem p = fixture(name, OrderKind::GrevLex);
    auto gb = grevlexGb(p.ring, p.generators);
    auto res = mmmKernelRun(nfMapFromGb(p.ring, gb), p.ring);
    CHECK(show(p.ring, res.basis) == show(p.ring, gb));
    CHECK(res.rows.size() == quotientBasis(p.ring, gb).size());
    LinearMap map = nfMapFromGb(p.ring, gb);
    for (const auto& g : res.basis) CHECK(map.apply(g, p.ring.field()).empty());
    for (std::size_t k = 0; k < res.rows.size(); ++k) {
      const auto& row = res.rows[k];
      REQUIRE_FALSE(row.coords.empty());
      CHECK(row.coords.front().first == row.pivot);
      CHECK(row.preimage.leadMono() == row.preimage_lm);
      for (std::size_t l = k + 1; l < res.rows.size(); ++l) CHECK(row.pivot != res.rows[l].pivot);
    }
  }
}

TEST_CASE("fglm examples") {
  Ring g = makeRing(7, {"x", "y"}, OrderKind::GrevLex);
  Ring l = g.withOrder(MonomialOrder(OrderKind::Lex));
  auto gens = polys(g, {"x^2 - y", "x*y - 1"});
  auto gb = grevlexGb(g, gens);
  CHECK(show(l, fglm(g, gb, MonomialOrder(OrderKind::Lex))) == "x - y^2\ny^3 - 1\n");
  CHECK(show(g, fglm(g, gb, MonomialOrder(OrderKind::GrevLex))) == show(g, gb));

  auto sq = polys(g, {"x^2 - 1", "y^2 - 1"});
  CHECK(show(l, fglm(g, sq, MonomialOrder(OrderKind::Lex))) == "x^2 - 1\ny^2 - 1\n");

  CHECK_THROWS_AS(fglm(g, polys(g, {"x^2"}), MonomialOrder(OrderKind::Lex)), NotZeroDimensional);
}

TEST_CASE("fglm agrees with buchberger on zero-dimensional corpus ideals") {
  for (const char* name : {"worked_example", "katsura3", "katsura4", "cyclic4", "random_quadrics_1",
                           "random_quadrics_2", "random_quadrics_3", "random_quadrics_4",
                           "random_quadrics_5"}) {
    for (auto src : {OrderKind::GrevLex, OrderKind::GrLex}) {
      for (auto dst : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
        CAPTURE(name);
        INFO(toString(src));
        INFO(toString(dst));
        Problem ps = fixture(name, src);
        Problem pd = fixture(name, dst);
        std::vector<Polynomial> gb;
        try {
          gb = grevlexGb(ps.ring, ps.generators);
          quotientBasis(ps.ring, gb);
        } catch (const NotZeroDimensional&) {
          continue;
        }
        CHECK(show(pd.ring, fglm(ps.ring, gb, MonomialOrder(dst))) ==
              reducedBuchberger(pd.ring, pd.generators));
      }
    }
  }
}
