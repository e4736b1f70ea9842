#include "sigbasis/polynomial.hpp"

#include <algorithm>

namespace sigbasis {

namespace {

// Merges a[start..] with -c*m*b into out. Both inputs descending.
void mergeSubMul(const Ring& ring, std::span<const Term> a, FieldElem c, const Monomial& m,
                 std::span<const Term> b, std::vector<Term>& out) {
  const auto& F = ring.field();
  const auto& ord = ring.order();
  out.clear();
  out.reserve(a.size() + b.size());
  const FieldElem negc = F.neg(c);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    auto cmp = ord.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{bm, F.mul(negc, b[j].coeff)});
      ++j;
    } else {
      FieldElem s = F.add(a[i].coeff, F.mul(negc, b[j].coeff));
      if (!s.isZero()) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(Term{b[j].mono * m, F.mul(negc, b[j].coeff)});
}

}  // namespace

const Term& Polynomial::leadTerm() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Ring::Ring(PrimeField field, VarSet vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {}

Polynomial Ring::make(std::vector<Term> terms) const {
  for (const auto& t : terms) {
    if (t.mono.nvars() != nvars()) throw std::invalid_argument("term dimension mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [this](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.isZero()) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff.isZero()) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial Ring::constant(FieldElem c) const { return monomial(one(), c); }

Polynomial Ring::monomial(const Monomial& m, FieldElem c) const {
  if (c.isZero()) return Polynomial();
  return Polynomial(std::vector<Term>{Term{m, c}});
}

Polynomial Ring::reorder(const Polynomial& f) const {
  return make(std::vector<Term>(f.terms().begin(), f.terms().end()));
}

Polynomial Ring::add(const Polynomial& f, const Polynomial& g) const {
  return subMulTerm(f, field_.neg(field_.one()), one(), g);
}

Polynomial Ring::sub(const Polynomial& f, const Polynomial& g) const {
  return subMulTerm(f, field_.one(), one(), g);
}

Polynomial Ring::neg(const Polynomial& f) const { return scale(f, field_.neg(field_.one())); }

Polynomial Ring::scale(const Polynomial& f, FieldElem c) const {
  return mulTerm(f, c, one());
}

Polynomial Ring::mulTerm(const Polynomial& f, FieldElem c, const Monomial& m) const {
  if (c.isZero()) return Polynomial();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(Term{t.mono * m, field_.mul(c, t.coeff)});
  return Polynomial(std::move(out));
}

Polynomial Ring::subMulTerm(const Polynomial& f, FieldElem c, const Monomial& m,
                            const Polynomial& g) const {
  if (c.isZero() || g.isZero()) return f;
  std::vector<Term> out;
  mergeSubMul(*this, f.terms(), c, m, g.terms(), out);
  return Polynomial(std::move(out));
}

Polynomial Ring::mul(const Polynomial& f, const Polynomial& g) const {
  Polynomial acc;
  const FieldElem minus1 = field_.neg(field_.one());
  for (const auto& t : f.terms()) acc = subMulTerm(acc, field_.mul(minus1, t.coeff), t.mono, g);
  return acc;
}

Polynomial Ring::monic(const Polynomial& f) const {
  if (f.isZero() || f.leadCoeff() == field_.one()) return f;
  return scale(f, field_.inv(f.leadCoeff()));
}

Polynomial normalForm(const Ring& ring, const Polynomial& f, std::span<const Polynomial> gs,
                      std::vector<Polynomial>* cofactors) {
  const auto& F = ring.field();
  if (cofactors) cofactors->assign(gs.size(), Polynomial());
  std::vector<Term> rem;
  std::vector<Term> cur(f.terms().begin(), f.terms().end());
  std::vector<Term> scratch;
  std::size_t start = 0;
  while (start < cur.size()) {
    const Term lt = cur[start];
    std::size_t k = 0;
    for (; k < gs.size(); ++k) {
      if (!gs[k].isZero() && gs[k].leadMono().divides(lt.mono)) break;
    }
    if (k == gs.size()) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const Polynomial& g = gs[k];
    FieldElem c = F.div(lt.coeff, g.leadCoeff());
    Monomial t = lt.mono / g.leadMono();
    if (cofactors) {
      (*cofactors)[k] = ring.add((*cofactors)[k], ring.monomial(t, c));
    }
    mergeSubMul(ring, std::span<const Term>(cur).subspan(start), c, t, g.terms(), scratch);
    cur.swap(scratch);
    start = 0;
  }
  return ring.make(std::move(rem));
}

Polynomial sPolynomial(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  const auto& F = ring.field();
  const Term& lf = f.leadTerm();
  const Term& lg = g.leadTerm();
  Monomial l = lf.mono.lcm(lg.mono);
  Polynomial a = ring.mulTerm(f, F.inv(lf.coeff), l / lf.mono);
  return ring.subMulTerm(a, F.inv(lg.coeff), l / lg.mono, g);
}

std::vector<Polynomial> interreduce(const Ring& ring, std::span<const Polynomial> gs) {
  const auto& ord = ring.order();
  std::vector<Polynomial> work;
  for (const auto& g : gs) {
    if (!g.isZero()) work.push_back(ring.monic(g));
  }
  // Smallest leading monomials first so that each survivor only needs to be
  // checked against already kept elements.
  std::sort(work.begin(), work.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leadMono(), b.leadMono());
  });
  std::vector<Polynomial> kept;
  for (auto& g : work) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Polynomial& h) {
      return h.leadMono().divides(g.leadMono());
    });
    if (!redundant) kept.push_back(std::move(g));
  }
  // kept has pairwise non-dividing leading monomials; tail-reduce each
  // against the others.
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    out.push_back(ring.monic(normalForm(ring, kept[i], others)));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    auto c = ord.compare(a.leadMono(), b.leadMono());
    if (c != 0) return c > 0;
    const Monomial &x = a.leadMono(), &y = b.leadMono();
    for (std::size_t i = 0; i < x.nvars(); ++i) {
      if (x[i] != y[i]) return x[i] > y[i];
    }
    return false;
  });
  return out;
}

}  // namespace sigbasis
