#include "sigbasis/mmm.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace sigbasis {

namespace {

// a - c*b
SparseVector axpy(const PrimeField& F, const SparseVector& a, FieldElem c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, F.neg(F.mul(c, b[j].second)));
      ++j;
    } else {
      FieldElem v = F.sub(a[i].second, F.mul(c, b[j].second));
      if (!v.isZero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<FieldElem> entryAt(const SparseVector& v, std::uint32_t pos) {
  auto it = std::lower_bound(v.begin(), v.end(), pos,
                             [](const auto& e, std::uint32_t p) { return e.first < p; });
  if (it == v.end() || it->first != pos) return std::nullopt;
  return it->second;
}

}  // namespace

SparseVector LinearMap::apply(const Polynomial& f, const PrimeField& field) const {
  SparseVector acc;
  const FieldElem minus1 = field.neg(field.one());
  for (const auto& t : f.terms()) acc = axpy(field, acc, field.mul(minus1, t.coeff), eval(t.mono));
  return acc;
}

std::vector<Monomial> quotientBasis(const Ring& ring, std::span<const Polynomial> gb) {
  std::vector<Monomial> lms;
  for (const auto& g : gb) {
    if (!g.isZero()) lms.push_back(g.leadMono());
  }
  auto divisible = [&](const Monomial& m) {
    return std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    bool purePower = std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) {
      return l.degree() > 0 && l.degree() == l[i];
    });
    if (!purePower && !divisible(ring.one())) throw NotZeroDimensional();
  }
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> todo{ring.one()};
  seen.insert(ring.one());
  while (!todo.empty()) {
    Monomial m = todo.front();
    todo.pop_front();
    if (divisible(m)) continue;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      Monomial next = m * ring.var(i);
      if (seen.insert(next).second) todo.push_back(next);
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), MonomialLess{ring.order()});
  return out;
}

LinearMap nfMapFromGb(const Ring& ring, std::vector<Polynomial> gb) {
  std::vector<Monomial> basis = quotientBasis(ring, gb);
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  for (std::uint32_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::size_t dim = basis.size();
  return LinearMap(dim, [ring, gb = std::move(gb), index = std::move(index)](const Monomial& m) {
    Polynomial r = normalForm(ring, ring.monomial(m), gb);
    SparseVector v;
    v.reserve(r.size());
    for (const auto& t : r.terms()) v.emplace_back(index.at(t.mono), t.coeff);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  });
}

MmmResult mmmKernelRun(const LinearMap& map, const Ring& ring) {
  const auto& F = ring.field();
  MmmResult result;
  std::vector<Monomial> staircase;
  std::unordered_map<std::uint32_t, std::size_t> rowOfPivot;
  std::set<Monomial, MonomialLess> frontier(MonomialLess{ring.order()});
  frontier.insert(ring.one());

  auto inStaircase = [&](const Monomial& m) {
    return std::any_of(staircase.begin(), staircase.end(),
                       [&](const Monomial& s) { return s.divides(m); });
  };

  while (!frontier.empty()) {
    Monomial m = *frontier.begin();
    frontier.erase(frontier.begin());
    if (inStaircase(m)) continue;

    SparseVector v = map.eval(m);
    ++result.stats.evaluations;
    Polynomial pre = ring.monomial(m);
    // Rows are fully reduced, so the original coefficient at each pivot is
    // the multiplier of that row.
    const SparseVector original = v;
    for (const auto& [pos, c] : original) {
      auto r = rowOfPivot.find(pos);
      if (r == rowOfPivot.end()) continue;
      const EchelonRow& row = result.rows[r->second];
      v = axpy(F, v, c, row.coords);
      pre = ring.subMulTerm(pre, c, ring.one(), row.preimage);
    }

    if (v.empty()) {
      std::erase_if(staircase, [&](const Monomial& s) { return m.divides(s); });
      staircase.push_back(m);
      result.basis.push_back(std::move(pre));
      continue;
    }

    FieldElem inv = F.inv(v.front().second);
    for (auto& e : v) e.second = F.mul(e.second, inv);
    pre = ring.scale(pre, inv);
    const std::uint32_t pivot = v.front().first;
    for (auto& row : result.rows) {
      if (auto c = entryAt(row.coords, pivot)) {
        row.coords = axpy(F, row.coords, *c, v);
        row.preimage = ring.subMulTerm(row.preimage, *c, ring.one(), pre);
      }
    }
    rowOfPivot.emplace(pivot, result.rows.size());
    result.rows.push_back(EchelonRow{pivot, std::move(v), m, std::move(pre)});
    for (std::size_t k = 0; k < ring.nvars(); ++k) {
      Monomial child = m * ring.var(k);
      if (!inStaircase(child)) frontier.insert(std::move(child));
    }
  }

  std::sort(result.basis.begin(), result.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.order().greater(a.leadMono(), b.leadMono());
  });
  result.stats.echelon_rows = result.rows.size();
  result.stats.staircase = staircase.size();
  return result;
}

std::vector<Polynomial> fglm(const Ring& ringSrc, std::span<const Polynomial> gbSrc,
                             MonomialOrder dstOrder) {
  LinearMap map = nfMapFromGb(ringSrc, std::vector<Polynomial>(gbSrc.begin(), gbSrc.end()));
  return mmmKernelGb(map, ringSrc.withOrder(dstOrder));
}

}  // namespace sigbasis
