#include "sigbasis/buchberger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace sigbasis {

namespace {

class PairQueue {
 public:
  explicit PairQueue(MonomialOrder order) : set_(Cmp{order}) {}

  void push(CriticalPair p) { set_.insert(std::move(p)); }
  bool empty() const { return set_.empty(); }
  CriticalPair pop() {
    auto it = set_.begin();
    CriticalPair p = *it;
    set_.erase(it);
    return p;
  }
  template <typename Pred>
  std::uint64_t eraseIf(Pred pred) {
    std::uint64_t n = 0;
    for (auto it = set_.begin(); it != set_.end();) {
      if (pred(*it)) {
        it = set_.erase(it);
        ++n;
      } else {
        ++it;
      }
    }
    return n;
  }

 private:
  struct Cmp {
    MonomialOrder order;
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };
  std::set<CriticalPair, Cmp> set_;
};

CriticalPair makePair(const std::vector<Polynomial>& basis, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  Monomial l = basis[i].leadMono().lcm(basis[j].leadMono());
  std::uint32_t d = l.degree();
  return CriticalPair{i, j, std::move(l), d};
}

class Engine {
 public:
  Engine(const Ring& ring, const BuchbergerOptions& options)
      : ring_(ring), options_(options), queue_(ring.order()) {}

  void insert(Polynomial h) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    active_.push_back(true);
    if (options_.criteria) {
      gebauerMoeller(hi);
    } else {
      for (std::size_t g = 0; g < hi; ++g) {
        queue_.push(makePair(basis_, g, hi));
        ++stats_.pairs_created;
      }
    }
  }

  void run() {
    while (!queue_.empty()) {
      CriticalPair p = queue_.pop();
      ++stats_.pairs_reduced;
      Polynomial s = sPolynomial(ring_, basis_[p.i], basis_[p.j]);
      Polynomial h = normalForm(ring_, s, reducers());
      if (h.isZero()) {
        ++stats_.zero_reductions;
      } else {
        insert(ring_.monic(h));
      }
    }
  }

  BuchbergerResult result() {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) out.push_back(basis_[k]);
    }
    return BuchbergerResult{std::move(out), stats_};
  }

 private:
  std::vector<Polynomial> reducers() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) out.push_back(basis_[k]);
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_.order().less(a.leadMono(), b.leadMono());
    });
    return out;
  }

  // Becker-Weispfenning UPDATE for the new element hi.
  void gebauerMoeller(std::size_t hi) {
    const Monomial& lh = basis_[hi].leadMono();
    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) {
        candidates.push_back(makePair(basis_, g, hi));
        ++stats_.pairs_created;
      }
    }
    auto other = [hi](const CriticalPair& p) { return p.i == hi ? p.j : p.i; };

    // Chain criterion among the new pairs.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const CriticalPair& p = candidates[a];
      bool coprime = lh.coprime(basis_[other(p)].leadMono());
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b) {
          dominated = candidates[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
          dominated = kept[b].lcm.divides(p.lcm);
        }
      }
      if (dominated) {
        ++stats_.chain_criterion;
      } else {
        kept.push_back(p);
      }
    }
    // Product criterion.
    std::vector<CriticalPair> fresh;
    for (auto& p : kept) {
      if (lh.coprime(basis_[other(p)].leadMono())) {
        ++stats_.product_criterion;
      } else {
        fresh.push_back(std::move(p));
      }
    }
    // Chain criterion on old pairs: lm(h) | lcm(i,j) with both new lcms different.
    stats_.chain_criterion += queue_.eraseIf([&](const CriticalPair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial li = basis_[p.i].leadMono().lcm(lh);
      Monomial lj = basis_[p.j].leadMono().lcm(lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (auto& p : fresh) queue_.push(std::move(p));

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(basis_[g].leadMono())) active_[g] = false;
    }
  }

  const Ring& ring_;
  BuchbergerOptions options_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  PairQueue queue_;
  BuchbergerStats stats_;
};

bool topReducesToZero(const Ring& ring, Polynomial f, std::span<const Polynomial> reducers) {
  const auto& F = ring.field();
  while (!f.isZero()) {
    const Term& lt = f.leadTerm();
    auto it = std::find_if(reducers.begin(), reducers.end(),
                           [&](const Polynomial& g) { return g.leadMono().divides(lt.mono); });
    if (it == reducers.end()) return false;
    f = ring.subMulTerm(f, F.div(lt.coeff, it->leadCoeff()), lt.mono / it->leadMono(), *it);
  }
  return true;
}

// Normal forms of monomials modulo a fixed reducer list, memoised so that many
// large polynomials over the same monomials can be tested for membership.
class MonomialNormalForms {
 public:
  MonomialNormalForms(const Ring& ring, std::span<const Polynomial> reducers)
      : ring_(ring), reducers_(reducers) {}

  bool reducesToZero(const Polynomial& f) {
    std::unordered_map<Monomial, FieldElem, MonomialHash> acc;
    for (const auto& t : f.terms()) addScaled(acc, t.coeff, of(t.mono));
    return std::all_of(acc.begin(), acc.end(), [](const auto& e) { return e.second.isZero(); });
  }

 private:
  using Terms = std::vector<Term>;

  void addScaled(std::unordered_map<Monomial, FieldElem, MonomialHash>& acc, FieldElem c,
                 const Terms& terms) {
    const auto& F = ring_.field();
    for (const auto& t : terms) {
      auto [it, fresh] = acc.try_emplace(t.mono, F.zero());
      it->second = F.add(it->second, F.mul(c, t.coeff));
    }
  }

  const Terms& of(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    auto r = std::find_if(reducers_.begin(), reducers_.end(),
                          [&](const Polynomial& g) { return g.leadMono().divides(m); });
    Terms out;
    if (r == reducers_.end()) {
      out.push_back(Term{m, ring_.field().one()});
    } else {
      const auto& F = ring_.field();
      const Monomial q = m / r->leadMono();
      const FieldElem scale = F.neg(F.inv(r->leadCoeff()));
      std::unordered_map<Monomial, FieldElem, MonomialHash> acc;
      for (const auto& t : r->terms().subspan(1)) addScaled(acc, F.mul(scale, t.coeff), of(q * t.mono));
      for (auto& [mono, c] : acc) {
        if (!c.isZero()) out.push_back(Term{mono, c});
      }
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }

  const Ring& ring_;
  std::span<const Polynomial> reducers_;
  std::unordered_map<Monomial, Terms, MonomialHash> memo_;
};

// Searches the S-pairs among g[live] for one that does not top-reduce to zero.
std::optional<SPairWitness> searchPairs(const Ring& ring, std::span<const Polynomial> g,
                                        const std::vector<std::size_t>& live) {
  const auto& ord = ring.order();
  std::vector<Polynomial> reducers;
  for (std::size_t k : live) reducers.push_back(g[k]);
  std::sort(reducers.begin(), reducers.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leadMono(), b.leadMono());
  });

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  for (std::size_t b = 0; b < live.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      pairs.push_back(Pair{a, b, g[live[a]].leadMono().lcm(g[live[b]].leadMono())});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const Pair& x, const Pair& y) { return ord.less(x.lcm, y.lcm); });

  // A pair is settled once its S-polynomial has a representation below its
  // lcm: by reduction to zero, coprime leading monomials, or two settled pairs
  // through a third element whose leading monomial divides the lcm.
  const std::size_t n = live.size();
  std::vector<char> settled(n * n, 0);
  auto isSettled = [&](std::size_t a, std::size_t b) { return settled[a * n + b] != 0; };
  auto settle = [&](std::size_t a, std::size_t b) { settled[a * n + b] = settled[b * n + a] = 1; };

  for (const auto& p : pairs) {
    const Polynomial& gi = g[live[p.i]];
    const Polynomial& gj = g[live[p.j]];
    bool done = gi.leadMono().coprime(gj.leadMono());
    for (std::size_t k = 0; !done && k < n; ++k) {
      if (k == p.i || k == p.j) continue;
      done = isSettled(p.i, k) && isSettled(p.j, k) && g[live[k]].leadMono().divides(p.lcm);
    }
    if (!done) {
      Polynomial s = sPolynomial(ring, gi, gj);
      if (!topReducesToZero(ring, s, reducers)) {
        Polynomial r = normalForm(ring, s, reducers);
        return SPairWitness{live[p.i], live[p.j], std::move(s), std::move(r)};
      }
    }
    settle(p.i, p.j);
  }
  return std::nullopt;
}

}  // namespace

BuchbergerResult buchbergerRun(const Ring& ring, std::span<const Polynomial> generators,
                               const BuchbergerOptions& options) {
  Engine engine(ring, options);
  bool any = false;
  for (const auto& f : generators) {
    if (f.isZero()) continue;
    any = true;
    engine.insert(ring.monic(f));
  }
  if (!any) throw std::invalid_argument("buchberger: all generators are zero");
  engine.run();
  return engine.result();
}

std::optional<SPairWitness> findNonReducingSPair(const Ring& ring, std::span<const Polynomial> g) {
  const auto& ord = ring.order();
  std::vector<std::size_t> live, minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!g[k].isZero()) live.push_back(k);
  }
  // g is a Groebner basis iff its elements with minimal leading monomials form
  // one and every other element reduces to zero modulo them.
  for (std::size_t k : live) {
    bool redundant = false;
    for (std::size_t l : live) {
      if (l == k) continue;
      const Monomial& ml = g[l].leadMono();
      const Monomial& mk = g[k].leadMono();
      if (ml.divides(mk) && (!(ml == mk) || l < k)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(k);
  }
  if (auto w = searchPairs(ring, g, minimal)) return w;
  std::vector<Polynomial> reducers;
  for (std::size_t k : minimal) reducers.push_back(g[k]);
  std::sort(reducers.begin(), reducers.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leadMono(), b.leadMono());
  });
  MonomialNormalForms nf(ring, reducers);
  for (std::size_t k : live) {
    if (std::find(minimal.begin(), minimal.end(), k) != minimal.end()) continue;
    if (!nf.reducesToZero(g[k])) return searchPairs(ring, g, live);
  }
  return std::nullopt;
}

}  // namespace sigbasis
