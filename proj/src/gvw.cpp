#include "sigbasis/gvw.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace sigbasis {

SelectionStrategy parseSelectionStrategy(const std::string& name) {
  if (name == "min-sig" || name == "min_sig") return SelectionStrategy::MinSig;
  if (name == "min-degree" || name == "min_degree") return SelectionStrategy::MinDegree;
  if (name == "fifo") return SelectionStrategy::Fifo;
  throw std::invalid_argument("unknown selection strategy: " + name);
}

std::string toString(SelectionStrategy s) {
  switch (s) {
    case SelectionStrategy::MinSig: return "min-sig";
    case SelectionStrategy::MinDegree: return "min-degree";
    case SelectionStrategy::Fifo: return "fifo";
  }
  return "?";
}

bool syzygyReject(const ModuleMonomial& s, std::span<const ModuleMonomial> h) {
  return std::any_of(h.begin(), h.end(), [&](const ModuleMonomial& w) { return w.divides(s); });
}

bool coverReject(const JPair& jp, std::span<const LabeledPoly> basis, const MonomialOrder& ord) {
  for (const auto& g : basis) {
    if (g.poly.isZero() || !g.sig.divides(jp.sig)) continue;
    Monomial t = jp.sig.mono / g.sig.mono;
    if (ord.less(t * g.poly.leadMono(), jp.prod_lm)) return true;
  }
  return false;
}

namespace {

const LabeledPoly* regularReducer(const Monomial& m, const ModuleMonomial& s,
                                  std::span<const LabeledPoly> basis, const MonomialOrder& ord,
                                  const ModuleOrder& mord) {
  const LabeledPoly* best = nullptr;
  for (const auto& g : basis) {
    if (g.poly.isZero() || !g.poly.leadMono().divides(m)) continue;
    if (best) {
      auto c = ord.compare(g.poly.leadMono(), best->poly.leadMono());
      if (c > 0 || (c == 0 && g.id > best->id)) continue;
    }
    if (!mord.less(g.sig.mulBy(m / g.poly.leadMono()), s)) continue;
    best = &g;
  }
  return best;
}

}  // namespace

RegularReduction regularReduce(const ModuleMonomial& s, const Polynomial& f,
                               std::span<const LabeledPoly> basis, const Ring& ring,
                               const ModuleOrder& mord, bool tail) {
  const auto& F = ring.field();
  RegularReduction out;
  Polynomial cur = f;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term& term = cur.terms()[pos];
    const LabeledPoly* r = regularReducer(term.mono, s, basis, ring.order(), mord);
    if (!r) {
      if (!tail) break;
      ++pos;
      continue;
    }
    Monomial t = term.mono / r->poly.leadMono();
    FieldElem c = F.div(term.coeff, r->poly.leadCoeff());
    cur = ring.subMulTerm(cur, c, t, r->poly);
    out.steps.push_back(ReductionStep{c, std::move(t), r->id});
  }
  if (!cur.isZero()) {
    out.scale = F.inv(cur.leadCoeff());
    cur = ring.scale(cur, out.scale);
  }
  out.poly = std::move(cur);
  return out;
}

// ---------------------------------------------------------------------------
// Module vectors

namespace {

ModuleVector zeroVector(std::size_t m) { return ModuleVector(m); }

// acc - c*t*v
void subMulVector(const Ring& ring, ModuleVector& acc, FieldElem c, const Monomial& t,
                  const ModuleVector& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = ring.subMulTerm(acc[i], c, t, v[i]);
}

ModuleVector scaleVector(const Ring& ring, const ModuleVector& v, FieldElem c, const Monomial& t) {
  ModuleVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ring.mulTerm(v[i], c, t);
  return out;
}

ModuleVector expandTrace(const Ring& ring, std::size_t m, const ProvenanceTrace& trace,
                         const std::function<const ModuleVector&(std::size_t)>& lookup) {
  ModuleVector v;
  if (const auto* gen = std::get_if<GeneratorOrigin>(&trace.origin)) {
    v = zeroVector(m);
    v[gen->index - 1] = ring.constant(ring.field().one());
  } else {
    const auto& jp = std::get<JPairOrigin>(trace.origin);
    v = scaleVector(ring, lookup(jp.parent), ring.field().one(), jp.t);
  }
  for (const auto& st : trace.steps) subMulVector(ring, v, st.coeff, st.mult, lookup(st.reducer));
  if (!(trace.scale == ring.field().one())) v = scaleVector(ring, v, trace.scale, ring.one());
  return v;
}

}  // namespace

Polynomial applyPhi(const Ring& ring, std::span<const Polynomial> generators, const ModuleVector& v) {
  if (v.size() != generators.size()) throw std::invalid_argument("module vector rank mismatch");
  Polynomial acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc = ring.add(acc, ring.mul(v[i], generators[i]));
  return acc;
}

std::optional<ModuleMonomial> moduleLeading(const ModuleVector& v, const ModuleOrder& mord) {
  std::optional<ModuleMonomial> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].isZero()) continue;
    ModuleMonomial cand{static_cast<std::uint32_t>(i + 1), v[i].leadMono()};
    if (!best || mord.compare(cand, *best) > 0) best = std::move(cand);
  }
  return best;
}

VectorRecovery::VectorRecovery(const Ring& ring, std::span<const Polynomial> generators,
                               std::span<const LabeledPoly> basis)
    : ring_(ring), generators_(generators), basis_(basis) {}

ModuleVector VectorRecovery::expand(const ProvenanceTrace& trace) {
  return expandTrace(ring_, generators_.size(), trace,
                     [this](std::size_t id) -> const ModuleVector& { return element(id); });
}

const ModuleVector& VectorRecovery::element(std::size_t id) {
  if (id >= basis_.size()) throw std::out_of_range("missing trace for id " + std::to_string(id));
  // Parents and reducers always have smaller ids, so fill in creation order.
  cache_.reserve(basis_.size());
  while (cache_.size() <= id) {
    const std::size_t k = cache_.size();
    cache_.push_back(expand(basis_[k].trace));
  }
  return cache_[id];
}

ModuleVector VectorRecovery::syzygy(const SyzygyRecord& rec) {
  const std::size_t m = generators_.size();
  if (const auto* p = std::get_if<PrincipalSyzygy>(&rec.origin)) {
    if (p->i < 1 || p->j > m || p->i >= p->j) throw std::out_of_range("bad principal syzygy");
    ModuleVector v = zeroVector(m);
    v[p->i - 1] = generators_[p->j - 1];
    v[p->j - 1] = ring_.neg(generators_[p->i - 1]);
    return v;
  }
  if (const auto* r = std::get_if<ReducedSyzygy>(&rec.origin)) return expand(r->trace);
  const auto& k = std::get<KoszulSyzygy>(rec.origin);
  if (k.a >= basis_.size() || k.b >= basis_.size()) {
    throw std::out_of_range("missing trace for koszul syzygy");
  }
  const Polynomial& ga = basis_[k.a].poly;
  const Polynomial& gb = basis_[k.b].poly;
  ModuleVector va = element(k.a);
  ModuleVector vb = element(k.b);
  ModuleVector v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = ring_.sub(ring_.mul(ga, vb[i]), ring_.mul(gb, va[i]));
  return v;
}

// ---------------------------------------------------------------------------
// Engine

bool GvwEngine::EntryCmp::operator()(const Entry& a, const Entry& b) const {
  const auto& mord = engine->mord_;
  const auto& ord = engine->ring_.order();
  switch (engine->options_.strategy) {
    case SelectionStrategy::Fifo:
      return a.seq < b.seq;
    case SelectionStrategy::MinDegree:
      if (a.degree != b.degree) return a.degree < b.degree;
      [[fallthrough]];
    case SelectionStrategy::MinSig: {
      auto c = mord.compare(a.jp.sig, b.jp.sig);
      if (c != 0) return c < 0;
      c = ord.compare(a.jp.prod_lm, b.jp.prod_lm);
      if (c != 0) return c < 0;
      if (a.jp.parent != b.jp.parent) return a.jp.parent < b.jp.parent;
      return a.seq < b.seq;
    }
  }
  return a.seq < b.seq;
}

GvwEngine::GvwEngine(Ring ring, std::vector<Polynomial> generators, ModuleOrderKind mkind,
                     GvwOptions options)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      mord_(mkind, ring_.order(),
            [&] {
              for (const auto& f : generators_) {
                if (f.isZero()) throw std::invalid_argument("gvw: zero generator (strip zeros first)");
              }
              if (generators_.empty()) throw std::invalid_argument("gvw: no generators");
              return leadingMonomials(generators_);
            }()),
      options_(options),
      queue_(EntryCmp{this}),
      bySig_(SigLess{&mord_}) {
  const auto m = static_cast<std::uint32_t>(generators_.size());
  for (const auto& f : generators_) {
    std::uint32_t d = 0;
    for (const auto& t : f.terms()) d = std::max(d, t.mono.degree());
    generatorDegrees_.push_back(d);
  }
  for (std::uint32_t j = 2; j <= m; ++j) {
    for (std::uint32_t i = 1; i < j; ++i) {
      ModuleMonomial a{i, generators_[j - 1].leadMono()};
      ModuleMonomial b{j, generators_[i - 1].leadMono()};
      addSyzygy(SyzygyRecord{mord_.compare(a, b) > 0 ? a : b, PrincipalSyzygy{i, j}});
    }
  }
  for (std::uint32_t i = 1; i <= m; ++i) {
    LabeledPoly lp;
    lp.sig = ModuleMonomial{i, ring_.one()};
    lp.trace.origin = GeneratorOrigin{i};
    lp.trace.scale = ring_.field().inv(generators_[i - 1].leadCoeff());
    lp.poly = ring_.scale(generators_[i - 1], lp.trace.scale);
    lp.id = basis_.size();
    appendElement(std::move(lp));
  }
}

void GvwEngine::addSyzygy(SyzygyRecord rec) {
  if (!syzygyReject(rec.lm, hMinimal_)) {
    std::erase_if(hMinimal_, [&](const ModuleMonomial& w) { return rec.lm.divides(w); });
    hMinimal_.push_back(rec.lm);
  }
  syzygies_.push_back(std::move(rec));
}

std::vector<ModuleMonomial> GvwEngine::syzygyLms() const {
  return minimalModuleMonomials(hMinimal_, mord_);
}

std::vector<Polynomial> GvwEngine::basisPolynomials() const {
  std::vector<Polynomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.poly);
  return out;
}

std::vector<JPair> GvwEngine::queuedPairs() const {
  std::vector<JPair> out;
  out.reserve(queue_.size());
  for (const auto& e : queue_) out.push_back(e.jp);
  return out;
}

void GvwEngine::enqueue(JPair jp) {
  std::uint32_t degree = jp.sig.mono.degree() + generatorDegrees_[jp.sig.index - 1];
  auto [it, inserted] = queue_.insert(Entry{std::move(jp), seq_++, degree});
  bySig_[it->jp.sig].push_back(it);
}

JPair GvwEngine::popPair() {
  auto head = queue_.begin();
  auto group = bySig_.find(head->jp.sig);
  auto& members = group->second;
  if (!options_.dedup) {
    JPair jp = head->jp;
    std::erase(members, head);
    if (members.empty()) bySig_.erase(group);
    queue_.erase(head);
    return jp;
  }
  const auto& ord = ring_.order();
  auto best = members.front();
  for (auto it : members) {
    auto c = ord.compare(it->jp.prod_lm, best->jp.prod_lm);
    if (c < 0 || (c == 0 && it->jp.parent < best->jp.parent)) best = it;
  }
  JPair jp = best->jp;
  stats_.jpairs_dedup_rejected += members.size() - 1;
  for (auto it : members) queue_.erase(it);
  bySig_.erase(group);
  return jp;
}

void GvwEngine::appendElement(LabeledPoly lp) {
  if (options_.track_vectors) {
    vectors_.push_back(expandTrace(ring_, generators_.size(), lp.trace,
                                   [this](std::size_t id) -> const ModuleVector& { return vectors_[id]; }));
    checkOnlineVector(lp);
  }
  for (const auto& g : basis_) {
    if (options_.koszul_syzygies) {
      ModuleMonomial a = lp.sig.mulBy(g.poly.leadMono());
      ModuleMonomial b = g.sig.mulBy(lp.poly.leadMono());
      auto c = mord_.compare(a, b);
      if (c != 0) {
        ++stats_.koszul_syzygies;
        addSyzygy(SyzygyRecord{c > 0 ? a : b, KoszulSyzygy{g.id, lp.id}});
      }
    }
    auto jp = makeJPair(lp, g, mord_);
    if (!jp) continue;
    ++stats_.jpairs_created;
    if (syzygyReject(jp->sig, hMinimal_)) {
      ++stats_.jpairs_sig_rejected_creation;
      continue;
    }
    enqueue(std::move(*jp));
  }
  basis_.push_back(std::move(lp));
}

void GvwEngine::checkOnlineVector(const LabeledPoly& lp) {
  const ModuleVector& v = vectors_.back();
  if (!(applyPhi(ring_, generators_, v) == lp.poly)) {
    throw std::logic_error("gvw: tracked vector does not map to its polynomial");
  }
  auto lead = moduleLeading(v, mord_);
  if (!lead || !(*lead == lp.sig)) {
    throw std::logic_error("gvw: tracked vector has the wrong signature");
  }
}

StepEvent GvwEngine::step() {
  StepEvent ev;
  if (queue_.empty()) return ev;
  JPair jp = popPair();
  ev.pair = jp;
  ev.kind = StepEvent::Kind::Rejected;
  if (syzygyReject(jp.sig, hMinimal_)) {
    ++stats_.jpairs_sig_rejected_pop;
    ev.reject = StepEvent::Reject::Syzygy;
    return ev;
  }
  if (options_.cover_criterion && coverReject(jp, basis_, ring_.order())) {
    ++stats_.jpairs_cover_rejected;
    ev.reject = StepEvent::Reject::Cover;
    return ev;
  }
  const LabeledPoly& parent = basis_[jp.parent];
  Polynomial f = ring_.mulTerm(parent.poly, ring_.field().one(), jp.t);
  RegularReduction red = regularReduce(jp.sig, f, basis_, ring_, mord_, options_.tail_reduce);
  ++stats_.reductions;
  stats_.reduction_steps += red.steps.size();
  if (stats_.reduction_steps > options_.step_limit) throw StepLimitExceeded(options_.step_limit);

  ProvenanceTrace trace{JPairOrigin{jp.t, jp.parent}, std::move(red.steps), red.scale};
  if (red.poly.isZero()) {
    ++stats_.zero_reductions;
    addSyzygy(SyzygyRecord{jp.sig, ReducedSyzygy{std::move(trace)}});
    ev.kind = StepEvent::Kind::SyzygyFound;
    return ev;
  }
  LabeledPoly lp;
  lp.sig = jp.sig;
  lp.poly = std::move(red.poly);
  lp.trace = std::move(trace);
  lp.id = basis_.size();
  appendElement(std::move(lp));
  ev.kind = StepEvent::Kind::BasisExtended;
  return ev;
}

void GvwEngine::run() {
  while (step().kind != StepEvent::Kind::QueueEmpty) {
  }
}

GvwResult gvwRun(const Ring& ring, std::span<const Polynomial> generators, ModuleOrderKind mkind,
                 const GvwOptions& options) {
  GvwEngine engine(ring, std::vector<Polynomial>(generators.begin(), generators.end()), mkind,
                   options);
  engine.run();
  return GvwResult{engine.basis(), engine.syzygies(), engine.syzygyLms(), engine.stats()};
}

// ---------------------------------------------------------------------------
// Signature enumeration

namespace {

void monomialsUpTo(std::size_t nvars, std::uint32_t bound, std::vector<std::uint32_t>& exps,
                   std::size_t var, std::uint32_t used, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.emplace_back(nvars, std::span<const std::uint32_t>(exps));
    return;
  }
  for (std::uint32_t e = 0; used + e <= bound; ++e) {
    exps[var] = e;
    monomialsUpTo(nvars, bound, exps, var + 1, used + e, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<ModuleMonomial> signatureEnumerate(const Ring& ring,
                                               std::span<const Polynomial> generators,
                                               const ModuleOrder& mord, std::uint32_t degBound) {
  const auto& F = ring.field();
  std::vector<Monomial> monos;
  std::vector<std::uint32_t> exps(ring.nvars(), 0);
  monomialsUpTo(ring.nvars(), degBound, exps, 0, 0, monos);

  std::vector<ModuleMonomial> order;
  for (std::uint32_t j = 1; j <= generators.size(); ++j) {
    for (const auto& t : monos) order.push_back(ModuleMonomial{j, t});
  }
  std::sort(order.begin(), order.end(),
            [&](const ModuleMonomial& a, const ModuleMonomial& b) { return mord.less(a, b); });

  // Linear basis of the images seen so far, one row per distinct leading monomial.
  std::unordered_map<Monomial, Polynomial, MonomialHash> rows;
  std::vector<ModuleMonomial> kernelLms;
  for (const auto& s : order) {
    if (syzygyReject(s, kernelLms)) continue;
    Polynomial img = ring.mulTerm(generators[s.index - 1], F.one(), s.mono);
    while (!img.isZero()) {
      auto it = rows.find(img.leadMono());
      if (it == rows.end()) break;
      img = ring.subMulTerm(img, img.leadCoeff(), ring.one(), it->second);
    }
    if (img.isZero()) {
      kernelLms.push_back(s);
    } else {
      Polynomial row = ring.monic(img);
      Monomial key = row.leadMono();
      rows.emplace(std::move(key), std::move(row));
    }
  }
  return minimalModuleMonomials(std::move(kernelLms), mord);
}

}  // namespace sigbasis
