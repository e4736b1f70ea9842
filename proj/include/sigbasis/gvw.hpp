#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sigbasis/polynomial.hpp"
#include "sigbasis/signature.hpp"

namespace sigbasis {

// MinSig: smallest signature, then smallest prod_lm, then smallest parent id.
// MinDegree: smallest signature degree deg(t) + deg(f_i) for a signature
// t*e_i, then as MinSig. Fifo: creation order.
enum class SelectionStrategy { MinSig, MinDegree, Fifo };

SelectionStrategy parseSelectionStrategy(const std::string& name);
std::string toString(SelectionStrategy s);

struct GvwOptions {
  SelectionStrategy strategy = SelectionStrategy::MinSig;
  // Maintain module vectors online and check each new element's signature
  // against its vector. Slow; meant for tests.
  bool track_vectors = false;
  // Keep only the smallest-product pair among queued pairs of equal signature.
  bool dedup = true;
  bool cover_criterion = true;
  // Record lm(g_a v_b - g_b v_a) for each new element against the basis.
  bool koszul_syzygies = true;
  // Also reduce non-leading terms with regular reducers.
  bool tail_reduce = false;
  // Abort with StepLimitExceeded after this many one-step reductions.
  std::uint64_t step_limit = 1'000'000;
};

struct GvwStats {
  std::uint64_t jpairs_created = 0;
  std::uint64_t jpairs_sig_rejected_creation = 0;
  std::uint64_t jpairs_sig_rejected_pop = 0;
  std::uint64_t jpairs_cover_rejected = 0;
  std::uint64_t jpairs_dedup_rejected = 0;
  std::uint64_t reductions = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t koszul_syzygies = 0;

  std::uint64_t jpairs_sig_rejected() const {
    return jpairs_sig_rejected_creation + jpairs_sig_rejected_pop;
  }
};

class StepLimitExceeded : public std::runtime_error {
 public:
  explicit StepLimitExceeded(std::uint64_t limit)
      : std::runtime_error("step limit of " + std::to_string(limit) + " reductions exceeded") {}
};

using ModuleVector = std::vector<Polynomial>;

struct PrincipalSyzygy {
  std::uint32_t i;  // 1-based, i < j: f_j e_i - f_i e_j
  std::uint32_t j;
};
struct ReducedSyzygy {
  ProvenanceTrace trace;  // a JPair that reduced to zero
};
struct KoszulSyzygy {
  std::size_t a;  // ids: g_a v_b - g_b v_a
  std::size_t b;
};

struct SyzygyRecord {
  ModuleMonomial lm;
  std::variant<PrincipalSyzygy, ReducedSyzygy, KoszulSyzygy> origin;
};

// True iff some member of h divides s (same index, monomial divides).
bool syzygyReject(const ModuleMonomial& s, std::span<const ModuleMonomial> h);

// True iff some (sigma, g) in basis has sigma | jp.sig and
// (jp.sig / sigma) * lm(g) strictly below jp.prod_lm.
bool coverReject(const JPair& jp, std::span<const LabeledPoly> basis, const MonomialOrder& ord);

struct RegularReduction {
  Polynomial poly;                   // monic or zero
  std::vector<ReductionStep> steps;  // subtractions in order
  FieldElem scale{1};                // poly = scale * (f - sum steps)
};

// Top-reduces f, whose vector has signature s, using only reducers g with
// (m/lm(g)) * sig(g) strictly below s for the term m being cancelled. Ties go
// to the smallest lm(g), then the smallest id. With tail set, the remaining
// terms are reduced under the same condition once the leading term is stuck.
RegularReduction regularReduce(const ModuleMonomial& s, const Polynomial& f,
                               std::span<const LabeledPoly> basis, const Ring& ring,
                               const ModuleOrder& mord, bool tail = false);

struct StepEvent {
  enum class Kind { SyzygyFound, BasisExtended, Rejected, QueueEmpty };
  enum class Reject { None, Syzygy, Cover };

  Kind kind = Kind::QueueEmpty;
  Reject reject = Reject::None;
  std::optional<JPair> pair;  // the pair that was processed
};

// Algorithm state: strong basis G, syzygy leading monomials H, and the JPair
// queue ordered by the selection strategy. Zero generators must be stripped by
// the caller.
class GvwEngine {
 public:
  GvwEngine(Ring ring, std::vector<Polynomial> generators, ModuleOrderKind mkind,
            GvwOptions options = {});
  GvwEngine(const GvwEngine&) = delete;
  GvwEngine& operator=(const GvwEngine&) = delete;

  // Processes one JPair.
  StepEvent step();
  // Steps until the queue is empty.
  void run();

  const Ring& ring() const { return ring_; }
  const ModuleOrder& moduleOrder() const { return mord_; }
  const GvwOptions& options() const { return options_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<LabeledPoly>& basis() const { return basis_; }
  const std::vector<SyzygyRecord>& syzygies() const { return syzygies_; }
  // Minimal generators of the recorded syzygy leading monomials, ascending.
  std::vector<ModuleMonomial> syzygyLms() const;
  const GvwStats& stats() const { return stats_; }
  std::vector<Polynomial> basisPolynomials() const;
  // Queued pairs in pop order.
  std::vector<JPair> queuedPairs() const;
  bool queueEmpty() const { return queue_.empty(); }
  // Only populated with track_vectors.
  const std::vector<ModuleVector>& onlineVectors() const { return vectors_; }

 private:
  struct Entry {
    JPair jp;
    std::uint64_t seq;
    std::uint32_t degree;
  };
  struct EntryCmp {
    const GvwEngine* engine;
    bool operator()(const Entry& a, const Entry& b) const;
  };
  struct SigLess {
    const ModuleOrder* mord;
    bool operator()(const ModuleMonomial& a, const ModuleMonomial& b) const {
      return mord->less(a, b);
    }
  };
  using Queue = std::set<Entry, EntryCmp>;

  void enqueue(JPair jp);
  JPair popPair();
  void addSyzygy(SyzygyRecord rec);
  void appendElement(LabeledPoly lp);
  void checkOnlineVector(const LabeledPoly& lp);

  Ring ring_;
  std::vector<Polynomial> generators_;
  ModuleOrder mord_;
  GvwOptions options_;
  std::vector<std::uint32_t> generatorDegrees_;
  std::vector<LabeledPoly> basis_;
  std::vector<SyzygyRecord> syzygies_;
  std::vector<ModuleMonomial> hMinimal_;
  Queue queue_;
  std::map<ModuleMonomial, std::vector<Queue::iterator>, SigLess> bySig_;
  std::uint64_t seq_ = 0;
  GvwStats stats_;
  std::vector<ModuleVector> vectors_;
};

struct GvwResult {
  std::vector<LabeledPoly> basis;
  std::vector<SyzygyRecord> syzygies;
  std::vector<ModuleMonomial> syzygy_lms;  // minimal
  GvwStats stats;
};

GvwResult gvwRun(const Ring& ring, std::span<const Polynomial> generators, ModuleOrderKind mkind,
                 const GvwOptions& options = {});

// phi(v) = sum v_i f_i.
Polynomial applyPhi(const Ring& ring, std::span<const Polynomial> generators, const ModuleVector& v);

// Leading module monomial of v; nullopt for the zero vector.
std::optional<ModuleMonomial> moduleLeading(const ModuleVector& v, const ModuleOrder& mord);

// Rebuilds module vectors from provenance traces after a run. Throws
// std::out_of_range on ids without a trace.
class VectorRecovery {
 public:
  VectorRecovery(const Ring& ring, std::span<const Polynomial> generators,
                 std::span<const LabeledPoly> basis);

  const ModuleVector& element(std::size_t id);
  ModuleVector syzygy(const SyzygyRecord& rec);

 private:
  ModuleVector expand(const ProvenanceTrace& trace);

  const Ring& ring_;
  std::span<const Polynomial> generators_;
  std::span<const LabeledPoly> basis_;
  std::vector<ModuleVector> cache_;
};

// Degree-truncated enumeration of module monomials t*e_j (deg t <= degBound)
// in ascending module order, detecting linear dependence of t*f_j against the
// images seen so far. Returns the minimal dependent module monomials.
std::vector<ModuleMonomial> signatureEnumerate(const Ring& ring,
                                               std::span<const Polynomial> generators,
                                               const ModuleOrder& mord, std::uint32_t degBound);

}  // namespace sigbasis
