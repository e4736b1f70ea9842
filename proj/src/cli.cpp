#include "sigbasis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "sigbasis/io.hpp"
#include "sigbasis/mmm.hpp"

namespace sigbasis {

std::string formatStats(const GvwStats& s, std::size_t basisSize, std::size_t syzygyLms) {
  std::ostringstream o;
  o << "jpairs_created=" << s.jpairs_created << '\n'
    << "jpairs_sig_rejected=" << s.jpairs_sig_rejected() << '\n'
    << "jpairs_sig_rejected_creation=" << s.jpairs_sig_rejected_creation << '\n'
    << "jpairs_sig_rejected_pop=" << s.jpairs_sig_rejected_pop << '\n'
    << "jpairs_cover_rejected=" << s.jpairs_cover_rejected << '\n'
    << "jpairs_dedup_rejected=" << s.jpairs_dedup_rejected << '\n'
    << "reductions=" << s.reductions << '\n'
    << "reduction_steps=" << s.reduction_steps << '\n'
    << "zero_reductions=" << s.zero_reductions << '\n'
    << "koszul_syzygies=" << s.koszul_syzygies << '\n'
    << "basis_size=" << basisSize << '\n'
    << "syzygy_lms=" << syzygyLms << '\n';
  return o.str();
}

std::string formatStats(const BuchbergerStats& s, std::size_t basisSize) {
  std::ostringstream o;
  o << "pairs_created=" << s.pairs_created << '\n'
    << "pairs_reduced=" << s.pairs_reduced << '\n'
    << "product_criterion=" << s.product_criterion << '\n'
    << "chain_criterion=" << s.chain_criterion << '\n'
    << "zero_reductions=" << s.zero_reductions << '\n'
    << "basis_size=" << basisSize << '\n';
  return o.str();
}

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Stripped {
  std::vector<Polynomial> nonzero;
  std::vector<std::uint32_t> original;  // 1-based original index of each nonzero generator
  std::vector<std::uint32_t> zeros;     // 1-based indices of zero generators
};

Stripped stripZeros(const std::vector<Polynomial>& gens, std::ostream& err) {
  Stripped s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto idx = static_cast<std::uint32_t>(i + 1);
    if (gens[i].isZero()) {
      s.zeros.push_back(idx);
      err << "note: generator " << idx << " is zero and was stripped\n";
    } else {
      s.nonzero.push_back(gens[i]);
      s.original.push_back(idx);
    }
  }
  if (s.nonzero.empty()) throw InputError("all generators are zero");
  return s;
}

Problem loadWithOrder(const std::string& path, const std::string& order) {
  Problem p = loadProblem(path);
  if (!order.empty()) {
    MonomialOrder o(parseOrderKind(order));
    Ring r = p.ring.withOrder(o);
    for (auto& g : p.generators) g = r.reorder(g);
    p.ring = r;
  }
  return p;
}

void printBasis(std::ostream& out, const Ring& ring, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) out << formatPolynomial(g, ring) << '\n';
}

std::string formatVector(const Ring& ring, const ModuleVector& v, const Stripped& s,
                         std::size_t totalRank) {
  std::vector<std::string> slots(totalRank, "0");
  for (std::size_t i = 0; i < v.size(); ++i) slots[s.original[i] - 1] = formatPolynomial(v[i], ring);
  std::string out = "(";
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) out += ", ";
    out += slots[i];
  }
  return out + ")";
}

struct GbFlags {
  std::string algo = "gvw";
  std::string order;
  std::string sigOrder = "schreyer";
  std::string select = "min-sig";
  bool syzygies = false;
  bool trackVectors = false;
  bool stats = false;
  bool reduced = true;
  bool noCriteria = false;
  bool tail = false;
  bool koszul = true;
  std::uint64_t stepLimit = 1'000'000;
  std::string file;
};

int runGb(const GbFlags& f, std::ostream& out, std::ostream& err) {
  Problem p = loadWithOrder(f.file, f.order);
  const Ring& ring = p.ring;
  Stripped s = stripZeros(p.generators, err);
  const bool reduced = f.reduced;

  if (f.algo == "buchberger") {
    if (f.syzygies) throw InputError("--syzygies requires --algo gvw");
    BuchbergerOptions opts;
    opts.criteria = !f.noCriteria;
    BuchbergerResult r = buchbergerRun(ring, s.nonzero, opts);
    printBasis(out, ring, reduced ? interreduce(ring, r.basis) : r.basis);
    if (f.stats) out << "# stats\n" << formatStats(r.stats, r.basis.size());
    return 0;
  }
  if (f.algo != "gvw") throw InputError("unknown algorithm: " + f.algo);

  GvwOptions opts;
  opts.strategy = parseSelectionStrategy(f.select);
  opts.track_vectors = f.trackVectors;
  opts.step_limit = f.stepLimit;
  opts.cover_criterion = !f.noCriteria;
  opts.tail_reduce = f.tail;
  opts.koszul_syzygies = f.koszul;
  GvwEngine engine(ring, s.nonzero, parseModuleOrderKind(f.sigOrder), opts);
  engine.run();

  std::vector<Polynomial> polys = engine.basisPolynomials();
  printBasis(out, ring, reduced ? interreduce(ring, polys) : polys);

  if (f.syzygies) {
    const std::size_t rank = p.generators.size();
    out << "# syzygies\n";
    VectorRecovery recovery(ring, engine.generators(), engine.basis());
    for (std::uint32_t z : s.zeros) {
      out << "e" << z;
      if (f.trackVectors) {
        std::vector<std::string> slots(rank, "0");
        slots[z - 1] = "1";
        out << ": (";
        for (std::size_t i = 0; i < rank; ++i) out << (i ? ", " : "") << slots[i];
        out << ")";
      }
      out << '\n';
    }
    auto lms = engine.syzygyLms();
    for (const auto& lm : lms) {
      ModuleMonomial shown{s.original[lm.index - 1], lm.mono};
      out << formatModuleMonomial(shown, ring.vars());
      if (f.trackVectors) {
        auto rec = std::find_if(engine.syzygies().begin(), engine.syzygies().end(),
                                [&](const SyzygyRecord& r) { return r.lm == lm; });
        out << ": " << formatVector(ring, recovery.syzygy(*rec), s, rank);
      }
      out << '\n';
    }
  }
  if (f.stats) {
    out << "# stats\n" << formatStats(engine.stats(), engine.basis().size(), engine.syzygyLms().size());
  }
  return 0;
}

int runFglm(const std::string& file, const std::string& from, const std::string& to,
            std::ostream& out, std::ostream& err) {
  Problem p = loadWithOrder(file, from);
  Stripped s = stripZeros(p.generators, err);
  auto gb = gvwRun(p.ring, s.nonzero, ModuleOrderKind::Schreyer);
  std::vector<Polynomial> polys;
  for (const auto& g : gb.basis) polys.push_back(g.poly);
  polys = interreduce(p.ring, polys);
  MonomialOrder dst(parseOrderKind(to));
  printBasis(out, p.ring.withOrder(dst), fglm(p.ring, polys, dst));
  return 0;
}

int runVerify(const std::string& file, const std::string& basisFile, const std::string& order,
              std::ostream& out, std::ostream& err) {
  Problem p = loadWithOrder(file, order);
  const Ring& ring = p.ring;
  std::vector<Polynomial> basis = parsePolynomialList(readFile(basisFile), ring);
  std::erase_if(basis, [](const Polynomial& g) { return g.isZero(); });
  if (basis.empty()) {
    out << "fail: basis is empty\n";
    return 1;
  }
  if (auto w = findNonReducingSPair(ring, basis)) {
    out << "fail: not a Groebner basis\n"
        << "witness: S(" << w->i + 1 << ", " << w->j + 1 << ") = " << formatPolynomial(w->s_poly, ring)
        << '\n'
        << "remainder: " << formatPolynomial(w->remainder, ring) << '\n';
    return 1;
  }
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    Polynomial r = normalForm(ring, p.generators[i], basis);
    if (!r.isZero()) {
      out << "fail: generator " << i + 1 << " is not in the ideal of the basis\n"
          << "remainder: " << formatPolynomial(r, ring) << '\n';
      return 1;
    }
  }
  Stripped s = stripZeros(p.generators, err);
  std::vector<Polynomial> reference = interreduce(ring, buchberger(ring, s.nonzero));
  if (interreduce(ring, basis) == reference) {
    out << "ok\n";
    return 0;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Polynomial r = normalForm(ring, basis[i], reference);
    if (!r.isZero()) {
      out << "fail: basis element " << i + 1 << " is not in the input ideal\n"
          << "remainder: " << formatPolynomial(r, ring) << '\n';
      return 1;
    }
  }
  out << "ok\n";
  return 0;
}

int runEnumerate(const std::string& file, const std::string& order, const std::string& sigOrder,
                 std::uint32_t bound, std::ostream& out, std::ostream& err) {
  Problem p = loadWithOrder(file, order);
  Stripped s = stripZeros(p.generators, err);
  ModuleOrder mord(parseModuleOrderKind(sigOrder), p.ring.order(), leadingMonomials(s.nonzero));
  for (std::uint32_t z : s.zeros) out << "e" << z << '\n';
  for (const auto& lm : signatureEnumerate(p.ring, s.nonzero, mord, bound)) {
    out << formatModuleMonomial(ModuleMonomial{s.original[lm.index - 1], lm.mono}, p.ring.vars())
        << '\n';
  }
  return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases over prime fields: GVW, Buchberger, FGLM"};
  app.require_subcommand(1);
  const std::vector<std::string> orders{"lex", "grlex", "grevlex"};

  GbFlags gb;
  auto* gbCmd = app.add_subcommand("gb", "compute a Groebner basis");
  gbCmd->add_option("--algo", gb.algo, "gvw or buchberger")
      ->check(CLI::IsMember({"gvw", "buchberger"}));
  gbCmd->add_option("--order", gb.order, "override the file's monomial order")->check(CLI::IsMember(orders));
  gbCmd->add_option("--sig-order", gb.sigOrder, "module order")
      ->check(CLI::IsMember({"pot", "top", "schreyer"}));
  gbCmd->add_option("--select", gb.select, "JPair selection strategy")
      ->check(CLI::IsMember({"min-sig", "min-degree", "fifo"}));
  gbCmd->add_flag("--syzygies", gb.syzygies, "print syzygy leading monomials");
  gbCmd->add_flag("--track-vectors", gb.trackVectors, "track and print module vectors");
  gbCmd->add_flag("--stats", gb.stats, "print statistics as key=value lines");
  gbCmd->add_flag("--reduced,!--no-reduced", gb.reduced, "interreduce the output (default)");
  gbCmd->add_flag("--no-criteria", gb.noCriteria,
                  "buchberger: no product/chain criteria; gvw: no cover criterion");
  gbCmd->add_flag("--tail", gb.tail, "gvw: also reduce non-leading terms");
  gbCmd->add_flag("--koszul,!--no-koszul", gb.koszul,
                  "gvw: record syzygies g_a v_b - g_b v_a of basis elements (default)");
  gbCmd->add_option("--step-limit", gb.stepLimit, "abort after this many reduction steps");
  gbCmd->add_option("file", gb.file, "ideal file")->required();

  std::string fglmFile, fglmFrom, fglmTo;
  auto* fglmCmd = app.add_subcommand("fglm", "change the order of a zero-dimensional ideal");
  fglmCmd->add_option("--order", fglmFrom, "source order (default: the file's)")->check(CLI::IsMember(orders));
  fglmCmd->add_option("--to", fglmTo, "target order")->required()->check(CLI::IsMember(orders));
  fglmCmd->add_option("file", fglmFile, "ideal file")->required();

  std::string verifyFile, verifyBasis, verifyOrder;
  auto* verifyCmd = app.add_subcommand("verify", "check that a basis file is a Groebner basis of the ideal");
  verifyCmd->add_option("--order", verifyOrder, "override the file's monomial order")->check(CLI::IsMember(orders));
  verifyCmd->add_option("file", verifyFile, "ideal file")->required();
  verifyCmd->add_option("basis", verifyBasis, "basis file, one polynomial per line")->required();

  std::string enumFile, enumOrder, enumSig = "schreyer";
  std::uint32_t enumBound = 0;
  auto* enumCmd = app.add_subcommand("enumerate", "degree-truncated signature enumeration");
  enumCmd->add_option("--deg-bound", enumBound, "maximum degree of the module monomial")->required();
  enumCmd->add_option("--order", enumOrder, "override the file's monomial order")->check(CLI::IsMember(orders));
  enumCmd->add_option("--sig-order", enumSig, "module order")->check(CLI::IsMember({"pot", "top", "schreyer"}));
  enumCmd->add_option("file", enumFile, "ideal file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (gbCmd->parsed()) return runGb(gb, out, err);
    if (fglmCmd->parsed()) return runFglm(fglmFile, fglmFrom, fglmTo, out, err);
    if (verifyCmd->parsed()) return runVerify(verifyFile, verifyBasis, verifyOrder, out, err);
    if (enumCmd->parsed()) return runEnumerate(enumFile, enumOrder, enumSig, enumBound, out, err);
  } catch (const StepLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const NotZeroDimensional& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace sigbasis
