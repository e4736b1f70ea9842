#include "sigbasis/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigbasis {

ModuleOrderKind parseModuleOrderKind(const std::string& name) {
  if (name == "pot") return ModuleOrderKind::Pot;
  if (name == "top") return ModuleOrderKind::Top;
  if (name == "schreyer") return ModuleOrderKind::Schreyer;
  throw std::invalid_argument("unknown module order: " + name);
}

std::string toString(ModuleOrderKind kind) {
  switch (kind) {
    case ModuleOrderKind::Pot: return "pot";
    case ModuleOrderKind::Top: return "top";
    case ModuleOrderKind::Schreyer: return "schreyer";
  }
  return "?";
}

ModuleOrder::ModuleOrder(ModuleOrderKind kind, MonomialOrder base, std::vector<Monomial> inputLms)
    : kind_(kind), base_(base), inputLms_(std::move(inputLms)) {
  if (kind_ == ModuleOrderKind::Schreyer && inputLms_.empty()) {
    throw std::invalid_argument("schreyer order needs the generators' leading monomials");
  }
}

std::strong_ordering ModuleOrder::compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
  switch (kind_) {
    case ModuleOrderKind::Pot:
      if (a.index != b.index) return a.index <=> b.index;
      return base_.compare(a.mono, b.mono);
    case ModuleOrderKind::Top: {
      auto c = base_.compare(a.mono, b.mono);
      if (c != 0) return c;
      return a.index <=> b.index;
    }
    case ModuleOrderKind::Schreyer: {
      if (a.index == b.index) return base_.compare(a.mono, b.mono);
      if (a.index < 1 || a.index > inputLms_.size() || b.index < 1 || b.index > inputLms_.size()) {
        throw std::out_of_range("module index out of range");
      }
      auto c = base_.compare(a.mono * inputLms_[a.index - 1], b.mono * inputLms_[b.index - 1]);
      if (c != 0) return c;
      return a.index <=> b.index;
    }
  }
  return std::strong_ordering::equal;
}

std::string formatModuleMonomial(const ModuleMonomial& s, const VarSet& vars) {
  std::string e = "e" + std::to_string(s.index);
  if (s.mono.isOne()) return e;
  return formatMonomial(s.mono, vars) + "*" + e;
}

std::optional<JPair> makeJPair(const LabeledPoly& a, const LabeledPoly& b, const ModuleOrder& mord) {
  const Monomial& la = a.poly.leadMono();
  const Monomial& lb = b.poly.leadMono();
  Monomial l = la.lcm(lb);
  Monomial ta = l / la;
  Monomial tb = l / lb;
  ModuleMonomial sa = a.sig.mulBy(ta);
  ModuleMonomial sb = b.sig.mulBy(tb);
  auto c = mord.compare(sa, sb);
  if (c == 0) return std::nullopt;
  if (c > 0) return JPair{std::move(ta), a.id, std::move(sa), l};
  return JPair{std::move(tb), b.id, std::move(sb), std::move(l)};
}

std::vector<Monomial> leadingMonomials(std::span<const Polynomial> generators) {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& f : generators) out.push_back(f.leadMono());
  return out;
}

std::vector<ModuleMonomial> principalSyzygyLms(std::span<const Polynomial> generators,
                                               const ModuleOrder& mord) {
  std::vector<ModuleMonomial> out;
  const auto m = static_cast<std::uint32_t>(generators.size());
  for (std::uint32_t j = 2; j <= m; ++j) {
    for (std::uint32_t i = 1; i < j; ++i) {
      ModuleMonomial a{i, generators[j - 1].leadMono()};
      ModuleMonomial b{j, generators[i - 1].leadMono()};
      out.push_back(mord.compare(a, b) > 0 ? a : b);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const ModuleMonomial& x, const ModuleMonomial& y) { return mord.less(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ModuleMonomial> minimalModuleMonomials(std::vector<ModuleMonomial> set,
                                                   const ModuleOrder& mord) {
  std::sort(set.begin(), set.end(),
            [&](const ModuleMonomial& x, const ModuleMonomial& y) { return mord.less(x, y); });
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<ModuleMonomial> out;
  for (auto& s : set) {
    bool divisible = std::any_of(out.begin(), out.end(),
                                 [&](const ModuleMonomial& w) { return w.divides(s); });
    if (!divisible) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sigbasis
