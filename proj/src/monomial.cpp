#include "sigbasis/monomial.hpp"

#include <algorithm>
#include <unordered_set>

namespace sigbasis {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVars) {
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
}

Monomial::Monomial(std::size_t nvars, std::initializer_list<std::uint32_t> exps)
    : Monomial(nvars, std::span<const std::uint32_t>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::size_t nvars, std::span<const std::uint32_t> exps) : Monomial(nvars) {
  if (exps.size() != nvars) throw std::invalid_argument("exponent vector length mismatch");
  for (std::size_t i = 0; i < nvars; ++i) {
    if (exps[i] > kMaxExponent - 1) throw std::overflow_error("exponent overflow");
    exps_[i] = static_cast<std::uint16_t>(exps[i]);
    deg_ += exps[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  if (power > kMaxExponent - 1) throw std::overflow_error("exponent overflow");
  m.exps_[index] = static_cast<std::uint16_t>(power);
  m.deg_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("monomial dimension mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::uint32_t e = std::uint32_t{exps_[i]} + other.exps_[i];
    if (e >= kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::domain_error("monomial division is not exact");
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] -= other.exps_[i];
  r.deg_ = deg_ - other.deg_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("monomial dimension mismatch");
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("monomial dimension mismatch");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.deg_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  if (n != b.nvars()) throw std::invalid_argument("monomial dimension mismatch");
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::GrLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::GrevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      // Smaller exponent in the last differing variable wins.
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

OrderKind parseOrderKind(const std::string& name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex") return OrderKind::GrLex;
  if (name == "grevlex") return OrderKind::GrevLex;
  throw std::invalid_argument("unknown monomial order: " + name);
}

std::string toString(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "?";
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("at least one variable is required");
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
}

std::size_t VarSet::indexOf(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::string formatMonomial(const Monomial& m, const VarSet& vars) {
  if (m.isOne()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace sigbasis
