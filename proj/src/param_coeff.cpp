#include "kms/param_coeff.hpp"

#include <algorithm>
#include <sstream>

namespace kms {

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const int x = k < a.size() ? a[k] : 0;
    const int y = k < b.size() ? b[k] : 0;
    if (x != y) return x < y;
  }
  return false;
}

void mono_trim(Mono& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  mono_trim(r);
  return r;
}

Mono mono_inv(const Mono& a) {
  Mono r(a);
  for (auto& x : r) x = -x;
  return r;
}

ParamCoeff::ParamCoeff(long long c) {
  if (c != 0) terms_.emplace(Mono{}, BigInt(c));
}

ParamCoeff::ParamCoeff(const BigInt& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

ParamCoeff ParamCoeff::monomial(Mono m, const BigInt& c) {
  ParamCoeff r;
  mono_trim(m);
  if (c != 0) r.terms_.emplace(std::move(m), c);
  return r;
}

ParamCoeff ParamCoeff::var(int v, int exp) {
  Mono m(v + 1, 0);
  m[v] = exp;
  return monomial(std::move(m));
}

bool ParamCoeff::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigInt ParamCoeff::constant_term() const {
  auto it = terms_.find(Mono{});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool ParamCoeff::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

ParamCoeff ParamCoeff::unit_inverse() const {
  if (!is_unit()) throw Error("coefficient is not a unit");
  const auto& [m, c] = *terms_.begin();
  return monomial(mono_inv(m), c);
}

void ParamCoeff::add_term(const Mono& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamCoeff& ParamCoeff::operator+=(const ParamCoeff& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamCoeff& ParamCoeff::operator-=(const ParamCoeff& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b) {
  ParamCoeff r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

ParamCoeff& ParamCoeff::operator*=(const ParamCoeff& o) {
  *this = *this * o;
  return *this;
}

ParamCoeff ParamCoeff::operator-() const {
  ParamCoeff r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamCoeff ParamCoeff::pow(int e) const {
  if (e < 0) return unit_inverse().pow(-e);
  ParamCoeff r(1), base(*this);
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

int ParamCoeff::num_vars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return static_cast<int>(n);
}

int ParamCoeff::max_abs_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int x : m) s += std::abs(x);
    d = std::max(d, s);
  }
  return d;
}

ParamCoeff ParamCoeff::divided_by(const ParamCoeff& d) const {
  if (d.is_zero()) throw Error("division by zero coefficient");
  // Long division by leading monomials in the padded-lex order, which is
  // compatible with multiplication of Laurent monomials.
  ParamCoeff rem(*this), quot;
  if (rem.is_zero()) return quot;
  const auto& [dm, dc] = *d.terms_.rbegin();
  const Mono dm_inv = mono_inv(dm);
  // Every quotient monomial times the lowest divisor monomial stays above the
  // lowest dividend monomial; falling below it proves inexactness.
  const Mono floor = mono_mul(terms_.begin()->first, mono_inv(d.terms_.begin()->first));
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    const Mono qm = mono_mul(rm, dm_inv);
    if (rc % dc != 0 || MonoLess{}(qm, floor)) throw Error("inexact coefficient division");
    ParamCoeff step = monomial(qm, rc / dc);
    quot += step;
    rem -= step * d;
  }
  return quot;
}

ParamCoeff substitute(const ParamCoeff& c, const std::vector<VarSub>& subs) {
  ParamCoeff r;
  for (const auto& [m, k] : c.terms()) {
    Mono out;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (v >= subs.size()) throw Error("substitution does not cover every variable");
      const VarSub& s = subs[v];
      const long long e = static_cast<long long>(m[v]) * s.num;
      if (e % s.den != 0) throw Error("substitution produces a fractional exponent");
      if (out.size() <= static_cast<std::size_t>(s.target)) out.resize(s.target + 1, 0);
      out[s.target] += static_cast<int>(e / s.den);
    }
    mono_trim(out);
    r.add_term(out, k);
  }
  return r;
}

Rational evaluate(const ParamCoeff& c, const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& [m, k] : c.terms()) {
    Rational t(k);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (v >= values.size()) throw Error("evaluation does not cover every variable");
      if (values[v] == 0 && m[v] < 0) throw Error("negative power of zero");
      const Rational base = m[v] > 0 ? values[v] : 1 / values[v];
      for (int e = 0; e < std::abs(m[v]); ++e) t *= base;
    }
    total += t;
  }
  return total;
}

namespace {

std::string var_power(const std::string& name, int e, bool half) {
  if (half) {
    if (e % 2 == 0) e /= 2;
    else return name + "^(" + std::to_string(e) + "/2)";
  }
  if (e == 1) return name;
  return name + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
}

}  // namespace

std::string to_string(const ParamCoeff& c, const VarStyle& style) {
  if (c.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const auto& [m, k] = *it;
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      const std::string name = v < style.names.size() ? style.names[v] : "x" + std::to_string(v);
      if (!mono.empty()) mono += "*";
      mono += var_power(name, m[v], style.half);
    }
    const BigInt a = abs(k);
    if (first) out << (k < 0 ? "-" : "");
    else out << (k < 0 ? " - " : " + ");
    if (mono.empty()) out << a;
    else if (a == 1) out << mono;
    else out << a << "*" << mono;
    first = false;
  }
  return out.str();
}

}  // namespace kms
