#include "kms/series.hpp"

#include <algorithm>

namespace kms {

LaurentPoly LaurentPoly::monomial(const IntVec& mu, const ParamCoeff& c) {
  LaurentPoly p;
  p.add_term(mu, c);
  return p;
}

void LaurentPoly::add_term(const IntVec& mu, const ParamCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamCoeff LaurentPoly::coeff(const IntVec& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? ParamCoeff() : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(add(ma, mb), ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const ParamCoeff& c) const {
  LaurentPoly r;
  if (c.is_zero()) return r;
  for (const auto& [mu, x] : terms_) r.add_term(mu, x * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const IntVec& mu) const {
  LaurentPoly r;
  for (const auto& [nu, x] : terms_) r.terms_.emplace(add(nu, mu), x);
  return r;
}

LaurentPoly LaurentPoly::relabel(const WeylElt& w) const {
  LaurentPoly r;
  for (const auto& [mu, x] : terms_) r.add_term(w.apply(mu), x);
  return r;
}

TruncSeries::TruncSeries(std::shared_ptr<const Lattice> lat, IntVec ceiling, Depth depth)
    : lat_(std::move(lat)), ceiling_(std::move(ceiling)), depth_(depth) {
  if (static_cast<int>(ceiling_.size()) != lat_->d) throw Error("ceiling has the wrong dimension");
  if (depth_ && *depth_ < 0) throw Error("negative truncation depth");
}

TruncSeries TruncSeries::one(std::shared_ptr<const Lattice> lat) {
  IntVec zero(lat->d, 0);
  return monomial(std::move(lat), zero);
}

TruncSeries TruncSeries::monomial(std::shared_ptr<const Lattice> lat, const IntVec& mu, const ParamCoeff& c) {
  TruncSeries s(lat, mu, std::nullopt);
  s.add_term(IntVec(lat->n, 0), c);
  return s;
}

TruncSeries TruncSeries::from_poly(std::shared_ptr<const Lattice> lat, const LaurentPoly& p,
                                   const IntVec& fallback) {
  if (p.is_zero()) return TruncSeries(lat, fallback, std::nullopt);
  const IntVec& base = p.terms().begin()->first;
  IntVec top(lat->n, 0);
  std::vector<std::pair<IntVec, const ParamCoeff*>> rel;
  for (const auto& [mu, c] : p.terms()) {
    auto q = lat->coroot_coords(sub(mu, base));
    if (!q) throw Error("exponents lie in different cosets of the coroot lattice; no ceiling exists");
    for (int j = 0; j < lat->n; ++j) top[j] = std::max(top[j], (*q)[j]);
    rel.emplace_back(std::move(*q), &c);
  }
  TruncSeries s(lat, add(base, lat->from_coroot_coords(top)), std::nullopt);
  for (const auto& [q, c] : rel) s.add_term(sub(top, q), *c);
  return s;
}

void TruncSeries::add_term(const IntVec& offset, const ParamCoeff& c) {
  if (c.is_zero()) return;
  if (depth_ && height(offset) > *depth_) return;
  auto [it, inserted] = terms_.emplace(offset, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

IntVec TruncSeries::exponent(const IntVec& offset) const {
  return sub(ceiling_, lat_->from_coroot_coords(offset));
}

std::optional<IntVec> TruncSeries::offset_of(const IntVec& mu) const {
  auto q = lat_->coroot_coords(sub(ceiling_, mu));
  if (!q || coroot_sign(*q) < 0) return std::nullopt;
  return q;
}

ParamCoeff TruncSeries::coeff(const IntVec& mu) const {
  auto nu = offset_of(mu);
  if (!nu) return {};
  if (depth_ && height(*nu) > *depth_) throw Error("coefficient requested outside the known window");
  return coeff_at_offset(*nu);
}

ParamCoeff TruncSeries::coeff_at_offset(const IntVec& offset) const {
  auto it = terms_.find(offset);
  return it == terms_.end() ? ParamCoeff() : it->second;
}

TruncSeries TruncSeries::truncated(int depth) const {
  const int d = depth_ ? std::min(*depth_, depth) : depth;
  TruncSeries r(lat_, ceiling_, d);
  for (const auto& [nu, c] : terms_)
    if (height(nu) <= d) r.terms_.emplace(nu, c);
  return r;
}

TruncSeries TruncSeries::rebased(const IntVec& new_ceiling) const {
  auto shift = lat_->coroot_coords(sub(new_ceiling, ceiling_));
  if (!shift || coroot_sign(*shift) < 0) throw Error("new ceiling does not dominate the old one");
  const std::int64_t h = height(*shift);
  TruncSeries r(lat_, new_ceiling, depth_ ? Depth(static_cast<int>(*depth_ + h)) : std::nullopt);
  for (const auto& [nu, c] : terms_) r.terms_.emplace(add(nu, *shift), c);
  return r;
}

TruncSeries TruncSeries::shifted(const IntVec& mu) const {
  TruncSeries r(*this);
  r.ceiling_ = add(ceiling_, mu);
  return r;
}

TruncSeries TruncSeries::scaled(const ParamCoeff& c) const {
  TruncSeries r(lat_, ceiling_, depth_);
  if (c.is_zero()) return r;
  for (const auto& [nu, x] : terms_) r.add_term(nu, x * c);
  return r;
}

TruncSeries TruncSeries::map_coeffs(const std::function<ParamCoeff(const ParamCoeff&)>& f) const {
  TruncSeries r(lat_, ceiling_, depth_);
  for (const auto& [nu, x] : terms_) r.add_term(nu, f(x));
  return r;
}

LaurentPoly TruncSeries::to_poly() const {
  LaurentPoly p;
  for (const auto& [nu, x] : terms_) p.add_term(exponent(nu), x);
  return p;
}

namespace {

void check_same_lattice(const TruncSeries& a, const TruncSeries& b) {
  if (a.lattice() != b.lattice() && !(*a.lattice() == *b.lattice()))
    throw Error("series live on incompatible lattices");
}

TruncSeries::Depth min_depth(TruncSeries::Depth a, TruncSeries::Depth b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

TruncSeries combine(const TruncSeries& a, const TruncSeries& b, int sign) {
  check_same_lattice(a, b);
  const auto& lat = a.lattice();
  auto delta = lat->coroot_coords(sub(a.ceiling(), b.ceiling()));
  if (!delta) throw Error("ceilings are not comparable: their difference is not in the coroot lattice");
  IntVec up(lat->n);
  for (int j = 0; j < lat->n; ++j) up[j] = std::max<std::int64_t>((*delta)[j], 0);
  const IntVec join = add(b.ceiling(), lat->from_coroot_coords(up));
  TruncSeries ra = a.rebased(join), rb = b.rebased(join);
  TruncSeries r(lat, join, min_depth(ra.depth(), rb.depth()));
  for (const auto& [nu, c] : ra.terms()) r.add_term(nu, c);
  for (const auto& [nu, c] : rb.terms()) r.add_term(nu, sign > 0 ? c : -c);
  return r;
}

}  // namespace

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, 1); }
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, -1); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_same_lattice(a, b);
  TruncSeries r(a.lat_, add(a.ceiling_, b.ceiling_), min_depth(a.depth_, b.depth_));
  for (const auto& [na, ca] : a.terms_) {
    const std::int64_t ha = height(na);
    if (r.depth_ && ha > *r.depth_) continue;
    for (const auto& [nb, cb] : b.terms_) {
      if (r.depth_ && ha + height(nb) > *r.depth_) continue;
      r.add_term(add(na, nb), ca * cb);
    }
  }
  return r;
}

TruncSeries invert_unit(const TruncSeries& f, int depth) {
  const auto& lat = f.lattice();
  const IntVec zero(lat->n, 0);
  const ParamCoeff lead = f.coeff_at_offset(zero);
  if (!lead.is_unit()) throw Error("leading coefficient is not a unit; series is not invertible");
  const int d = f.depth() ? std::min(*f.depth(), depth) : depth;
  const ParamCoeff inv = lead.unit_inverse();
  // g = inv * sum_k h^k with h = 1 - inv*f, which has no constant term.
  TruncSeries unit = TruncSeries::one(lat).truncated(d);
  TruncSeries h = unit - f.shifted(scaled(f.ceiling(), -1)).scaled(inv).truncated(d);
  TruncSeries g = unit;
  for (int k = 0; k < d; ++k) g = unit + h * g;
  return g.scaled(inv).shifted(scaled(f.ceiling(), -1));
}

bool agree_through(const TruncSeries& a, const TruncSeries& b, int depth) {
  const TruncSeries diff = a - b;
  if (diff.depth() && *diff.depth() < depth) throw Error("comparison depth exceeds the known window");
  for (const auto& [nu, x] : diff.terms())
    if (height(nu) <= depth) return false;
  return true;
}

TruncSeries relabel_exponents(const WeylElt& w, const TruncSeries& f) {
  if (!f.exact()) throw Error("relabelling a truncated series would misrepresent it; only exact series can be relabelled");
  return TruncSeries::from_poly(f.lattice(), f.to_poly().relabel(w), w.apply(f.ceiling()));
}

TruncSeries specialize(const TruncSeries& f, const std::vector<VarSub>& subs) {
  return f.map_coeffs([&](const ParamCoeff& c) { return substitute(c, subs); });
}

namespace {

enum class Kind { B, C };

TruncSeries expand(std::shared_ptr<const Lattice> lat, const IntVec& beta, const ParamCoeff& t,
                   const ParamCoeff& u, int depth, Kind kind) {
  const int sign = coroot_sign(beta);
  if (sign == 0) throw Error("not a real coroot: mixed-sign coordinates");
  const IntVec gamma = sign > 0 ? beta : scaled(beta, -1);
  const std::int64_t h = height(gamma);
  const ParamCoeff bt = t - t.unit_inverse(), bu = u - u.unit_inverse();
  TruncSeries s(lat, IntVec(lat->d, 0), depth);
  // For beta > 0: b = -sum_{j>=1} c_j e^{-j beta}, c_j = bu (j odd), bt (j even).
  // For beta < 0: b =  sum_{j>=0} c_j e^{-j gamma}, c_j = bt (j even), bu (j odd).
  for (std::int64_t j = sign > 0 ? 1 : 0; j * h <= depth; ++j) {
    ParamCoeff c = (j % 2 == 0) ? bt : bu;
    if (sign > 0) c = -c;
    s.add_term(scaled(gamma, j), c);
  }
  if (kind == Kind::C) s = TruncSeries::one(lat).scaled(t).truncated(depth) - s;
  return s;
}

}  // namespace

TruncSeries expand_b(std::shared_ptr<const Lattice> lat, const IntVec& beta, const ParamCoeff& t,
                     const ParamCoeff& u, int depth) {
  return expand(std::move(lat), beta, t, u, depth, Kind::B);
}

TruncSeries expand_c(std::shared_ptr<const Lattice> lat, const IntVec& beta, const ParamCoeff& t,
                     const ParamCoeff& u, int depth) {
  return expand(std::move(lat), beta, t, u, depth, Kind::C);
}

int real_coroot_class(const RootDatum& rd, const IntVec& beta) {
  if (static_cast<int>(beta.size()) != rd.rank()) throw Error("coroot has the wrong number of coordinates");
  const int sign = coroot_sign(beta);
  if (sign == 0) throw Error("not a real coroot: mixed-sign coordinates");
  IntVec q = sign > 0 ? beta : scaled(beta, -1);
  // Descend in height by simple reflections until a simple coroot is reached.
  while (height(q) > 1) {
    bool moved = false;
    for (int i = 0; i < rd.rank() && !moved; ++i) {
      std::int64_t m = 0;
      for (int k = 0; k < rd.rank(); ++k) m += q[k] * rd.cartan[k][i];
      if (m > 0) {
        q[i] -= m;
        moved = true;
      }
    }
    if (!moved || coroot_sign(q) <= 0) throw Error("not a real coroot");
  }
  for (int i = 0; i < rd.rank(); ++i)
    if (q[i] == 1) return i;
  throw Error("not a real coroot");
}

TruncSeries expand_b(const RootDatum& rd, const IntVec& beta, int depth) {
  const int i = real_coroot_class(rd, beta);
  return expand_b(rd.lattice, beta, rd.sigma(i), rd.sigma_prime(i), depth);
}

TruncSeries expand_c(const RootDatum& rd, const IntVec& beta, int depth) {
  const int i = real_coroot_class(rd, beta);
  return expand_c(rd.lattice, beta, rd.sigma(i), rd.sigma_prime(i), depth);
}

}  // namespace kms
