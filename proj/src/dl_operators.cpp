#include "kms/dl_operators.hpp"

#include <algorithm>

namespace kms {

HeckeParams HeckeParams::sigma(const RootDatum& rd) {
  HeckeParams p;
  for (int i = 0; i < rd.rank(); ++i) {
    p.t.push_back(rd.sigma(i));
    p.u.push_back(rd.sigma_prime(i));
    p.pre.push_back(1);
  }
  return p;
}

HeckeParams HeckeParams::specialized(const RootDatum& rd) {
  HeckeParams p;
  for (int i = 0; i < rd.rank(); ++i) {
    p.t.push_back(ParamCoeff::var(rd.classes.sigma[i], -1));
    p.u.push_back(ParamCoeff::var(rd.classes.sigma_prime[i], -1));
    p.pre.push_back(ParamCoeff::var(rd.classes.sigma[i], -1));
  }
  return p;
}

DLContext::DLContext(RootDatum rd, HeckeParams params, std::size_t cap)
    : rd_(std::move(rd)), params_(std::move(params)), ball_(rd_, cap) {}

const std::map<std::int64_t, ParamCoeff>& DLContext::string_quotient(int i, std::int64_t m) {
  auto key = std::make_pair(i, m);
  auto it = quotients_.find(key);
  if (it != quotients_.end()) return it->second;
  const ParamCoeff& t = params_.t[i];
  const ParamCoeff& u = params_.u[i];
  const ParamCoeff bt = t - t.unit_inverse(), bu = u - u.unit_inverse();
  // Q(z) = (bt + bu z)(1 - z^{-m}) / (1 - z^2), exact whenever m is even or t = u.
  std::map<std::int64_t, ParamCoeff> p;
  auto put = [&](std::int64_t k, const ParamCoeff& c) {
    p[k] += c;
    if (p[k].is_zero()) p.erase(k);
  };
  if (m != 0) {
    put(0, bt);
    put(1, bu);
    put(-m, -bt);
    put(1 - m, -bu);
  }
  std::map<std::int64_t, ParamCoeff> q;
  if (!p.empty()) {
    const std::int64_t lo = p.begin()->first, hi = p.rbegin()->first;
    for (std::int64_t k = lo; k <= hi - 2; ++k) {
      ParamCoeff c;
      if (auto f = p.find(k); f != p.end()) c += f->second;
      if (auto f = q.find(k - 2); f != q.end()) c += f->second;
      if (!c.is_zero()) q.emplace(k, c);
    }
    std::map<std::int64_t, ParamCoeff> back;
    for (const auto& [k, c] : q) {
      back[k] += c;
      back[k + 2] -= c;
    }
    for (auto b = back.begin(); b != back.end();) b = b->second.is_zero() ? back.erase(b) : std::next(b);
    if (back != p) throw Error("Demazure-Lusztig quotient is not a polynomial; parameters violate the pairing condition");
  }
  return quotients_.emplace(key, std::move(q)).first->second;
}

LaurentPoly DLContext::apply(int i, const LaurentPoly& f) {
  if (i < 0 || i >= rd_.rank()) throw Error("simple reflection index out of range");
  const IntVec a = rd_.coroot(i);
  LaurentPoly out;
  for (const auto& [mu, c] : f.terms()) {
    const std::int64_t m = rd_.pair(i, mu);
    const ParamCoeff pc = params_.pre[i] * c;
    out.add_term(sub(mu, scaled(a, m)), params_.t[i] * pc);
    for (const auto& [k, qk] : string_quotient(i, m)) out.add_term(add(mu, scaled(a, k)), qk * pc);
  }
  return out;
}

LaurentPoly DLContext::apply_word(const std::vector<int>& word, const LaurentPoly& f) {
  LaurentPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply(*it, g);
  return g;
}

const std::pair<TruncSeries, TruncSeries>& DLContext::factors(const IntVec& beta, int i, int depth) {
  auto key = std::make_tuple(beta, i, depth);
  auto it = factors_.find(key);
  if (it != factors_.end()) return it->second;
  TruncSeries b = expand_b(rd_.lattice, beta, params_.t[i], params_.u[i], depth).scaled(params_.pre[i]);
  TruncSeries c = expand_c(rd_.lattice, beta, params_.t[i], params_.u[i], depth).scaled(params_.pre[i]);
  return factors_.emplace(key, std::make_pair(std::move(b), std::move(c))).first->second;
}

const Components& DLContext::group_element(std::size_t w, int depth, std::size_t tau) {
  auto key = std::make_tuple(w, depth, tau);
  if (auto it = elements_.find(key); it != elements_.end()) return it->second;
  Components out;
  if (w == 0) {
    out.emplace(0, TruncSeries::one(rd_.lattice).truncated(depth));
    return elements_.emplace(key, std::move(out)).first->second;
  }
  const WeylElt elt = ball_[w];
  const int i = elt.word.back();
  const long parent = ball_.right(w, i);
  if (parent < 0) throw Error("Weyl ball is missing a prefix of the word");
  const Components prev = group_element(static_cast<std::size_t>(parent), depth, tau);
  const std::size_t tau_inv = ball_.inverse(tau);
  const IntVec ai = rd_.coroot(i);
  // Right multiplication by c(v alpha_i^vee)[r_i] + b(v alpha_i^vee)[e].
  for (const auto& [v, f] : prev) {
    const IntVec beta = rd_.lattice->coroot_coords_or_throw(ball_[tau_inv].apply(ball_[v].apply(ai)));
    const auto& [b, c] = factors(beta, i, depth);
    const long vr = ball_.right(v, i);
    if (vr < 0) throw Error("Weyl ball too small for the group element");
    auto add_to = [&](std::size_t idx, TruncSeries s) {
      auto found = out.find(idx);
      if (found == out.end()) out.emplace(idx, std::move(s));
      else found->second = found->second + s;
    };
    add_to(static_cast<std::size_t>(vr), f * c);
    add_to(v, f * b);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return elements_.emplace(key, std::move(out)).first->second;
}

TruncSeries DLContext::on_monomial_window(std::size_t w, const IntVec& lambda, int depth) {
  rd_.check_weight(lambda);
  const bool dominant = rd_.is_dominant(lambda);
  const Components& g = group_element(w, depth);
  TruncSeries acc(rd_.lattice, lambda, depth);
  for (const auto& [v, f] : g) {
    const IntVec vl = ball_[v].apply(lambda);
    if (dominant) {
      const std::int64_t gap = height(rd_.lattice->coroot_coords_or_throw(sub(lambda, vl)));
      if (gap > depth) continue;
      acc = acc + f.truncated(depth - static_cast<int>(gap)).shifted(vl);
    } else {
      acc = acc + f.shifted(vl);
    }
  }
  return acc.truncated(depth);
}

LaurentPoly dl_apply_Hi(DLContext& ctx, int i, const LaurentPoly& f) { return ctx.apply(i, f); }

LaurentPoly dl_apply_Hw(DLContext& ctx, const std::vector<int>& word, const IntVec& lambda) {
  ctx.datum().check_weight(lambda);
  return ctx.apply_word(word, LaurentPoly::monomial(lambda));
}

GroupSeries to_group_series(DLContext& ctx, const Components& comps, int length_bound, int depth) {
  GroupSeries gs;
  gs.length_bound = length_bound;
  gs.depth = depth;
  for (const auto& [v, f] : comps) gs.terms.emplace(ctx.ball()[v].word, f);
  return gs;
}

GroupSeries hw_group_element(DLContext& ctx, const std::vector<int>& word, int depth) {
  const std::size_t w = ctx.index(word);
  if (ctx.ball()[w].length() != static_cast<int>(word.size())) throw Error("word is not reduced");
  return to_group_series(ctx, ctx.group_element(w, depth), static_cast<int>(word.size()), depth);
}

}  // namespace kms
