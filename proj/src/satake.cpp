#include "kms/satake.hpp"

namespace kms {

std::vector<VarSub> sigma_to_q(const RootDatum& rd) {
  std::vector<VarSub> subs;
  for (int c = 0; c < rd.classes.count; ++c) subs.push_back({c, -1, 1});
  return subs;
}

std::vector<VarSub> sigma_to_t(const RootDatum& rd) {
  std::vector<VarSub> subs;
  for (int c = 0; c < rd.classes.count; ++c) subs.push_back({c, 1, 2});
  return subs;
}

std::optional<ParamCoeff> delta_half(const RootDatum& rd, const IntVec& lambda) {
  rd.check_weight(lambda);
  if (rd.equal_parameters()) {
    const Rational twice = 2 * rd.rho_of(lambda);
    if (denominator(twice) != 1) return std::nullopt;
    return ParamCoeff::var(0, static_cast<int>(numerator(twice)));
  }
  // (q_i q'_i)^{a_i/2} for lambda = sum a_i alpha_i^vee.
  auto a = rd.lattice->coroot_coords(lambda);
  if (!a) return std::nullopt;
  Mono m(rd.classes.count, 0);
  for (int i = 0; i < rd.rank(); ++i) {
    m[rd.classes.sigma[i]] += static_cast<int>((*a)[i]);
    m[rd.classes.sigma_prime[i]] += static_cast<int>((*a)[i]);
  }
  return ParamCoeff::monomial(m);
}

SatakeContext::SatakeContext(const RootDatum& rd, std::size_t cap)
    : sym_(rd, cap), qdl_(rd, HeckeParams::specialized(rd), cap) {}

namespace {

void require_min_rep(const RootDatum& rd, WeylBall& ball, const std::vector<int>& word, const IntVec& lambda) {
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw Error("weight is not dominant");
  const std::size_t w = ball.index_of_word(word);
  if (ball[w].length() != static_cast<int>(word.size())) throw Error("word is not reduced");
  for (int i : rd.stabilizer(lambda))
    if (coroot_sign(rd.lattice->coroot_coords_or_throw(ball[w].apply(rd.coroot(i)))) < 0)
      throw Error("element is not a minimal coset representative for the stabilizer of lambda");
}

}  // namespace

LaurentPoly SatakeContext::j_w(const std::vector<int>& word, const IntVec& lambda) {
  require_min_rep(datum(), qdl_.ball(), word, lambda);
  LaurentPoly p = qdl_.apply_word(word, LaurentPoly::monomial(lambda));
  if (auto d = delta_half(datum(), lambda)) p = p.scaled(*d);
  return p;
}

TruncSeries SatakeContext::j_w_window(const std::vector<int>& word, const IntVec& lambda, int depth) {
  require_min_rep(datum(), qdl_.ball(), word, lambda);
  const std::size_t w = qdl_.index(word);
  TruncSeries s = qdl_.on_monomial_window(w, lambda, depth);
  if (auto d = delta_half(datum(), lambda)) s = s.scaled(*d);
  return s;
}

TruncSeries SatakeContext::satake_recursion(const IntVec& lambda, int depth) {
  TruncSeries acc(datum().lattice, lambda, depth);
  for (const auto& w : min_coset_reps(datum(), lambda, 2 * depth))
    acc = acc + qdl_.on_monomial_window(qdl_.index(w.word), lambda, depth);
  return acc;
}

TruncSeries SatakeContext::satake_closed(const IntVec& lambda, int depth) {
  const auto subs = sigma_to_q(datum());
  return (specialize(sym_.m_sigma(depth), subs) * specialize(sym_.h_lambda(lambda, depth), subs)).truncated(depth);
}

SatakeResult SatakeContext::satake(const IntVec& lambda, int depth, SatakeRoute route) {
  datum().check_weight(lambda);
  if (!datum().is_dominant(lambda)) throw Error("weight is not dominant");
  SatakeResult r{route, delta_half(datum(), lambda), TruncSeries(datum().lattice, lambda, depth), true};
  if (route == SatakeRoute::Closed) {
    r.series = satake_closed(lambda, depth);
  } else {
    r.series = satake_recursion(lambda, depth);
    if (route == SatakeRoute::Both) r.routes_agree = agree_through(r.series, satake_closed(lambda, depth), depth);
  }
  if (r.delta_half) r.series = r.series.scaled(*r.delta_half);
  return r;
}

TruncSeries SatakeContext::hall_littlewood(const IntVec& lambda, int depth) {
  if (!datum().equal_parameters()) throw Error("Hall-Littlewood functions need equal parameters");
  return specialize(sym_.h_lambda(lambda, depth), sigma_to_t(datum()));
}

TruncSeries SatakeContext::character_t0(const IntVec& lambda, int depth) {
  return evaluate_integral(hall_littlewood(lambda, depth), std::vector<Rational>(datum().classes.count, 0));
}

TruncSeries evaluate_integral(const TruncSeries& f, const std::vector<Rational>& values) {
  return f.map_coeffs([&](const ParamCoeff& c) {
    const Rational v = evaluate(c, values);
    if (denominator(v) != 1) throw Error("evaluation is not an integer");
    return ParamCoeff(numerator(v));
  });
}

TruncSeries weyl_character(const RootDatum& rd, const IntVec& lambda) {
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw Error("weight is not dominant");
  WeylBall ball(rd);
  ball.extend_to(64);
  if (!ball.exhausted()) throw Error("Weyl character needs a finite Weyl group");
  std::int64_t depth = 0;
  TruncSeries num(rd.lattice, lambda, std::nullopt);
  for (std::size_t w = 0; w < ball.size(); ++w) {
    // e^{w(lambda + rho) - rho} = e^{w lambda - sum of inversion coroots}.
    IntVec shift(rd.rank(), 0);
    for (const auto& b : inversion_coroots(rd, ball[w].word)) shift = add(shift, b);
    const IntVec mu = sub(ball[w].apply(lambda), rd.lattice->from_coroot_coords(shift));
    num = num + TruncSeries::monomial(rd.lattice, mu, ball[w].length() % 2 ? -1 : 1);
    depth = std::max(depth, height(rd.lattice->coroot_coords_or_throw(sub(lambda, ball[w].apply(lambda)))));
  }
  const int d = static_cast<int>(depth);
  TruncSeries den = TruncSeries::one(rd.lattice).truncated(d);
  for (const auto& b : positive_real_coroots(rd, 1 << 16)) {
    TruncSeries f = TruncSeries::one(rd.lattice).truncated(d);
    f.add_term(b.coords, -1);
    den = den * f;
  }
  return (num.rebased(lambda).truncated(d) * invert_unit(den, d)).truncated(d);
}

}  // namespace kms
