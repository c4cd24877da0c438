#include "doctest.h"
#include "checks.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <set>

using namespace kms;

namespace {

const ParamCoeff q = ParamCoeff::var(0, 2);  // variable 0 is q^{1/2}

TruncSeries rank1_satake(const RootDatum& a1) {
  return TruncSeries::monomial(a1.lattice, {1}, q) + TruncSeries::monomial(a1.lattice, {0}, q - 1) +
         TruncSeries::monomial(a1.lattice, {-1}, q);
}

Rational coeff_sum(const TruncSeries& s, const std::vector<Rational>& at) {
  Rational total = 0;
  for (const auto& [nu, c] : s.terms()) total += evaluate(c, at);
  return total;
}

}  // namespace

TEST_CASE("delta^{1/2}") {
  const RootDatum a1 = test::load("a1");
  CHECK(*delta_half(a1, {1}) == q);
  CHECK(*delta_half(a1, {0}) == ParamCoeff(1));
  const RootDatum a2 = test::load("a2");
  CHECK(*delta_half(a2, add(a2.coroot(0), a2.coroot(1))) == q.pow(2));
  // the fundamental coweight of A1 has rho = 1/2
  CHECK(*delta_half(test::from_cartan({{2}}), {1}) == ParamCoeff::var(0));
  const RootDatum b2 = test::from_cartan({{2, -1}, {-2, 2}}, ParamMode::Auto);
  CHECK_FALSE(delta_half(b2, {1, 0}).has_value());
  const auto d = delta_half(b2, b2.coroot(0));
  REQUIRE(d.has_value());
  CHECK(*d == ParamCoeff::var(b2.classes.sigma[0]) * ParamCoeff::var(b2.classes.sigma_prime[0]));
}

TEST_CASE("J_w") {
  const RootDatum a1 = test::load("a1");
  SatakeContext ctx(a1);
  CHECK(ctx.j_w({0}, {1}) == LaurentPoly::monomial({-1}, q) + LaurentPoly::monomial({0}, q - 1));
  CHECK(ctx.j_w({}, {1}) == LaurentPoly::monomial({1}, q));
  const RootDatum a2 = test::load("a2");
  SatakeContext c2(a2);
  CHECK_THROWS_AS(c2.j_w({0}, {0, 1}), Error);
  CHECK_THROWS_AS(c2.j_w({0, 0}, {1, 1}), Error);
}

TEST_CASE("windowed J_w matches the exact polynomial") {
  const std::vector<std::pair<std::string, IntVec>> cases{
      {"a2", {1, 1}}, {"a2", {0, 2}}, {"b2", {1, 1}}, {"affine_a1", {0, 0, 1}}, {"hyperbolic", {1, 1}}};
  for (const auto& [name, lambda] : cases) {
    const RootDatum rd = test::load(name);
    SatakeContext ctx(rd);
    const int depth = 4;
    for (const auto& w : min_coset_reps(rd, lambda, 4)) {
      const TruncSeries exact = TruncSeries::from_poly(rd.lattice, ctx.j_w(w.word, lambda), lambda);
      CHECK(agree_through(ctx.j_w_window(w.word, lambda, depth), exact.rebased(lambda), depth));
    }
  }
}

TEST_CASE("coset transversals") {
  // Replacing a minimal representative w by w u with u in W_lambda multiplies
  // sigma_w H_w(e^lambda) by sigma_u^2.
  const RootDatum a2 = test::load("a2");
  DLContext dl(a2, HeckeParams::sigma(a2));
  const IntVec lambda{0, 1};  // stabiliser generated by r_1
  const ParamCoeff s2 = a2.sigma(0).pow(2);
  LaurentPoly minimal, shifted;
  for (const auto& w : min_coset_reps(a2, lambda, 3)) {
    minimal += dl_apply_Hw(dl, w.word, lambda).scaled(sigma_w(a2, w.word));
    std::vector<int> wu = w.word;
    wu.push_back(0);
    const auto& canon = dl.ball()[dl.index(wu)].word;
    shifted += dl_apply_Hw(dl, canon, lambda).scaled(sigma_w(a2, canon));
  }
  CHECK(shifted == minimal.scaled(s2));
}

TEST_CASE("rank one Satake image") {
  const RootDatum a1 = test::load("a1");
  SatakeContext ctx(a1);
  for (auto route : {SatakeRoute::Recursion, SatakeRoute::Closed, SatakeRoute::Both}) {
    const SatakeResult r = ctx.satake({1}, 2, route);
    CHECK(r.routes_agree);
    CHECK(agree_through(r.series, rank1_satake(a1), 2));
  }
  CHECK(test::is_one(ctx.satake({0}, 3, SatakeRoute::Both).series));
}

TEST_CASE("rank one against the rational orbit sum") {
  const RootDatum a1 = test::load("a1");
  SatakeContext ctx(a1);
  const int depth = 8;
  for (int k = 0; k <= 3; ++k) {
    const TruncSeries hl = ctx.hall_littlewood({k}, depth);
    const TruncSeries sat = ctx.satake({k}, depth, SatakeRoute::Both).series;
    for (const Rational root : {Rational(2), Rational(3), Rational(1, 2)}) {
      const Rational t = root * root;
      const auto h = oracle::hall_littlewood_rank1(k, t);
      const auto s = oracle::satake_rank1(k, t);
      for (int e = k; e >= k - depth; --e) {
        CHECK(evaluate(hl.coeff({e}), {t}) == (h.count(e) ? h.at(e) : Rational(0)));
        CHECK(evaluate(sat.coeff({e}), {root}) == (s.count(e) ? s.at(e) : Rational(0)));
      }
    }
  }
}

TEST_CASE("Satake images are sane") {
  const std::vector<std::pair<std::string, IntVec>> cases{
      {"a1", {2}}, {"a2", {1, 1}}, {"a2", {0, 1}}, {"b2", {1, 1}}, {"g2", {0, 1}}, {"affine_a1", {0, 0, 1}}, {"hyperbolic", {1, 1}}};
  for (const auto& [name, lambda] : cases) {
    const RootDatum rd = test::load(name);
    SatakeContext ctx(rd);
    const int depth = 3;
    const SatakeResult r = ctx.satake(lambda, depth, SatakeRoute::Both);
    CHECK_MESSAGE(r.routes_agree, name);
    const auto sanity = test::satake_sanity(rd, lambda, r.series, depth);
    CHECK_MESSAGE(sanity.support, name);
    CHECK_MESSAGE(sanity.top, name);
    CHECK_MESSAGE(sanity.integral, name);
    CHECK_MESSAGE(sanity.positive, name);
    CHECK_MESSAGE(sanity.invariance.empty(), name);
  }
}

TEST_CASE("Hall-Littlewood functions") {
  const RootDatum a1 = test::load("a1");
  SatakeContext ctx(a1);
  const ParamCoeff t = ParamCoeff::var(0);
  const TruncSeries hl = ctx.hall_littlewood({1}, 2);
  CHECK(hl.coeff({0}) == ParamCoeff(1) - t);
  CHECK(hl.coeff({1}) == ParamCoeff(1));
  CHECK(test::is_one(ctx.hall_littlewood({0}, 2)));
  SatakeContext b2(test::from_cartan({{2, -1}, {-2, 2}}, ParamMode::Auto));
  CHECK_THROWS_AS(b2.hall_littlewood({1, 1}, 2), Error);
}

TEST_CASE("Hall-Littlewood at t = 1 is the orbit sum") {
  const RootDatum a2 = test::load("a2");
  SatakeContext ctx(a2);
  for (const IntVec& lambda : {IntVec{1, 1}, IntVec{0, 1}, IntVec{2, 0}}) {
    const int depth = 6;
    const TruncSeries at1 = evaluate_integral(ctx.hall_littlewood(lambda, depth), {1});
    std::set<IntVec> orbit;
    for (const auto& w : weyl_ball(a2, 3)) orbit.insert(w.apply(lambda));
    for (const auto& [nu, c] : at1.terms()) CHECK(c == ParamCoeff(orbit.count(at1.exponent(nu)) ? 1 : 0));
    for (const auto& mu : orbit) CHECK(at1.coeff(mu) == ParamCoeff(1));
  }
}

TEST_CASE("characters at t = 0") {
  const RootDatum a2 = test::load("a2");
  SatakeContext c2(a2);
  const IntVec lam = add(a2.coroot(0), a2.coroot(1));
  const TruncSeries ch = c2.character_t0(lam, 4);
  CHECK(agree_through(ch, weyl_character(a2, lam), 4));
  CHECK(coeff_sum(ch, {}) == 8);
  const RootDatum a1 = test::load("a1");
  SatakeContext c1(a1);
  const TruncSeries ch1 = c1.character_t0({1}, 2);
  CHECK(coeff_sum(ch1, {}) == 3);
  CHECK(ch1.coeff({1}) == ParamCoeff(1));
  CHECK(ch1.coeff({0}) == ParamCoeff(1));
  CHECK(ch1.coeff({-1}) == ParamCoeff(1));
  CHECK(test::is_one(c1.character_t0({0}, 2)));
}

TEST_CASE("sanity checks reject corrupted images") {
  const RootDatum rd = test::load("hyperbolic");
  SatakeContext ctx(rd);
  const IntVec lambda{1, 1};
  const int depth = 4;
  const TruncSeries s = ctx.satake(lambda, depth, SatakeRoute::Recursion).series;
  REQUIRE(test::satake_sanity(rd, lambda, s, depth).ok());
  REQUIRE(s.terms().size() > 3);
  const auto reflected = weyl_ball(rd, 1)[1].apply(lambda);
  CHECK_FALSE(test::satake_sanity(rd, lambda, s + TruncSeries::monomial(rd.lattice, reflected), depth).ok());
  CHECK_FALSE(test::satake_sanity(rd, lambda, s.scaled(2), depth).top);
  CHECK_FALSE(test::satake_sanity(rd, lambda, s.scaled(-1), depth).positive);
  CHECK_FALSE(test::satake_sanity(rd, lambda, s.scaled(ParamCoeff::var(0)), depth).integral);
}
