#include "doctest.h"
#include "support.hpp"

#include "kms/symmetrizers.hpp"

using namespace kms;

namespace {

TruncSeries a1_delta(const RootDatum& a1, int depth) {
  const ParamCoeff u = ParamCoeff(1) - a1.sigma(0).pow(2);
  TruncSeries d(a1.lattice, {0}, depth);
  d.add_term({0}, 1);
  for (std::int64_t k = 1; k <= depth; ++k) d.add_term({k}, u);
  return d;
}

TruncSeries a1_h(const RootDatum& a1) {
  TruncSeries h = TruncSeries::monomial(a1.lattice, {1});
  h = h + TruncSeries::monomial(a1.lattice, {0}, ParamCoeff(1) - a1.sigma(0).pow(2));
  return h + TruncSeries::monomial(a1.lattice, {-1});
}

}  // namespace

TEST_CASE("Delta") {
  const RootDatum a1 = test::load("a1");
  SymContext ctx(a1);
  CHECK(agree_through(ctx.delta(2), a1_delta(a1, 2), 2));
  for (const auto& name : test::all_data()) {
    SymContext c(test::load(name));
    CHECK(test::is_one(c.delta(0)));
  }
  const RootDatum a2 = test::load("a2");
  SymContext c2(a2);
  const TruncSeries d = c2.delta(1);
  const ParamCoeff u = ParamCoeff(1) - a2.sigma(0).pow(2);
  CHECK(d.terms().size() == 3);
  CHECK(d.coeff({-2, 1}) == u);
  CHECK(d.coeff({1, -2}) == u);
}

TEST_CASE("twisted Delta") {
  const RootDatum a1 = test::load("a1");
  SymContext ctx(a1);
  CHECK(agree_through(ctx.delta_twist({}, 3), ctx.delta(3), 3));
  const TruncSeries t = ctx.delta_twist({0}, 1);
  CHECK(t.coeff({0}) == a1.sigma(0).pow(2));
  for (const auto& name : {"a2", "b2", "affine_a1", "hyperbolic"}) {
    const RootDatum rd = test::load(name);
    SymContext c(rd);
    const int depth = 4;
    for (int i = 0; i < rd.rank(); ++i) {
      IntVec ai(rd.rank(), 0);
      ai[i] = 1;
      const TruncSeries cp = expand_c(rd, ai, depth).scaled(rd.sigma(i));
      const TruncSeries cm = expand_c(rd, scaled(ai, -1), depth).scaled(rd.sigma(i));
      CHECK(agree_through(cm * c.delta_twist({i}, depth), cp * c.delta(depth), depth));
    }
  }
}

TEST_CASE("Gamma") {
  const RootDatum a1 = test::load("a1");
  SymContext ctx(a1);
  CHECK(agree_through(ctx.gamma(2), a1_delta(a1, 2), 2));
  for (const auto& name : test::all_data()) {
    SymContext c(test::load(name));
    CHECK(test::is_one(c.gamma(0)));
    CHECK(c.gamma(3).coeff_at_offset(IntVec(c.datum().rank(), 0)) == ParamCoeff(1));
  }
}

TEST_CASE("multiplier in finite type") {
  SymContext a1(test::load("a1"));
  for (int depth = 0; depth <= 6; ++depth) CHECK(test::is_one(a1.m_sigma(depth)));
  SymContext a2(test::load("a2"));
  CHECK(test::is_one(a2.m_sigma(4)));
  SymContext b2(test::from_cartan({{2, -1}, {-2, 2}}, ParamMode::Auto));
  CHECK(test::is_one(b2.m_sigma(4)));
}

TEST_CASE("multiplier is nontrivial and invertible beyond finite type") {
  for (const auto& name : {"affine_a1", "hyperbolic"}) {
    const RootDatum rd = test::load(name);
    SymContext ctx(rd);
    const int depth = 4;
    const TruncSeries m = ctx.m_sigma(depth);
    CHECK_FALSE(test::is_one(m));
    CHECK(test::is_one((m * ctx.h_lambda(IntVec(rd.dim(), 0), depth)).truncated(depth)));
    CHECK(test::is_one(ctx.m_sigma(0)));
  }
}

TEST_CASE("P^lambda(e^lambda)") {
  const RootDatum a1 = test::load("a1");
  SymContext ctx(a1);
  CHECK(test::is_one(ctx.p_lambda_sigma({0}, 3)));
  CHECK(agree_through(ctx.p_lambda_sigma({1}, 2), a1_h(a1), 2));
  CHECK_THROWS_AS(ctx.p_lambda_sigma({-1}, 2), Error);
  const std::vector<std::pair<std::string, IntVec>> cases{
      {"a2", {1, 1}}, {"a2", {0, 1}}, {"g2", {1, 1}}, {"affine_a1", {0, 0, 1}}, {"hyperbolic", {1, 1}}};
  for (const auto& [name, lambda] : cases) {
    SymContext c(test::load(name));
    const int depth = 3;
    const TruncSeries p = c.p_lambda_sigma(lambda, depth);
    CHECK(agree_through(p, c.p_lambda_sigma(lambda, depth, 2 * depth + 2), depth));
    CHECK(agree_through(p, c.p_lambda_sigma_exact(lambda, depth), depth));
    c.set_adaptive(true);
    CHECK(agree_through(p, c.p_lambda_sigma(lambda, depth), depth));
    CHECK(c.last_cutoff() <= 2 * depth + 2);
  }
}

TEST_CASE("stabiliser sum") {
  // sum over w in W_lambda of sigma_w H_w(e^lambda) = W_lambda(sigma^2) e^lambda
  const std::vector<std::pair<std::string, IntVec>> cases{{"a2", {0, 1}}, {"a2", {0, 0}}, {"b2", {1, 0}}, {"affine_a1", {0, 0, 1}}};
  for (const auto& [name, lambda] : cases) {
    const RootDatum rd = test::load(name);
    SymContext ctx(rd);
    WeylBall stab(rd, rd.stabilizer(lambda));
    stab.extend_to(8);
    REQUIRE(stab.exhausted());
    LaurentPoly acc;
    for (std::size_t k = 0; k < stab.size(); ++k)
      acc += dl_apply_Hw(ctx.dl(), stab[k].word, lambda).scaled(sigma_w(rd, stab[k].word));
    CHECK(acc == LaurentPoly::monomial(lambda, poincare_series(rd, rd.stabilizer(lambda), 8).series));
  }
}

TEST_CASE("H_lambda") {
  const RootDatum a1 = test::load("a1");
  SymContext ctx(a1);
  CHECK(agree_through(ctx.h_lambda({1}, 2), a1_h(a1), 2));
  CHECK(agree_through(ctx.j_sigma_regular({1}, 2), a1_h(a1), 2));
  CHECK(test::is_one(ctx.h_lambda({0}, 3)));
  const RootDatum a2 = test::load("a2");
  SymContext c2(a2);
  const IntVec lam = add(a2.coroot(0), a2.coroot(1));
  CHECK(c2.h_lambda(lam, 3).coeff(lam) == ParamCoeff(1));
  CHECK_THROWS_AS(c2.j_sigma_regular({0, 1}, 2), Error);
}

TEST_CASE("H_lambda agrees with the regular sum over W") {
  const std::vector<std::pair<std::string, IntVec>> cases{
      {"a1", {2}}, {"a2", {1, 1}}, {"a2", {2, 1}}, {"b2", {1, 1}}, {"g2", {1, 1}}, {"affine_a1", {1, 0, 3}}, {"hyperbolic", {1, 1}}};
  for (const auto& [name, lambda] : cases) {
    SymContext ctx(test::load(name));
    const int depth = std::string(name) == "hyperbolic" ? 5 : 6;
    CHECK(agree_through(ctx.h_lambda(lambda, depth), ctx.j_sigma_regular(lambda, depth), depth));
  }
}

TEST_CASE("imaginary factor") {
  const RootDatum rd = test::load("affine_a1");
  SymContext ctx(rd);
  CHECK(test::is_one(ctx.delta_im({}, 3)));
  const TruncSeries one = ctx.delta_im({{{1, 1}, 1}}, 2);
  CHECK(one.terms().size() == 2);
  CHECK(one.coeff_at_offset({1, 1}) == ParamCoeff(1) - rd.sigma(0).pow(2));
  const TruncSeries two = ctx.delta_im({{{1, 1}, 2}}, 4);
  CHECK(agree_through(two, ctx.delta_im({{{1, 1}, 1}}, 4) * ctx.delta_im({{{1, 1}, 1}}, 4), 4));
  CHECK_THROWS_AS(ctx.delta_im({{{1, 1}, -1}}, 2), Error);
  SymContext b2(test::from_cartan({{2, -1}, {-2, 2}}, ParamMode::Auto));
  CHECK_THROWS_AS(b2.delta_im({{{1, 1}, 1}}, 2), Error);
}

TEST_CASE("Cherednik identity and eigenvector property") {
  for (const auto& name : {"a2", "b2", "affine_a1", "hyperbolic"}) {
    SymContext ctx(test::load(name));
    const CherednikReport c = ctx.cherednik_check(3, 3);
    CHECK_MESSAGE(c.ok, name);
    CHECK(c.checked > 0);
    const CherednikReport e = ctx.eigen_check(3, 2);
    CHECK_MESSAGE(e.ok, name);
  }
}

TEST_CASE("Poincare factorisation") {
  SymContext ctx(test::load("a2"));
  CHECK(ctx.poincare_factorization_check({0, 1}, 3, 8).ok);
  SymContext aff(test::load("affine_a1"));
  CHECK(aff.poincare_factorization_check({0, 0, 1}, 3, 8).ok);
}
