// One PASS/FAIL line per acceptance criterion. Every comparison is exact.

#include "checks.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include "kms/recursion_tables.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace kms;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (!ok) detail << "; ";
    ok = false;
    detail << why;
  }
};

const ParamCoeff kQ = ParamCoeff::var(0, 2);

struct Case {
  std::string datum;
  IntVec lambda;
};

// Every (datum, lambda) pair exercised below.
const std::vector<Case> kCases{
    {"a1", {1}},        {"a1", {2}},        {"a2", {1, 1}},         {"a2", {0, 1}},
    {"b2", {1, 1}},     {"g2", {1, 1}},     {"affine_a1", {0, 0, 1}}, {"hyperbolic", {1, 1}},
};

void multiplier(Outcome& o) {
  const std::vector<std::pair<std::string, RootDatum>> data{
      {"A1", test::load("a1")}, {"A2", test::load("a2")}, {"B2", test::from_cartan({{2, -1}, {-2, 2}})}};
  for (const auto& [name, rd] : data) {
    SymContext ctx(rd);
    if (!test::is_one(ctx.m_sigma(6))) o.fail(name + ": multiplier differs from 1");
  }
}

void rank_one(Outcome& o) {
  const RootDatum a1 = test::load("a1");
  SatakeContext ctx(a1);
  const ParamCoeff t = ParamCoeff::var(0);
  const TruncSeries h = ctx.hall_littlewood({1}, 4);
  const TruncSeries s = ctx.satake({1}, 4, SatakeRoute::Both).series;
  const auto expect_h = [&](std::int64_t e) { return e == 0 ? ParamCoeff(1) - t : ParamCoeff(e == 1 || e == -1 ? 1 : 0); };
  const auto expect_s = [&](std::int64_t e) { return e == 0 ? kQ - 1 : (e == 1 || e == -1 ? kQ : ParamCoeff()); };
  for (std::int64_t e = 1; e >= -3; --e) {
    if (!(h.coeff({e}) == expect_h(e))) o.fail("H at exponent " + std::to_string(e));
    if (!(s.coeff({e}) == expect_s(e))) o.fail("S(c) at exponent " + std::to_string(e));
  }
  // the one-variable rational computation, at several parameter values
  for (const Rational root : {Rational(2), Rational(3), Rational(1, 2)}) {
    const auto oh = oracle::hall_littlewood_rank1(1, root * root);
    const auto os = oracle::satake_rank1(1, root * root);
    for (std::int64_t e = 1; e >= -3; --e) {
      const Rational want_h = oh.count(e) ? oh.at(e) : Rational(0);
      const Rational want_s = os.count(e) ? os.at(e) : Rational(0);
      if (evaluate(h.coeff({e}), {root * root}) != want_h) o.fail("H disagrees with the rational oracle");
      if (evaluate(s.coeff({e}), {root}) != want_s) o.fail("S(c) disagrees with the rational oracle");
    }
  }
}

void routes(Outcome& o) {
  const std::vector<Case> cases{{"a2", {1, 1}}, {"a2", {0, 1}}, {"affine_a1", {0, 0, 1}}, {"hyperbolic", {1, 1}}};
  for (const auto& c : cases) {
    const RootDatum rd = test::load(c.datum);
    SatakeContext ctx(rd);
    if (!ctx.satake(c.lambda, 4, SatakeRoute::Both).routes_agree) o.fail(c.datum + ": routes disagree");
  }
}

void cherednik(Outcome& o) {
  for (const auto& name : {"affine_a1", "hyperbolic"}) {
    SymContext ctx(test::load(name));
    const CherednikReport r = ctx.cherednik_check(4, 3);
    if (!r.ok) o.fail(std::string(name) + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
  }
}

void tables(Outcome& o) {
  for (const auto& t : recursion_tables(6))
    if (!t.vanishes()) o.fail("table n = " + std::to_string(t.n) + " does not vanish");
  const RecursionTable t0 = recursion_table(0, false);
  if (t0.rows.size() != 2) {
    o.fail("n = 0 table has the wrong shape");
    return;
  }
  if (!(t0.rows[0].count == ParamCoeff(1)) || !(t0.rows[1].count == kQ)) o.fail("n = 0 counts");
  // Gamma-values -1 and 1/q, stored times (1 - z^2)
  if (t0.rows[0].gamma_numerator != ZPoly{{0, -1}, {2, 1}}) o.fail("n = 0 Gamma-value -1");
  if (t0.rows[1].gamma_numerator != ZPoly{{0, kQ.unit_inverse()}, {2, -kQ.unit_inverse()}})
    o.fail("n = 0 Gamma-value 1/q");
}

void operators(Outcome& o) {
  std::mt19937 rng(20260);
  test::Gen g(rng());
  for (const auto& name : test::all_data()) {
    const RootDatum rd = test::load(name);
    DLContext ctx(rd, HeckeParams::sigma(rd));
    for (int k = 0; k < 100; ++k) {
      const int i = g.uniform(0, rd.rank() - 1);
      const LaurentPoly f = LaurentPoly::monomial(g.vec(rd.dim(), 5));
      const LaurentPoly hf = dl_apply_Hi(ctx, i, f);
      const ParamCoeff s = rd.sigma(i);
      if (!(dl_apply_Hi(ctx, i, hf) == hf.scaled(s - s.unit_inverse()) + f)) {
        o.fail(std::string(name) + ": quadratic relation");
        break;
      }
    }
  }
  const RootDatum a2 = test::load("a2");
  DLContext ctx(a2, HeckeParams::sigma(a2));
  for (int k = 0; k < 50; ++k) {
    const LaurentPoly f = LaurentPoly::monomial(g.vec(2, 5));
    if (!(ctx.apply_word({0, 1, 0}, f) == ctx.apply_word({1, 0, 1}, f))) {
      o.fail("A2 braid relation");
      break;
    }
  }
}

void cutoff(Outcome& o) {
  const int depth = 4;
  for (const auto& c : kCases) {
    SymContext ctx(test::load(c.datum));
    const TruncSeries base = ctx.p_lambda_sigma(c.lambda, depth);
    if (!agree_through(base, ctx.p_lambda_sigma(c.lambda, depth, 2 * depth + 4), depth))
      o.fail(c.datum + ": longer words change the window");
  }
}

void satake_sanity(Outcome& o) {
  const int depth = 4;
  for (const auto& c : kCases) {
    const RootDatum rd = test::load(c.datum);
    SatakeContext ctx(rd);
    const auto r = test::satake_sanity(rd, c.lambda, ctx.satake(c.lambda, depth, SatakeRoute::Recursion).series, depth);
    const std::string where = c.datum;
    if (!r.support) o.fail(where + ": support");
    if (!r.top) o.fail(where + ": top coefficient");
    if (!r.integral) o.fail(where + ": integrality");
    if (!r.positive) o.fail(where + ": negative value");
    if (!r.invariance.empty()) o.fail(where + ": " + r.invariance.front());
  }
}

Rational coefficient_sum(const TruncSeries& s) {
  Rational total = 0;
  for (const auto& [nu, c] : s.terms()) total += evaluate(c, {});
  return total;
}

void characters(Outcome& o) {
  const RootDatum a2 = test::load("a2");
  SatakeContext c2(a2);
  const IntVec lam = add(a2.coroot(0), a2.coroot(1));
  const TruncSeries ch = c2.character_t0(lam, 4);
  if (!agree_through(ch, weyl_character(a2, lam), 4)) o.fail("A2 differs from the Weyl character");
  if (coefficient_sum(ch) != 8) o.fail("A2 coefficient sum " + to_string(coefficient_sum(ch)));
  const RootDatum a1 = test::load("a1");
  SatakeContext c1(a1);
  const TruncSeries ch1 = c1.character_t0({1}, 2);
  if (!agree_through(ch1, weyl_character(a1, {1}), 2)) o.fail("A1 differs from the Weyl character");
  if (coefficient_sum(ch1) != 3) o.fail("A1 coefficient sum " + to_string(coefficient_sum(ch1)));
}

void factorisation(Outcome& o) {
  SymContext ctx(test::load("a2"));
  const CherednikReport r = ctx.poincare_factorization_check({0, 1}, 4, 8);
  if (!r.ok) o.fail(r.failures.empty() ? "mismatch" : r.failures.front());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"multiplier equals 1 at depth 6 on A1, A2, B2", multiplier},
      {"rank one closed forms for H and S(c)", rank_one},
      {"recursion and closed Satake routes agree at depth 4", routes},
      {"Cherednik identity for l(v) <= 3 at depth 4 on affine A1 and hyperbolic", cherednik},
      {"local tables vanish for n <= 6; n = 0 values", tables},
      {"quadratic relation (100 monomials per datum) and A2 braid relation (50)", operators},
      {"length cutoff 2N agrees with 2N + 4 at depth 4", cutoff},
      {"Satake images: invariance, support, top coefficient, integrality, positivity", satake_sanity},
      {"t = 0 characters: A2 sum 8, A1 sum 3", characters},
      {"Poincare factorisation on A2 singular weight, depth 4, degree 8", factorisation},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (exact; %.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.ok ? "" : ": ", o.detail.str().c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
