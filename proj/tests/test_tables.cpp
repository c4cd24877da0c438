#include "doctest.h"

#include "kms/recursion_tables.hpp"

using namespace kms;

namespace {

ZPoly weighted_total(const RecursionTable& t) {
  ZPoly total;
  for (const auto& row : t.rows)
    for (const auto& [e, c] : row.gamma_numerator) {
      total[e] += row.count * row.delta * c;
      if (total[e].is_zero()) total.erase(e);
    }
  return total;
}

const ParamCoeff q = ParamCoeff::var(0, 2);

}  // namespace

TEST_CASE("every local table vanishes") {
  const auto tables = recursion_tables(6);
  CHECK(tables.size() == 13);
  for (const auto& t : tables) {
    CHECK_MESSAGE(t.vanishes(), "n = " << t.n << (t.same_side ? " same side" : " opposite sides"));
    CHECK(weighted_total(t).empty());
    CHECK(t.equal_q == (t.n % 2 == 1));
  }
}

TEST_CASE("table with n = 0") {
  const RecursionTable t = recursion_table(0, false);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].count == ParamCoeff(1));
  CHECK(t.rows[1].count == q);
  // Gamma-values -1 and 1/q, stored times (1 - z^2)
  CHECK(t.rows[0].gamma_numerator == ZPoly{{0, -1}, {2, 1}});
  CHECK(t.rows[1].gamma_numerator == ZPoly{{0, q.unit_inverse()}, {2, -q.unit_inverse()}});
}

TEST_CASE("n = 2 on one side with equal q") {
  const RecursionTable t = recursion_table(2, true);
  CHECK(t.vanishes());
  CHECK(t.same_side);
}

TEST_CASE("a corrupted table no longer vanishes") {
  for (const auto& base : recursion_tables(4)) {
    for (std::size_t r = 0; r < base.rows.size(); ++r) {
      RecursionTable t = base;
      t.rows[r].count += 1;
      CHECK_FALSE(weighted_total(t).empty());
    }
  }
}

TEST_CASE("alternating powers") {
  const ParamCoeff qp = ParamCoeff::var(1, 2);
  CHECK(alternating_power(0, false) == ParamCoeff(1));
  CHECK(alternating_power(1, false) == qp);
  CHECK(alternating_power(3, false) == qp * q * qp);
  CHECK(alternating_power(3, true) == q.pow(3));
}
