#pragma once

#include "kms/param_coeff.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace kms {

// Laurent polynomial in z = e^{alpha^vee} with coefficients in the variables
// a = q^{1/2} (index 0) and b = q'^{1/2} (index 1).
using ZPoly = std::map<std::int64_t, ParamCoeff>;

// One row of a rank-one table: the number of mu at step k, the value of
// delta^{1/2}(mu) relative to mu_0, and (1 - z^2) times the Gamma-value.
struct TableRow {
  int k = 0;
  ParamCoeff count;
  ParamCoeff delta;
  ZPoly gamma_numerator;
};

struct RecursionTable {
  int n = 0;
  bool same_side = false;  // whether the two half-apartments agree
  bool equal_q = false;    // q = q' imposed (odd n)
  std::vector<TableRow> rows;
  ZPoly total;  // sum of count * delta * gamma_numerator

  bool vanishes() const { return total.empty(); }
};

// q'^{*k} = q' q q' ... with k factors.
ParamCoeff alternating_power(int k, bool equal_q);

RecursionTable recursion_table(int n, bool same_side);
// Every table for 0 <= n <= nmax: one for n = 0, two for each n > 0.
std::vector<RecursionTable> recursion_tables(int nmax);

}  // namespace kms
