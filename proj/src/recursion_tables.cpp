#include "kms/recursion_tables.hpp"

namespace kms {

namespace {

ParamCoeff a(int e = 1) { return ParamCoeff::var(0, e); }
ParamCoeff b(int e, bool equal_q) { return equal_q ? a(e) : ParamCoeff::var(1, e); }

void add_to(ZPoly& p, std::int64_t k, const ParamCoeff& c) {
  p[k] += c;
  if (p[k].is_zero()) p.erase(k);
}

ZPoly times(const ZPoly& p, const ParamCoeff& c, std::int64_t shift = 0) {
  ZPoly r;
  for (const auto& [k, x] : p) add_to(r, k + shift, x * c);
  return r;
}

ZPoly plus(ZPoly p, const ZPoly& q) {
  for (const auto& [k, x] : q) add_to(p, k, x);
  return p;
}

// (1 - z^2) * const
ZPoly constant(const ParamCoeff& c) {
  ZPoly r;
  add_to(r, 0, c);
  add_to(r, 2, -c);
  return r;
}

struct Values {
  ZPoly B;  // (1 - z^2) b_q
  ZPoly C;  // (1 - z^2) c_q
};

Values values(bool equal_q) {
  // b_q = q^{-1/2} b(q^{-1/2}, q'^{-1/2}; z),  c_q = q^{-1} - b_q.
  Values v;
  add_to(v.B, 0, a(-1) * (a(-1) - a(1)));
  add_to(v.B, 1, a(-1) * (b(-1, equal_q) - b(1, equal_q)));
  v.C = plus(constant(a(-2)), times(v.B, -1));
  return v;
}

}  // namespace

ParamCoeff alternating_power(int k, bool equal_q) {
  ParamCoeff r(1);
  for (int j = 0; j < k; ++j) r *= (j % 2 == 0) ? b(2, equal_q) : a(2);
  return r;
}

RecursionTable recursion_table(int n, bool same_side) {
  RecursionTable t;
  t.n = n;
  t.same_side = same_side;
  t.equal_q = n % 2 == 1;
  const bool eq = t.equal_q;
  const Values v = values(eq);
  const ParamCoeff q = a(2);
  auto delta = [&](int k) { return (a(1) * b(1, eq)).pow(-k); };
  auto qstar = [&](int k) { return alternating_power(k, eq); };
  auto cb = [&](int j, int k) { return plus(times(v.C, 1, -j), times(v.B, 1, -k)); };
  if (n == 0) {
    t.rows.push_back({-1, 1, 1, constant(-1)});
    t.rows.push_back({0, q, 1, constant(a(-2))});
  } else if (!same_side) {
    t.rows.push_back({-1, 1, 1, constant(-1)});
    t.rows.push_back({0, q - 1, 1, cb(n, 0)});
    for (int k = 1; k < n; ++k) t.rows.push_back({k, (qstar(k) - qstar(k - 1)) * q, delta(k), cb(n - k, k)});
    t.rows.push_back({n, q * qstar(n), delta(n), cb(0, n)});
  } else {
    t.rows.push_back({0, 1, 1, cb(n, 0)});
    for (int k = 1; k < n; ++k) {
      ZPoly g = times(constant(-1), 1, -k);
      t.rows.push_back({k, qstar(k) - qstar(k - 1), delta(k), g});
    }
    t.rows.push_back({n, qstar(n), delta(n), times(constant(-1), 1, -n)});
  }
  for (const auto& r : t.rows) t.total = plus(t.total, times(r.gamma_numerator, r.count * r.delta));
  return t;
}

std::vector<RecursionTable> recursion_tables(int nmax) {
  std::vector<RecursionTable> out;
  if (nmax < 0) return out;
  out.push_back(recursion_table(0, false));
  for (int n = 1; n <= nmax; ++n) {
    out.push_back(recursion_table(n, false));
    out.push_back(recursion_table(n, true));
  }
  return out;
}

}  // namespace kms
