#include "kms/common.hpp"

#include <algorithm>

namespace kms {

namespace {

// Row-reduces `a` in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMat& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || a[k][c] == 0) continue;
      const Rational f = a[k][c];
      for (std::size_t j = 0; j < cols; ++j) a[k][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatMat to_rat(const IntMat& m) {
  RatMat r;
  for (const auto& row : m) {
    r.emplace_back();
    for (auto x : row) r.back().emplace_back(x);
  }
  return r;
}

}  // namespace

int rank(const IntMat& m) {
  RatMat a = to_rat(m);
  return static_cast<int>(row_reduce(a).size());
}

RatMat left_inverse(const IntMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  // Solve (M^T M) L^T = M^T, i.e. L = (M^T M)^{-1} M^T.
  RatMat g(cols, std::vector<Rational>(cols + rows));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < rows; ++k) s += Rational(m[k][i] * m[k][j]);
      g[i][j] = s;
    }
    for (std::size_t k = 0; k < rows; ++k) g[i][cols + k] = m[k][i];
  }
  auto pivots = row_reduce(g);
  if (pivots.size() < cols || (cols && pivots[cols - 1] >= cols))
    throw Error("matrix does not have full column rank");
  RatMat l(cols, std::vector<Rational>(rows));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t k = 0; k < rows; ++k) l[i][k] = g[i][cols + k];
  return l;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw Error("not a rational number: '" + s + "'");
  }
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace kms
