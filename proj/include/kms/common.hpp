#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kms {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<std::vector<Rational>>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

inline IntVec scaled(const IntVec& a, std::int64_t s) {
  IntVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline std::int64_t sum(const IntVec& a) {
  std::int64_t s = 0;
  for (auto x : a) s += x;
  return s;
}

// Rank of an integer matrix over Q.
int rank(const IntMat& m);

// Left inverse L (cols x rows) with L*M = I for a matrix of full column rank.
RatMat left_inverse(const IntMat& m);

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

}  // namespace kms
