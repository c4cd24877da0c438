#pragma once

#include "kms/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kms {

// Exponent vector over the parameter variables. Trailing zeros are trimmed so
// that equal monomials have equal representations.
using Mono = std::vector<int>;

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_inv(const Mono& a);
void mono_trim(Mono& m);

// Laurent polynomial with big-integer coefficients in a finite set of
// parameter variables.
class ParamCoeff {
 public:
  using Terms = std::map<Mono, BigInt, MonoLess>;

  ParamCoeff() = default;
  ParamCoeff(long long c);  // NOLINT: integers embed as constants
  ParamCoeff(const BigInt& c);  // NOLINT

  static ParamCoeff monomial(Mono m, const BigInt& c = 1);
  static ParamCoeff var(int v, int exp = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_term() const;

  // A single monomial with coefficient +-1.
  bool is_unit() const;
  ParamCoeff unit_inverse() const;

  void add_term(const Mono& m, const BigInt& c);

  ParamCoeff& operator+=(const ParamCoeff& o);
  ParamCoeff& operator-=(const ParamCoeff& o);
  ParamCoeff& operator*=(const ParamCoeff& o);
  ParamCoeff operator-() const;
  friend ParamCoeff operator+(ParamCoeff a, const ParamCoeff& b) { return a += b; }
  friend ParamCoeff operator-(ParamCoeff a, const ParamCoeff& b) { return a -= b; }
  friend ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b);
  friend bool operator==(const ParamCoeff& a, const ParamCoeff& b) { return a.terms_ == b.terms_; }

  ParamCoeff pow(int e) const;

  int num_vars() const;
  // Sum of absolute exponents of the largest monomial.
  int max_abs_degree() const;

  // Exact division by a polynomial; throws when the remainder is nonzero.
  ParamCoeff divided_by(const ParamCoeff& d) const;

 private:
  Terms terms_;
};

// Substitution of variable `v` by target^(num/den); `den` must divide every
// exponent that occurs.
struct VarSub {
  int target = 0;
  int num = 1;
  int den = 1;
};

ParamCoeff substitute(const ParamCoeff& c, const std::vector<VarSub>& subs);
Rational evaluate(const ParamCoeff& c, const std::vector<Rational>& values);

// How variable exponents are printed. In half-exponent style an exponent k
// on variable "q" stands for q^(k/2).
struct VarStyle {
  std::vector<std::string> names;
  bool half = false;
};

std::string to_string(const ParamCoeff& c, const VarStyle& style);

}  // namespace kms
