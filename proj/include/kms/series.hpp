#pragma once

#include "kms/common.hpp"
#include "kms/param_coeff.hpp"
#include "kms/root_datum.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>

namespace kms {

// Finite sum of c_mu e^mu over Y.
class LaurentPoly {
 public:
  using Terms = std::map<IntVec, ParamCoeff>;

  LaurentPoly() = default;
  static LaurentPoly monomial(const IntVec& mu, const ParamCoeff& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const IntVec& mu, const ParamCoeff& c);
  ParamCoeff coeff(const IntVec& mu) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  LaurentPoly scaled(const ParamCoeff& c) const;
  LaurentPoly shifted(const IntVec& mu) const;
  LaurentPoly relabel(const WeylElt& w) const;

 private:
  Terms terms_;
};

// A series sum c_mu e^mu supported in ceiling - Q_+^vee, known exactly for
// every mu with ht(ceiling - mu) <= depth. Terms are keyed by the offset
// nu = ceiling - mu in coroot coordinates. An empty depth means exact.
class TruncSeries {
 public:
  using Depth = std::optional<int>;
  using Terms = std::map<IntVec, ParamCoeff>;

  TruncSeries(std::shared_ptr<const Lattice> lat, IntVec ceiling, Depth depth);

  static TruncSeries one(std::shared_ptr<const Lattice> lat);
  static TruncSeries monomial(std::shared_ptr<const Lattice> lat, const IntVec& mu, const ParamCoeff& c = 1);
  // Exact series whose ceiling is the join of the exponents; `fallback` is
  // used for the zero polynomial.
  static TruncSeries from_poly(std::shared_ptr<const Lattice> lat, const LaurentPoly& p,
                               const IntVec& fallback);

  const std::shared_ptr<const Lattice>& lattice() const { return lat_; }
  const IntVec& ceiling() const { return ceiling_; }
  Depth depth() const { return depth_; }
  bool exact() const { return !depth_.has_value(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const IntVec& offset, const ParamCoeff& c);
  IntVec exponent(const IntVec& offset) const;
  std::optional<IntVec> offset_of(const IntVec& mu) const;
  ParamCoeff coeff(const IntVec& mu) const;
  ParamCoeff coeff_at_offset(const IntVec& offset) const;

  TruncSeries truncated(int depth) const;
  // Same series viewed from a higher ceiling; the depth grows by the shift.
  TruncSeries rebased(const IntVec& new_ceiling) const;
  TruncSeries shifted(const IntVec& mu) const;
  TruncSeries scaled(const ParamCoeff& c) const;
  TruncSeries map_coeffs(const std::function<ParamCoeff(const ParamCoeff&)>& f) const;
  LaurentPoly to_poly() const;

  TruncSeries operator-() const { return scaled(-1); }
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

 private:
  std::shared_ptr<const Lattice> lat_;
  IntVec ceiling_;
  Depth depth_;
  Terms terms_;
};

TruncSeries invert_unit(const TruncSeries& f, int depth);

// Equality of every coefficient whose offset from the common ceiling has
// height at most `depth`.
bool agree_through(const TruncSeries& a, const TruncSeries& b, int depth);

TruncSeries relabel_exponents(const WeylElt& w, const TruncSeries& f);

TruncSeries specialize(const TruncSeries& f, const std::vector<VarSub>& subs);

// The two-parameter functions b(t,u;z) and c(t,u;z) = t - b at z = e^beta for
// a real coroot beta (coroot coordinates, either sign), expanded towards
// -Q_+^vee with ceiling 0 and truncated at `depth`.
TruncSeries expand_b(std::shared_ptr<const Lattice> lat, const IntVec& beta, const ParamCoeff& t,
                     const ParamCoeff& u, int depth);
TruncSeries expand_c(std::shared_ptr<const Lattice> lat, const IntVec& beta, const ParamCoeff& t,
                     const ParamCoeff& u, int depth);

// Same with t = sigma_beta, u = sigma'_beta; the class is found by locating
// beta among the real coroots.
TruncSeries expand_b(const RootDatum& rd, const IntVec& beta, int depth);
TruncSeries expand_c(const RootDatum& rd, const IntVec& beta, int depth);

// Simple root whose orbit contains the real coroot beta.
int real_coroot_class(const RootDatum& rd, const IntVec& beta);

}  // namespace kms
