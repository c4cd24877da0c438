#pragma once

#include "kms/dl_operators.hpp"
#include "kms/symmetrizers.hpp"

#include <optional>
#include <string>

namespace kms {

enum class SatakeRoute { Recursion, Closed, Both };

struct SatakeResult {
  SatakeRoute route = SatakeRoute::Recursion;
  // q^{rho(lambda)} as a monomial in the q^{1/2} variables; empty when it is
  // not determined, in which case `series` omits it.
  std::optional<ParamCoeff> delta_half;
  TruncSeries series;
  bool routes_agree = true;
};

// sigma_c -> q_c^{-1/2}, writing variable c for q_c^{1/2}.
std::vector<VarSub> sigma_to_q(const RootDatum& rd);
// sigma_c -> t_c^{1/2}, i.e. sigma^2 = t.
std::vector<VarSub> sigma_to_t(const RootDatum& rd);

std::optional<ParamCoeff> delta_half(const RootDatum& rd, const IntVec& lambda);

class SatakeContext {
 public:
  explicit SatakeContext(const RootDatum& rd, std::size_t cap = WeylBall::kDefaultCap);

  SymContext& sym() { return sym_; }
  DLContext& q_operators() { return qdl_; }
  const RootDatum& datum() const { return sym_.datum(); }

  // delta^{1/2}(lambda) * sigma_w H_w(e^lambda) after specialisation: the
  // specialised operators sigma_i H_i applied along the word, rightmost first.
  LaurentPoly j_w(const std::vector<int>& word, const IntVec& lambda);
  // The same on the window of the given depth below lambda, built from the
  // specialised group element.
  TruncSeries j_w_window(const std::vector<int>& word, const IntVec& lambda, int depth);

  SatakeResult satake(const IntVec& lambda, int depth, SatakeRoute route);

  // H_lambda with sigma^2 = t; coefficients are polynomials in t.
  TruncSeries hall_littlewood(const IntVec& lambda, int depth);
  // H_lambda at t = 0.
  TruncSeries character_t0(const IntVec& lambda, int depth);

 private:
  TruncSeries satake_recursion(const IntVec& lambda, int depth);
  TruncSeries satake_closed(const IntVec& lambda, int depth);

  SymContext sym_;
  DLContext qdl_;
};

// Weyl character of the irreducible with highest weight lambda, for finite W,
// from the alternating sum over W divided by the Weyl denominator.
TruncSeries weyl_character(const RootDatum& rd, const IntVec& lambda);

// Every coefficient evaluated at the given variable values; the values must
// produce integers.
TruncSeries evaluate_integral(const TruncSeries& f, const std::vector<Rational>& values);

}  // namespace kms
