#pragma once

#include "kms/root_datum.hpp"
#include "kms/series.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace kms {

// The operator pre_i * H_i where H_i uses parameters (t_i, u_i):
//   H_i(f) = t_i * f^{r_i} + b(t_i, u_i; e^{alpha_i^vee}) (f - f^{r_i}).
struct HeckeParams {
  std::vector<ParamCoeff> t, u, pre;

  // H_i with t = sigma_i, u = sigma'_i.
  static HeckeParams sigma(const RootDatum& rd);
  // sigma_i H_i after sigma -> q^{-1/2}; variable k of the result is q_k^{1/2}.
  static HeckeParams specialized(const RootDatum& rd);
};

// Coefficients of an element sum_v f_v [v] of the group algebra, keyed by the
// index of v in the context's Weyl ball.
using Components = std::map<std::size_t, TruncSeries>;

class DLContext {
 public:
  DLContext(RootDatum rd, HeckeParams params, std::size_t cap = WeylBall::kDefaultCap);

  const RootDatum& datum() const { return rd_; }
  const HeckeParams& params() const { return params_; }
  WeylBall& ball() { return ball_; }
  std::size_t index(const std::vector<int>& word) { return ball_.index_of_word(word); }

  LaurentPoly apply(int i, const LaurentPoly& f);
  LaurentPoly apply_word(const std::vector<int>& word, const LaurentPoly& f);

  // H_w expanded towards -tau Q_+^vee and relabelled by tau^{-1}; tau = e
  // (index 0) is the plain expansion.
  const Components& group_element(std::size_t w, int depth, std::size_t tau = 0);

  // H_w(e^lambda) on the window of depth `depth` below its ceiling, computed
  // from the group element.
  TruncSeries on_monomial_window(std::size_t w, const IntVec& lambda, int depth);

  // Memoised b and c expansions (already multiplied by pre_i).
  const std::pair<TruncSeries, TruncSeries>& factors(const IntVec& beta, int i, int depth);

 private:
  const std::map<std::int64_t, ParamCoeff>& string_quotient(int i, std::int64_t m);

  RootDatum rd_;
  HeckeParams params_;
  WeylBall ball_;
  std::map<std::pair<int, std::int64_t>, std::map<std::int64_t, ParamCoeff>> quotients_;
  std::map<std::tuple<IntVec, int, int>, std::pair<TruncSeries, TruncSeries>> factors_;
  std::map<std::tuple<std::size_t, int, std::size_t>, Components> elements_;
};

struct GroupSeries {
  std::map<std::vector<int>, TruncSeries, ShortLex> terms;
  int length_bound = 0;
  int depth = 0;
};

LaurentPoly dl_apply_Hi(DLContext& ctx, int i, const LaurentPoly& f);
LaurentPoly dl_apply_Hw(DLContext& ctx, const std::vector<int>& word, const IntVec& lambda);
GroupSeries hw_group_element(DLContext& ctx, const std::vector<int>& word, int depth);
GroupSeries to_group_series(DLContext& ctx, const Components& comps, int length_bound, int depth);

}  // namespace kms
