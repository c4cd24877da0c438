#pragma once

#include "kms/dl_operators.hpp"
#include "kms/root_datum.hpp"
#include "kms/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace kms {

struct CherednikReport {
  bool ok = true;
  int depth = 0;
  int checked = 0;
  std::vector<std::string> failures;
};

struct ImaginaryCoroot {
  IntVec coords;
  int multiplicity = 1;
};

class SymContext {
 public:
  explicit SymContext(const RootDatum& rd, std::size_t cap = WeylBall::kDefaultCap);

  const RootDatum& datum() const { return dl_.datum(); }
  DLContext& dl() { return dl_; }
  WeylBall& ball() { return dl_.ball(); }

  // Grow the length cutoff layer by layer until two consecutive layers leave
  // the window unchanged, then confirm against the 2N rule.
  void set_adaptive(bool on) { adaptive_ = on; }
  int last_cutoff() const { return last_cutoff_; }

  TruncSeries delta(int depth);
  TruncSeries delta_twist(const std::vector<int>& word, int depth);
  TruncSeries gamma(int depth);
  TruncSeries m_sigma(int depth);

  // Sum of sigma_w H_w over l(w) <= length_bound as a group-algebra element.
  const Components& p_sigma(int depth, int length_bound, std::size_t tau = 0);
  // C_v: the [v]-coefficient of P_sigma (tau-twisted as in group_element).
  TruncSeries p_sigma_coefficient(std::size_t v, int depth, std::size_t tau = 0);

  // The length cutoff defaults to 2N.
  TruncSeries p_lambda_sigma(const IntVec& lambda, int depth, int cutoff = -1);
  TruncSeries p_lambda_sigma_exact(const IntVec& lambda, int depth);
  TruncSeries h_lambda(const IntVec& lambda, int depth);
  TruncSeries j_sigma_regular(const IntVec& lambda, int depth);
  TruncSeries delta_im(const std::vector<ImaginaryCoroot>& coroots, int depth);

  // C_v * Delta = Gamma * (v Delta) for l(v) <= max_length.
  CherednikReport cherednik_check(int depth, int max_length);
  // H_i P_sigma = sigma_i P_sigma on every [v] with l(v) <= max_length, and
  // C_{r_i v} = (r_i C_v).
  CherednikReport eigen_check(int depth, int max_length);
  // sum_{l(w) <= 2N} sigma_w H_w(e^lambda) = W_lambda(sigma^2) P^lambda(e^lambda),
  // compared on coefficient monomials of degree at most max_degree.
  CherednikReport poincare_factorization_check(const IntVec& lambda, int depth, int max_degree);

 private:
  void require_dominant(const IntVec& lambda) const;

  DLContext dl_;
  bool adaptive_ = false;
  int last_cutoff_ = 0;
  std::map<int, TruncSeries> delta_cache_;
  std::map<int, TruncSeries> gamma_cache_;
  std::map<std::tuple<int, int, std::size_t>, Components> p_cache_;
};

}  // namespace kms
