#include "kms/symmetrizers.hpp"

#include <sstream>

namespace kms {

namespace {

std::string word_str(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::ostringstream s;
  for (std::size_t k = 0; k < w.size(); ++k) s << (k ? "." : "") << "r" << (w[k] + 1);
  return s.str();
}

}  // namespace

SymContext::SymContext(const RootDatum& rd, std::size_t cap) : dl_(rd, HeckeParams::sigma(rd), cap) {}

void SymContext::require_dominant(const IntVec& lambda) const {
  datum().check_weight(lambda);
  if (!datum().is_dominant(lambda)) throw Error("weight is not dominant");
}

TruncSeries SymContext::delta(int depth) {
  if (auto it = delta_cache_.find(depth); it != delta_cache_.end()) return it->second;
  const RootDatum& rd = datum();
  TruncSeries d = TruncSeries::one(rd.lattice).truncated(depth);
  for (const auto& beta : positive_real_coroots(rd, depth)) {
    const int i = beta.simple;
    d = d * expand_c(rd.lattice, scaled(beta.coords, -1), rd.sigma(i), rd.sigma_prime(i), depth).scaled(rd.sigma(i));
  }
  return delta_cache_.emplace(depth, d).first->second;
}

TruncSeries SymContext::delta_twist(const std::vector<int>& word, int depth) {
  const RootDatum& rd = datum();
  TruncSeries d = delta(depth);
  for (const auto& beta : inversion_coroots(rd, word)) {
    const int i = real_coroot_class(rd, beta);
    auto c_pos = expand_c(rd.lattice, beta, rd.sigma(i), rd.sigma_prime(i), depth);
    auto c_neg = expand_c(rd.lattice, scaled(beta, -1), rd.sigma(i), rd.sigma_prime(i), depth);
    d = d * c_pos * invert_unit(c_neg, depth);
  }
  return d;
}

const Components& SymContext::p_sigma(int depth, int length_bound, std::size_t tau) {
  auto key = std::make_tuple(depth, length_bound, tau);
  if (auto it = p_cache_.find(key); it != p_cache_.end()) return it->second;
  WeylBall& ball = dl_.ball();
  ball.extend_to(length_bound);
  Components out;
  for (std::size_t w = 0; w < ball.layer_end(length_bound); ++w) {
    const ParamCoeff s = sigma_w(datum(), ball[w].word);
    for (const auto& [v, f] : dl_.group_element(w, depth, tau)) {
      auto it = out.find(v);
      if (it == out.end()) out.emplace(v, f.scaled(s));
      else it->second = it->second + f.scaled(s);
    }
  }
  return p_cache_.emplace(key, std::move(out)).first->second;
}

TruncSeries SymContext::p_sigma_coefficient(std::size_t v, int depth, std::size_t tau) {
  const int lv = dl_.ball()[v].length();
  const int lt = dl_.ball()[tau].length();
  const auto& p = p_sigma(depth, 2 * depth + lv + 2 * lt, tau);
  auto it = p.find(v);
  if (it == p.end()) return TruncSeries(datum().lattice, IntVec(datum().dim(), 0), depth);
  return it->second;
}

TruncSeries SymContext::gamma(int depth) {
  if (auto it = gamma_cache_.find(depth); it != gamma_cache_.end()) return it->second;
  WeylBall& ball = dl_.ball();
  auto layer_sum = [&](int len) {
    ball.extend_to(len);
    TruncSeries s(datum().lattice, IntVec(datum().dim(), 0), depth);
    for (std::size_t w = ball.layer_end(len - 1); w < ball.layer_end(len); ++w) {
      const auto& g = dl_.group_element(w, depth);
      if (auto it = g.find(0); it != g.end()) s = s + it->second.scaled(sigma_w(datum(), ball[w].word));
    }
    return s;
  };
  TruncSeries full(datum().lattice, IntVec(datum().dim(), 0), depth);
  for (int len = 0; len <= 2 * depth; ++len) full = full + layer_sum(len);
  last_cutoff_ = 2 * depth;
  if (adaptive_) {
    TruncSeries partial(datum().lattice, IntVec(datum().dim(), 0), depth);
    int quiet = 0, len = 0;
    for (; quiet < 2; ++len) {
      TruncSeries layer = layer_sum(len);
      quiet = layer.is_zero() ? quiet + 1 : 0;
      partial = partial + layer;
    }
    last_cutoff_ = len - 1;
    if (!agree_through(partial, full, depth))
      throw Error("adaptive cutoff disagrees with the 2N length bound");
  }
  return gamma_cache_.emplace(depth, full).first->second;
}

TruncSeries SymContext::m_sigma(int depth) { return gamma(depth) * invert_unit(delta(depth), depth); }

TruncSeries SymContext::p_lambda_sigma(const IntVec& lambda, int depth, int cutoff) {
  require_dominant(lambda);
  if (cutoff < 0) cutoff = 2 * depth;
  const auto reps = min_coset_reps(datum(), lambda, cutoff);
  TruncSeries acc(datum().lattice, lambda, depth);
  for (const auto& w : reps) {
    const std::size_t idx = dl_.index(w.word);
    acc = acc + dl_.on_monomial_window(idx, lambda, depth).scaled(sigma_w(datum(), w.word));
  }
  last_cutoff_ = cutoff;
  if (adaptive_) {
    TruncSeries partial(datum().lattice, lambda, depth);
    int quiet = 0, len = 0;
    for (; quiet < 2; ++len) {
      TruncSeries layer(datum().lattice, lambda, depth);
      for (const auto& w : min_coset_reps(datum(), lambda, len))
        if (w.length() == len)
          layer = layer + dl_.on_monomial_window(dl_.index(w.word), lambda, depth).scaled(sigma_w(datum(), w.word));
      quiet = layer.is_zero() ? quiet + 1 : 0;
      partial = partial + layer;
    }
    last_cutoff_ = len - 1;
    if (!agree_through(partial, acc, depth))
      throw Error("adaptive cutoff disagrees with the 2N length bound");
  }
  return acc;
}

TruncSeries SymContext::p_lambda_sigma_exact(const IntVec& lambda, int depth) {
  require_dominant(lambda);
  LaurentPoly acc;
  for (const auto& w : min_coset_reps(datum(), lambda, 2 * depth))
    acc += dl_apply_Hw(dl_, w.word, lambda).scaled(sigma_w(datum(), w.word));
  TruncSeries s = TruncSeries::from_poly(datum().lattice, acc, lambda);
  return s.rebased(lambda).truncated(depth);
}

TruncSeries SymContext::h_lambda(const IntVec& lambda, int depth) {
  return p_lambda_sigma(lambda, depth) * delta(depth) * invert_unit(gamma(depth), depth);
}

TruncSeries SymContext::j_sigma_regular(const IntVec& lambda, int depth) {
  require_dominant(lambda);
  if (!datum().stabilizer(lambda).empty()) throw Error("weight is not regular");
  WeylBall& ball = dl_.ball();
  ball.extend_to(depth);
  TruncSeries acc(datum().lattice, lambda, depth);
  for (std::size_t w = 0; w < ball.layer_end(depth); ++w)
    acc = acc + delta_twist(ball[w].word, depth).shifted(ball[w].apply(lambda));
  return acc.truncated(depth);
}

TruncSeries SymContext::delta_im(const std::vector<ImaginaryCoroot>& coroots, int depth) {
  const RootDatum& rd = datum();
  if (!rd.equal_parameters()) throw Error("the imaginary factor is defined only for equal parameters");
  const ParamCoeff s2 = rd.sigma(0) * rd.sigma(0);
  TruncSeries d = TruncSeries::one(rd.lattice).truncated(depth);
  for (const auto& a : coroots) {
    if (coroot_sign(a.coords) != 1) throw Error("imaginary coroots must be positive");
    if (a.multiplicity < 0) throw Error("multiplicities must be nonnegative");
    // (1 - sigma^2 z)/(1 - z) = 1 + (1 - sigma^2)(z + z^2 + ...), z = e^{-alpha}.
    TruncSeries f = TruncSeries::one(rd.lattice).truncated(depth);
    const std::int64_t h = height(a.coords);
    for (std::int64_t k = 1; k * h <= depth; ++k) f.add_term(scaled(a.coords, k), 1 - s2);
    for (int m = 0; m < a.multiplicity; ++m) d = d * f;
  }
  return d;
}

CherednikReport SymContext::cherednik_check(int depth, int max_length) {
  CherednikReport rep;
  rep.depth = depth;
  WeylBall& ball = dl_.ball();
  ball.extend_to(max_length);
  const TruncSeries g = gamma(depth), d = delta(depth);
  for (std::size_t v = 0; v < ball.layer_end(max_length); ++v) {
    ++rep.checked;
    const TruncSeries lhs = p_sigma_coefficient(v, depth) * d;
    const TruncSeries rhs = g * delta_twist(ball[v].word, depth);
    if (!agree_through(lhs, rhs, depth)) {
      rep.ok = false;
      rep.failures.push_back("C_v * Delta != Gamma * v(Delta) at v = " + word_str(ball[v].word));
    }
  }
  return rep;
}

CherednikReport SymContext::eigen_check(int depth, int max_length) {
  CherednikReport rep;
  rep.depth = depth;
  const RootDatum& rd = datum();
  WeylBall& ball = dl_.ball();
  ball.extend_to(max_length + 1);
  for (int i = 0; i < rd.rank(); ++i) {
    const std::size_t ri = dl_.index({i});
    const IntVec ai(rd.coroot(i));
    auto b = expand_b(rd.lattice, rd.lattice->coroot_coords_or_throw(ai), rd.sigma(i), rd.sigma_prime(i), depth);
    auto c = expand_c(rd.lattice, rd.lattice->coroot_coords_or_throw(ai), rd.sigma(i), rd.sigma_prime(i), depth);
    for (std::size_t v = 0; v < ball.layer_end(max_length); ++v) {
      ++rep.checked;
      const std::size_t rv = static_cast<std::size_t>(ball.left(v, i));
      const TruncSeries twisted = p_sigma_coefficient(v, depth, ri);
      const TruncSeries direct = p_sigma_coefficient(rv, depth);
      if (!agree_through(twisted, direct, depth)) {
        rep.ok = false;
        rep.failures.push_back("C_{r_i v} != r_i(C_v) at i = " + std::to_string(i + 1) + ", v = " + word_str(ball[v].word));
      }
      const TruncSeries lhs = c * p_sigma_coefficient(rv, depth, ri) + b * p_sigma_coefficient(v, depth);
      if (!agree_through(lhs, p_sigma_coefficient(v, depth).scaled(rd.sigma(i)), depth)) {
        rep.ok = false;
        rep.failures.push_back("H_i P != sigma_i P at i = " + std::to_string(i + 1) + ", v = " + word_str(ball[v].word));
      }
    }
  }
  return rep;
}

CherednikReport SymContext::poincare_factorization_check(const IntVec& lambda, int depth, int max_degree) {
  require_dominant(lambda);
  CherednikReport rep;
  rep.depth = depth;
  WeylBall& ball = dl_.ball();
  ball.extend_to(2 * depth);
  TruncSeries full(datum().lattice, lambda, depth);
  for (std::size_t w = 0; w < ball.layer_end(2 * depth); ++w)
    full = full + dl_.on_monomial_window(w, lambda, depth).scaled(sigma_w(datum(), ball[w].word));
  const auto pw = poincare_series(datum(), datum().stabilizer(lambda), 2 * depth);
  const TruncSeries rhs = p_lambda_sigma(lambda, depth).scaled(pw.series);
  const TruncSeries diff = full - rhs;
  for (const auto& [nu, c] : diff.terms()) {
    if (height(nu) > depth) continue;
    ++rep.checked;
    for (const auto& [m, k] : c.terms()) {
      int deg = 0;
      for (int x : m) deg += std::abs(x);
      if (deg <= max_degree) {
        rep.ok = false;
        rep.failures.push_back("Poincare factorisation fails at a depth " + std::to_string(height(nu)) + " term");
        break;
      }
    }
  }
  return rep;
}

}  // namespace kms
