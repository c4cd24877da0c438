#pragma once

#include "kms/io.hpp"
#include "kms/root_datum.hpp"
#include "kms/series.hpp"

#include <random>
#include <string>

namespace kms::test {

inline std::string data_path(const std::string& name) { return std::string(KMS_DATA_DIR) + "/" + name; }

inline RootDatum load(const std::string& name) { return load_root_datum(data_path(name + ".json")); }

inline const std::vector<std::string>& all_data() {
  static const std::vector<std::string> names{"a1", "a2", "b2", "g2", "affine_a1", "hyperbolic"};
  return names;
}

inline RootDatum from_cartan(const IntMat& a, ParamMode mode = ParamMode::Equal) {
  return build_root_datum(a, LatticeSpec{}, std::nullopt, mode);
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  IntVec vec(std::size_t d, int bound) {
    IntVec v(d);
    for (auto& x : v) x = uniform(-bound, bound);
    return v;
  }

  ParamCoeff coeff(int vars, int terms = 3, int exp_bound = 2, int c_bound = 3) {
    ParamCoeff c;
    for (int k = 0; k < terms; ++k) {
      Mono m(vars);
      for (auto& e : m) e = uniform(-exp_bound, exp_bound);
      mono_trim(m);
      c += ParamCoeff::monomial(m, uniform(-c_bound, c_bound));
    }
    return c;
  }

  LaurentPoly poly(std::size_t d, int vars, int terms = 4, int bound = 3) {
    LaurentPoly p;
    for (int k = 0; k < terms; ++k) p.add_term(vec(d, bound), coeff(vars, 2));
    return p;
  }

  // Series below `ceiling` with offsets of height at most `spread`.
  TruncSeries series(const std::shared_ptr<const Lattice>& lat, const IntVec& ceiling, int depth, int vars,
                     int spread) {
    TruncSeries s(lat, ceiling, depth);
    const int terms = uniform(1, 5);
    for (int k = 0; k < terms; ++k) {
      IntVec nu(lat->n, 0);
      for (int h = uniform(0, spread); h > 0; --h) ++nu[uniform(0, lat->n - 1)];
      s.add_term(nu, coeff(vars, 2));
    }
    return s;
  }

  WeylElt weyl(const std::vector<WeylElt>& ball) { return ball[uniform(0, static_cast<int>(ball.size()) - 1)]; }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline bool is_one(const TruncSeries& s) {
  if (s.terms().size() != 1) return false;
  const auto& [nu, c] = *s.terms().begin();
  return c == ParamCoeff(1) && s.exponent(nu) == IntVec(s.ceiling().size(), 0);
}

}  // namespace kms::test
