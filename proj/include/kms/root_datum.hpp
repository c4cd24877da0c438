#pragma once

#include "kms/common.hpp"
#include "kms/param_coeff.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace kms {

// The cocharacter lattice Y = Z^d with roots R (n x d, row i is alpha_i on the
// basis) and coroots C (d x n, column j is alpha_j^vee).
struct Lattice {
  int n = 0;
  int d = 0;
  IntMat R;
  IntMat C;
  RatMat coroot_solver;  // n x d left inverse of C

  IntVec coroot(int j) const;
  std::int64_t pair(int i, const IntVec& v) const;
  IntVec from_coroot_coords(const IntVec& q) const;
  // Coroot coordinates of v when v lies in Q^vee.
  std::optional<IntVec> coroot_coords(const IntVec& v) const;
  IntVec coroot_coords_or_throw(const IntVec& v) const;
  bool operator==(const Lattice& o) const { return R == o.R && C == o.C; }
};

enum class ParamMode { Equal, Auto };

// Partition of the symbols sigma_i, sigma'_i into parameter variables.
struct ParamClasses {
  int count = 0;
  std::vector<int> sigma;        // variable index of sigma_i
  std::vector<int> sigma_prime;  // variable index of sigma'_i
  std::vector<std::string> sigma_names;
  std::vector<std::string> q_names;
  std::vector<std::string> t_names;
};

struct LatticeSpec {
  bool coweight = true;
  IntMat roots_on_basis;
  IntMat coroots_in_basis;
};

class RootDatum {
 public:
  IntMat cartan;
  std::shared_ptr<const Lattice> lattice;
  std::vector<Rational> rho;
  ParamClasses classes;
  ParamMode mode = ParamMode::Equal;

  int rank() const { return lattice->n; }
  int dim() const { return lattice->d; }
  IntVec coroot(int j) const { return lattice->coroot(j); }
  std::int64_t pair(int i, const IntVec& v) const { return lattice->pair(i, v); }
  Rational rho_of(const IntVec& v) const;

  ParamCoeff sigma(int i) const { return ParamCoeff::var(classes.sigma[i]); }
  ParamCoeff sigma_prime(int i) const { return ParamCoeff::var(classes.sigma_prime[i]); }
  bool equal_parameters() const { return classes.count == 1; }

  bool is_dominant(const IntVec& lambda) const;
  std::vector<int> stabilizer(const IntVec& lambda) const;  // {i : alpha_i(lambda) = 0}
  void check_weight(const IntVec& lambda) const;
};

RootDatum build_root_datum(const IntMat& cartan, const LatticeSpec& lattice,
                           const std::optional<std::vector<Rational>>& rho, ParamMode mode);

IntVec reflect(const RootDatum& rd, int i, const IntVec& v);

struct WeylElt {
  IntVec matrix;          // d x d row-major action on Y
  std::vector<int> word;  // ShortLex-minimal reduced word

  int length() const { return static_cast<int>(word.size()); }
  IntVec apply(const IntVec& v) const;
};

struct ShortLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct VecHash {
  std::size_t operator()(const IntVec& v) const;
};

// Elements of W up to a length bound, in ShortLex order of canonical words.
class WeylBall {
 public:
  static constexpr std::size_t kDefaultCap = 200000;

  explicit WeylBall(const RootDatum& rd, std::size_t cap = kDefaultCap);
  // Parabolic subgroup generated by the listed simple reflections.
  WeylBall(const RootDatum& rd, std::vector<int> generators, std::size_t cap = kDefaultCap);

  void extend_to(int radius);
  int radius() const { return radius_; }
  // True once every element of W has been enumerated.
  bool exhausted() const { return exhausted_; }
  std::size_t size() const { return elems_.size(); }
  const WeylElt& operator[](std::size_t k) const { return elems_[k]; }
  std::size_t layer_end(int len) const;

  std::optional<std::size_t> find(const IntVec& matrix) const;
  // Index of w*r_i (right) or r_i*w (left), or -1 if outside the ball.
  long right(std::size_t idx, int i);
  long left(std::size_t idx, int i);
  std::size_t index_of_word(const std::vector<int>& word);
  IntVec act(std::size_t idx, const IntVec& v) const { return elems_[idx].apply(v); }
  std::size_t inverse(std::size_t idx);

 private:
  IntVec mul(const IntVec& a, const IntVec& b) const;

  int n_, d_;
  std::vector<int> gens_;
  std::size_t cap_;
  int radius_ = -1;
  bool exhausted_ = false;
  std::vector<IntVec> refl_;
  std::vector<WeylElt> elems_;
  std::vector<std::size_t> layer_end_;
  std::unordered_map<IntVec, std::size_t, VecHash> index_;
  std::vector<std::vector<long>> right_, left_;
};

std::vector<WeylElt> weyl_ball(const RootDatum& rd, int radius, std::size_t cap = WeylBall::kDefaultCap);

// Coroot coordinates of r_{i1}...r_{i(k-1)}(alpha_{ik}^vee) along the word.
std::vector<IntVec> inversion_coroots(const RootDatum& rd, const std::vector<int>& word);

struct PosRealCoroot {
  IntVec coords;  // coroot coordinates
  int height = 0;
  int simple = 0;  // a simple coroot in the same W-orbit
};

std::vector<PosRealCoroot> positive_real_coroots(const RootDatum& rd, int max_height);

// Minimal coset representatives for W / W_lambda up to a length bound.
std::vector<WeylElt> min_coset_reps(const RootDatum& rd, const IntVec& lambda, int radius,
                                    std::size_t cap = WeylBall::kDefaultCap);

// sigma_w = sigma_{i1} ... sigma_{in} for a reduced word.
ParamCoeff sigma_w(const RootDatum& rd, const std::vector<int>& word);

struct PoincareSeries {
  ParamCoeff series;
  bool exact = false;  // W(J) was exhausted within the bound
};

// Sum of sigma_w^2 over the parabolic subgroup W(J) with l(w) <= max_length.
PoincareSeries poincare_series(const RootDatum& rd, const std::vector<int>& J, int max_length);

std::int64_t height(const IntVec& coroot_coords);
int coroot_sign(const IntVec& coroot_coords);  // +1, -1, or 0 when mixed

}  // namespace kms
