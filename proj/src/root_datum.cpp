#include "kms/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace kms {

IntVec Lattice::coroot(int j) const {
  IntVec v(d);
  for (int k = 0; k < d; ++k) v[k] = C[k][j];
  return v;
}

std::int64_t Lattice::pair(int i, const IntVec& v) const { return dot(R[i], v); }

IntVec Lattice::from_coroot_coords(const IntVec& q) const {
  IntVec v(d, 0);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < n; ++j) v[k] += C[k][j] * q[j];
  return v;
}

std::optional<IntVec> Lattice::coroot_coords(const IntVec& v) const {
  IntVec q(n);
  for (int j = 0; j < n; ++j) {
    Rational s = 0;
    for (int k = 0; k < d; ++k)
      if (v[k] != 0) s += coroot_solver[j][k] * v[k];
    if (denominator(s) != 1) return std::nullopt;
    q[j] = static_cast<std::int64_t>(numerator(s));
  }
  if (from_coroot_coords(q) != v) return std::nullopt;
  return q;
}

IntVec Lattice::coroot_coords_or_throw(const IntVec& v) const {
  auto q = coroot_coords(v);
  if (!q) throw Error("vector is not in the coroot lattice");
  return *q;
}

Rational RootDatum::rho_of(const IntVec& v) const {
  Rational s = 0;
  for (int k = 0; k < dim(); ++k) s += rho[k] * v[k];
  return s;
}

bool RootDatum::is_dominant(const IntVec& lambda) const {
  for (int i = 0; i < rank(); ++i)
    if (pair(i, lambda) < 0) return false;
  return true;
}

std::vector<int> RootDatum::stabilizer(const IntVec& lambda) const {
  std::vector<int> J;
  for (int i = 0; i < rank(); ++i)
    if (pair(i, lambda) == 0) J.push_back(i);
  return J;
}

void RootDatum::check_weight(const IntVec& lambda) const {
  if (static_cast<int>(lambda.size()) != dim())
    throw Error("weight has " + std::to_string(lambda.size()) + " coordinates, lattice rank is " +
                std::to_string(dim()));
}

namespace {

void check_cartan(const IntMat& a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error("Cartan matrix is not square");
    if (a[i][i] != 2) throw Error("Cartan matrix diagonal entries must be 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw Error("off-diagonal Cartan entries must be nonpositive");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw Error("Cartan matrix zero pattern is not symmetric");
    }
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

ParamClasses make_classes(const IntMat& a, const Lattice& lat, ParamMode mode) {
  const int n = lat.n;
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int x, int y) { parent[find(parent, x)] = find(parent, y); };
  for (int i = 0; i < n; ++i) {
    if (mode == ParamMode::Equal) unite(i, 0), unite(n + i, 0);
    for (int k = 0; k < lat.d; ++k)
      if (lat.R[i][k] % 2 != 0) unite(i, n + i);
    for (int j = 0; j < n; ++j)
      if (i != j && a[i][j] == -1 && a[j][i] == -1) unite(i, j), unite(n + i, n + j), unite(i, n + i);
  }
  ParamClasses pc;
  pc.sigma.resize(n);
  pc.sigma_prime.resize(n);
  std::map<int, int> root_to_var;
  std::vector<int> first_symbol;
  for (int s = 0; s < 2 * n; ++s) {
    const int r = find(parent, s);
    auto [it, inserted] = root_to_var.emplace(r, pc.count);
    if (inserted) {
      ++pc.count;
      first_symbol.push_back(s);
    }
    (s < n ? pc.sigma[s] : pc.sigma_prime[s - n]) = it->second;
  }
  for (int v = 0; v < pc.count; ++v) {
    if (pc.count == 1) {
      pc.sigma_names.push_back("sigma");
      pc.q_names.push_back("q");
      pc.t_names.push_back("t");
      continue;
    }
    const int s = first_symbol[v];
    const std::string suffix = std::to_string((s < n ? s : s - n) + 1) + (s < n ? "" : "'");
    pc.sigma_names.push_back("sigma" + suffix);
    pc.q_names.push_back("q" + suffix);
    pc.t_names.push_back("t" + suffix);
  }
  return pc;
}

}  // namespace

RootDatum build_root_datum(const IntMat& cartan, const LatticeSpec& spec,
                           const std::optional<std::vector<Rational>>& rho, ParamMode mode) {
  check_cartan(cartan);
  const int n = static_cast<int>(cartan.size());
  auto lat = std::make_shared<Lattice>();
  lat->n = n;
  if (spec.coweight) {
    if (rank(cartan) < n)
      throw Error("coweight lattice needs an invertible Cartan matrix; its coroot columns are dependent");
    lat->d = n;
    lat->R.assign(n, IntVec(n, 0));
    lat->C.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) {
      lat->R[i][i] = 1;
      for (int k = 0; k < n; ++k) lat->C[k][i] = cartan[i][k];
    }
  } else {
    lat->R = spec.roots_on_basis;
    lat->C = spec.coroots_in_basis;
    if (static_cast<int>(lat->R.size()) != n) throw Error("roots_on_basis must have one row per simple root");
    lat->d = static_cast<int>(lat->R[0].size());
    if (lat->d < n) throw Error("lattice rank is smaller than the Cartan rank");
    for (const auto& row : lat->R)
      if (static_cast<int>(row.size()) != lat->d) throw Error("roots_on_basis rows differ in length");
    if (static_cast<int>(lat->C.size()) != lat->d) throw Error("coroots_in_basis must have one row per basis vector");
    for (const auto& row : lat->C)
      if (static_cast<int>(row.size()) != n) throw Error("coroots_in_basis must have one column per simple coroot");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < lat->d; ++k) s += lat->R[i][k] * lat->C[k][j];
        if (s != cartan[j][i]) throw Error("roots and coroots do not pair to the Cartan matrix");
      }
    if (rank(lat->R) < n) throw Error("simple roots are linearly dependent");
    if (rank(lat->C) < n) throw Error("simple coroots are linearly dependent");
  }
  lat->coroot_solver = left_inverse(lat->C);

  RootDatum rd;
  rd.cartan = cartan;
  rd.mode = mode;
  if (rho) {
    if (static_cast<int>(rho->size()) != lat->d) throw Error("rho must have one entry per basis vector");
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < lat->d; ++k) s += (*rho)[k] * lat->C[k][j];
      if (s != 1) throw Error("rho must take the value 1 on every simple coroot");
    }
    rd.rho = *rho;
  } else {
    if (lat->d != n)
      throw Error("rho is not determined by the lattice; supply it explicitly");
    // rho * C = (1,...,1); C is square and invertible here.
    IntMat ct(n, IntVec(n));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) ct[j][k] = lat->C[k][j];
    RatMat inv = left_inverse(ct);
    rd.rho.assign(n, 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) rd.rho[k] += inv[k][j];
  }
  rd.classes = make_classes(cartan, *lat, mode);
  rd.lattice = std::move(lat);
  return rd;
}

IntVec reflect(const RootDatum& rd, int i, const IntVec& v) {
  const std::int64_t m = rd.pair(i, v);
  IntVec r(v);
  if (m == 0) return r;
  for (int k = 0; k < rd.dim(); ++k) r[k] -= m * rd.lattice->C[k][i];
  return r;
}

IntVec WeylElt::apply(const IntVec& v) const {
  const std::size_t d = v.size();
  IntVec r(d, 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) r[a] += matrix[a * d + b] * v[b];
  return r;
}

std::size_t VecHash::operator()(const IntVec& v) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

WeylBall::WeylBall(const RootDatum& rd, std::size_t cap)
    : WeylBall(rd, [&] {
        std::vector<int> g(rd.rank());
        std::iota(g.begin(), g.end(), 0);
        return g;
      }(), cap) {}

WeylBall::WeylBall(const RootDatum& rd, std::vector<int> generators, std::size_t cap)
    : n_(rd.rank()), d_(rd.dim()), gens_(std::move(generators)), cap_(cap) {
  std::sort(gens_.begin(), gens_.end());
  for (int i = 0; i < n_; ++i) {
    IntVec m(d_ * d_, 0);
    for (int a = 0; a < d_; ++a) {
      m[a * d_ + a] = 1;
      for (int b = 0; b < d_; ++b) m[a * d_ + b] -= rd.lattice->C[a][i] * rd.lattice->R[i][b];
    }
    refl_.push_back(std::move(m));
  }
  IntVec id(d_ * d_, 0);
  for (int a = 0; a < d_; ++a) id[a * d_ + a] = 1;
  elems_.push_back({id, {}});
  index_.emplace(id, 0);
  layer_end_.push_back(1);
  radius_ = 0;
  right_.emplace_back();
  left_.emplace_back();
}

IntVec WeylBall::mul(const IntVec& a, const IntVec& b) const {
  IntVec r(d_ * d_, 0);
  for (int i = 0; i < d_; ++i)
    for (int k = 0; k < d_; ++k) {
      const auto x = a[i * d_ + k];
      if (x == 0) continue;
      for (int j = 0; j < d_; ++j) r[i * d_ + j] += x * b[k * d_ + j];
    }
  return r;
}

void WeylBall::extend_to(int radius) {
  while (radius_ < radius && !exhausted_) {
    const std::size_t begin = radius_ == 0 ? 0 : layer_end_[radius_ - 1];
    const std::size_t end = layer_end_[radius_];
    for (std::size_t k = begin; k < end; ++k)
      for (int i : gens_) {
        IntVec m = mul(elems_[k].matrix, refl_[i]);
        if (index_.count(m)) continue;
        if (elems_.size() >= cap_)
          throw Error("Weyl group enumeration exceeded the element cap of " + std::to_string(cap_));
        std::vector<int> word = elems_[k].word;
        word.push_back(i);
        index_.emplace(m, elems_.size());
        elems_.push_back({std::move(m), std::move(word)});
      }
    if (elems_.size() == end) {
      exhausted_ = true;
      break;
    }
    layer_end_.push_back(elems_.size());
    ++radius_;
  }
  right_.resize(elems_.size());
  left_.resize(elems_.size());
}

std::size_t WeylBall::layer_end(int len) const {
  if (len < 0) return 0;
  if (len > radius_) {
    if (!exhausted_) throw Error("Weyl ball queried beyond its radius");
    return elems_.size();
  }
  return layer_end_[len];
}

std::optional<std::size_t> WeylBall::find(const IntVec& matrix) const {
  auto it = index_.find(matrix);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long WeylBall::right(std::size_t idx, int i) {
  auto& row = right_[idx];
  if (row.empty()) row.assign(n_, -2);
  if (row[i] == -2 || row[i] == -1) {
    auto f = find(mul(elems_[idx].matrix, refl_[i]));
    row[i] = f ? static_cast<long>(*f) : -1;
  }
  return row[i];
}

long WeylBall::left(std::size_t idx, int i) {
  auto& row = left_[idx];
  if (row.empty()) row.assign(n_, -2);
  if (row[i] == -2 || row[i] == -1) {
    auto f = find(mul(refl_[i], elems_[idx].matrix));
    row[i] = f ? static_cast<long>(*f) : -1;
  }
  return row[i];
}

std::size_t WeylBall::index_of_word(const std::vector<int>& word) {
  extend_to(static_cast<int>(word.size()));
  std::size_t idx = 0;
  for (int i : word) {
    const long r = right(idx, i);
    if (r < 0) throw Error("word leaves the enumerated part of W");
    idx = static_cast<std::size_t>(r);
  }
  return idx;
}

std::size_t WeylBall::inverse(std::size_t idx) {
  std::vector<int> w(elems_[idx].word.rbegin(), elems_[idx].word.rend());
  return index_of_word(w);
}

std::vector<WeylElt> weyl_ball(const RootDatum& rd, int radius, std::size_t cap) {
  WeylBall ball(rd, cap);
  ball.extend_to(radius);
  const std::size_t end = ball.layer_end(radius);
  std::vector<WeylElt> out;
  for (std::size_t k = 0; k < end; ++k) out.push_back(ball[k]);
  return out;
}

namespace {

// r_i on coroot coordinates.
void reflect_coroot(const IntMat& a, int i, IntVec& q) {
  std::int64_t m = 0;
  for (std::size_t k = 0; k < q.size(); ++k) m += q[k] * a[k][i];
  q[i] -= m;
}

}  // namespace

std::int64_t height(const IntVec& q) { return sum(q); }

int coroot_sign(const IntVec& q) {
  bool pos = false, neg = false;
  for (auto x : q) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

std::vector<IntVec> inversion_coroots(const RootDatum& rd, const std::vector<int>& word) {
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    IntVec q(rd.rank(), 0);
    q[word[k]] = 1;
    for (std::size_t j = k; j-- > 0;) reflect_coroot(rd.cartan, word[j], q);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<PosRealCoroot> positive_real_coroots(const RootDatum& rd, int max_height) {
  const int n = rd.rank();
  std::map<IntVec, int> seen;
  std::deque<IntVec> queue;
  if (max_height >= 1)
    for (int i = 0; i < n; ++i) {
      IntVec q(n, 0);
      q[i] = 1;
      seen.emplace(q, i);
      queue.push_back(q);
    }
  while (!queue.empty()) {
    IntVec q = queue.front();
    queue.pop_front();
    const int cls = seen[q];
    for (int i = 0; i < n; ++i) {
      IntVec r = q;
      reflect_coroot(rd.cartan, i, r);
      if (coroot_sign(r) != 1 || height(r) > max_height || seen.count(r)) continue;
      seen.emplace(r, cls);
      queue.push_back(std::move(r));
    }
  }
  std::vector<PosRealCoroot> out;
  for (const auto& [q, cls] : seen) out.push_back({q, static_cast<int>(height(q)), cls});
  std::stable_sort(out.begin(), out.end(),
                   [](const PosRealCoroot& a, const PosRealCoroot& b) { return a.height < b.height; });
  return out;
}

std::vector<WeylElt> min_coset_reps(const RootDatum& rd, const IntVec& lambda, int radius, std::size_t cap) {
  rd.check_weight(lambda);
  const auto J = rd.stabilizer(lambda);
  WeylBall ball(rd, cap);
  ball.extend_to(radius);
  std::vector<WeylElt> out;
  for (std::size_t k = 0; k < ball.layer_end(radius); ++k) {
    bool minimal = true;
    for (int i : J) {
      auto q = rd.lattice->coroot_coords_or_throw(ball[k].apply(rd.coroot(i)));
      if (coroot_sign(q) < 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(ball[k]);
  }
  return out;
}

ParamCoeff sigma_w(const RootDatum& rd, const std::vector<int>& word) {
  Mono m(rd.classes.count, 0);
  for (int i : word) ++m[rd.classes.sigma[i]];
  return ParamCoeff::monomial(m);
}

PoincareSeries poincare_series(const RootDatum& rd, const std::vector<int>& J, int max_length) {
  for (int j : J)
    if (j < 0 || j >= rd.rank()) throw Error("generator index out of range");
  WeylBall ball(rd, J);
  ball.extend_to(max_length + 1);
  PoincareSeries out;
  for (std::size_t k = 0; k < ball.layer_end(max_length); ++k) {
    const auto s = sigma_w(rd, ball[k].word);
    out.series += s * s;
  }
  out.exact = ball.size() == ball.layer_end(max_length);
  return out;
}

}  // namespace kms
