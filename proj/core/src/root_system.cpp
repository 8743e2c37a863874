#include "casimir/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace casimir {

namespace {

RationalMatrix inverse(const IntMatrix& m, Rational& det) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (auto& x : a[col]) x /= p;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(type), rank_(type.rank) {
  validate(type_);
  build_cartan_matrix();
  generate_positive_roots();
  build_form();
}

void RootSystem::build_cartan_matrix() {
  const int l = rank_;
  cartan_.assign(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
  for (int i = 0; i < l; ++i) cartan_[i][i] = 2;
  // bond(i, j, a_ij, a_ji)
  auto bond = [this](int i, int j, int aij, int aji) {
    cartan_[i][j] = aij;
    cartan_[j][i] = aji;
  };
  switch (type_.series) {
    case Series::A:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1, -1, -1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1, -1, -1);
      bond(l - 2, l - 1, -1, -2);  // last simple root short
      break;
    case Series::C:
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1, -1, -1);
      bond(l - 2, l - 1, -2, -1);  // last simple root long
      break;
    case Series::D:
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1, -1, -1);
      bond(l - 3, l - 1, -1, -1);
      break;
    case Series::E:
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 2; i + 1 < l; ++i) bond(i, i + 1, -1, -1);
      break;
    case Series::F:
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case Series::G:
      bond(0, 1, -3, -1);  // alpha_1 short
      break;
  }

  Rational det;
  const RationalMatrix inv = inverse(cartan_, det);
  if (!det.is_integer()) throw std::logic_error("non-integral Cartan determinant");
  det_ = static_cast<int>(det.num());
  adj_.assign(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      const Rational v = inv[i][j] * det;
      if (!v.is_integer()) throw std::logic_error("non-integral adjugate");
      adj_[i][j] = static_cast<int>(v.num());
    }
  }

  simple_.clear();
  for (int j = 0; j < l; ++j) {
    Weight w(l);
    for (int i = 0; i < l; ++i) w[i] = cartan_[i][j];
    simple_.push_back(w);
  }
}

void RootSystem::generate_positive_roots() {
  const int l = rank_;
  std::map<std::vector<int>, Weight> found;
  auto to_weight = [&](const std::vector<int>& c) {
    Weight w(l);
    for (int j = 0; j < l; ++j)
      if (c[j]) w += c[j] * simple_[j];
    return w;
  };

  std::vector<std::vector<int>> layer;
  for (int i = 0; i < l; ++i) {
    std::vector<int> c(static_cast<std::size_t>(l), 0);
    c[i] = 1;
    found.emplace(c, simple_[i]);
    layer.push_back(c);
  }
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0, where
  // p is the length of the alpha_i-string below beta.
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      const Weight bw = found.at(beta);
      for (int i = 0; i < l; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !found.contains(down)) break;
          ++p;
        }
        if (p - bw[i] > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!found.contains(up)) {
            found.emplace(up, to_weight(up));
            next.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }

  std::vector<std::vector<int>> coords;
  for (const auto& [c, w] : found) coords.push_back(c);
  auto height_of = [](const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(coords.begin(), coords.end(), [&](const auto& a, const auto& b) {
    const int ha = height_of(a), hb = height_of(b);
    return ha != hb ? ha < hb : a < b;
  });
  positive_.clear();
  positive_coords_ = coords;
  positive_height_.clear();
  positive_index_.clear();
  for (const auto& c : coords) {
    positive_index_.emplace(found.at(c), static_cast<int>(positive_.size()));
    positive_.push_back(found.at(c));
    positive_height_.push_back(height_of(c));
  }
  if (positive_height_.size() > 1 && positive_height_.back() == positive_height_[positive_height_.size() - 2]) {
    throw std::logic_error("root system has no unique highest root");
  }

  Weight two_rho(l);
  for (const auto& w : positive_) two_rho += w;
  rho_ = Weight(l);
  for (int i = 0; i < l; ++i) {
    if (two_rho[i] != 2) throw std::logic_error("half sum of positive roots is not rho for " + type_.name());
    rho_[i] = 1;
  }
}

void RootSystem::build_form() {
  const int l = rank_;
  // Squared lengths up to a common factor: a_ij d_i = a_ji d_j along every bond.
  std::vector<Rational> d(static_cast<std::size_t>(l));
  std::vector<bool> seen(static_cast<std::size_t>(l), false);
  std::deque<int> queue{0};
  d[0] = 2;
  seen[0] = true;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < l; ++j) {
      if (i == j || cartan_[i][j] == 0 || seen[j]) continue;
      d[j] = d[i] * Rational(cartan_[i][j], cartan_[j][i]);
      seen[j] = true;
      queue.push_back(j);
    }
  }

  Rational det;
  const RationalMatrix inv = inverse(cartan_, det);
  // (omega_j, omega_k) = (d_j / 2) (A^-1)_jk for any invariant form with lengths d.
  RationalMatrix base(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
  for (int j = 0; j < l; ++j)
    for (int k = 0; k < l; ++k) base[j][k] = d[j] / 2 * inv[j][k];

  auto form = [&](const RationalMatrix& g, const Weight& a, const Weight& b) {
    Rational s;
    for (int j = 0; j < l; ++j) {
      if (a[j] == 0) continue;
      for (int k = 0; k < l; ++k)
        if (b[k] != 0) s += g[j][k] * Rational(static_cast<std::int64_t>(a[j]) * b[k]);
    }
    return s;
  };

  // The Killing-induced form is the unique multiple c * base satisfying
  // (x, y) = sum over all roots beta of (x, beta)(y, beta); evaluating at the
  // highest root gives c = base(theta, theta) / sum_beta base(theta, beta)^2.
  const Weight& theta = positive_.back();
  Rational sum_sq;
  for (const auto& beta : positive_) {
    const Rational v = form(base, theta, beta);
    sum_sq += v * v * 2;  // beta and -beta
  }
  const Rational c = form(base, theta, theta) / sum_sq;

  fundamental_gram_ = base;
  std::int64_t scale = 1;
  for (auto& row : fundamental_gram_) {
    for (auto& x : row) {
      x *= c;
      scale = std::lcm(scale, x.den());
    }
  }
  form_scale_ = scale;
  scaled_gram_.assign(static_cast<std::size_t>(l), std::vector<std::int64_t>(static_cast<std::size_t>(l)));
  for (int j = 0; j < l; ++j)
    for (int k = 0; k < l; ++k) {
      const Rational v = fundamental_gram_[j][k] * scale;
      scaled_gram_[j][k] = v.num();
    }

  killing_gram_.assign(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) killing_gram_[i][j] = inner(simple_[i], simple_[j]);

  height_functional_.assign(static_cast<std::size_t>(l), 0);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) height_functional_[j] += adj_[i][j];
}

std::optional<int> RootSystem::positive_root_index(const Weight& w) const {
  auto it = positive_index_.find(w);
  if (it == positive_index_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  if (a.rank() != rank_ || b.rank() != rank_) {
    throw std::invalid_argument("weight rank does not match root system " + type_.name());
  }
  return Rational(scaled_inner(a, b), form_scale_);
}

std::int64_t RootSystem::scaled_inner(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) {
    if (a[j] == 0) continue;
    std::int64_t row = 0;
    for (int k = 0; k < rank_; ++k) row += scaled_gram_[j][k] * b[k];
    s += row * a[j];
  }
  return s;
}

std::vector<std::int64_t> RootSystem::scaled_dual(const Weight& b) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(rank_), 0);
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) out[j] += scaled_gram_[j][k] * b[k];
  return out;
}

std::int64_t RootSystem::scaled_casimir(const Weight& lambda) const {
  Weight shifted = lambda;
  for (int i = 0; i < rank_; ++i) shifted[i] += 2;
  return scaled_inner(lambda, shifted);
}

Rational RootSystem::casimir(const Weight& lambda) const {
  if (lambda.rank() != rank_) throw std::invalid_argument("weight rank does not match root system " + type_.name());
  return Rational(scaled_casimir(lambda), form_scale_);
}

BigInt RootSystem::weyl_dim(const Weight& lambda) const {
  if (lambda.rank() != rank_) throw std::invalid_argument("weight rank does not match root system " + type_.name());
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim requires a dominant weight, got " + lambda.str());
  const Weight shifted = lambda + rho_;
  BigInt num = 1, den = 1;
  for (const auto& alpha : positive_) {
    num *= scaled_inner(shifted, alpha);
    den *= scaled_inner(rho_, alpha);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula produced a non-integer");
  return num / den;
}

Weight RootSystem::simple_reflection(int i, const Weight& lambda) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("simple reflection index out of range");
  Weight out = lambda;
  const int k = lambda[i];
  if (k != 0) {
    for (int j = 0; j < rank_; ++j) out[j] -= k * cartan_[j][i];
  }
  return out;
}

Weight RootSystem::dominant_representative(Weight lambda) const {
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i) {
      if (lambda[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return lambda;
    lambda = simple_reflection(neg, lambda);
  }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& lambda) const {
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::vector<Weight> out{lambda};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rank_; ++i) {
      if (out[head][i] == 0) continue;
      Weight w = simple_reflection(i, out[head]);
      if (seen.insert(w).second) out.push_back(w);
    }
  }
  return out;
}

std::vector<Rational> RootSystem::simple_root_coords(const Weight& lambda) const {
  std::vector<Rational> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(adj_[i][j]) * lambda[j];
    out[i] = Rational(s, det_);
  }
  return out;
}

Weight RootSystem::from_simple_root_coords(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != rank_) throw std::invalid_argument("simple-root coordinate length mismatch");
  Weight w(rank_);
  for (int j = 0; j < rank_; ++j)
    if (coords[j]) w += coords[j] * simple_[j];
  return w;
}

std::int64_t RootSystem::scaled_height(const Weight& lambda) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += height_functional_[j] * lambda[j];
  return s;
}

Rational RootSystem::height(const Weight& lambda) const { return Rational(scaled_height(lambda), det_); }

}  // namespace casimir
