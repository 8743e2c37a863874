#include "casimir/character.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "casimir/cache.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

Multiplicity checked_add(Multiplicity a, Multiplicity b) {
  Multiplicity out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
  return out;
}

Multiplicity checked_mul(Multiplicity a, Multiplicity b) {
  Multiplicity out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
  return out;
}

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight rank does not match root system");
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight must be dominant, got " + lambda.str());
}

std::shared_ptr<const Character> irreducible(const RootSystem& rs, const Weight& lambda, IrreducibleCache* cache) {
  if (cache) return cache->get(lambda);
  return std::make_shared<const Character>(irreducible_character(rs, lambda));
}

}  // namespace

Character::Character(const RootSystem& ambient, WeightMap entries) : ambient_(&ambient), entries_(std::move(entries)) {
  for (const auto& [w, m] : entries_) {
    if (m <= 0) throw std::invalid_argument("character multiplicities must be positive");
    if (w.rank() != ambient.rank()) throw std::invalid_argument("character weight rank mismatch");
  }
}

Multiplicity Character::mult(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

void Character::add(const Weight& w, Multiplicity delta) {
  if (delta == 0) return;
  auto [it, inserted] = entries_.try_emplace(w, 0);
  const Multiplicity v = checked_add(it->second, delta);
  if (v < 0) {
    if (inserted) entries_.erase(it);
    throw std::logic_error("character multiplicity would become negative at " + w.str());
  }
  if (v == 0) {
    entries_.erase(it);
  } else {
    it->second = v;
  }
}

Multiplicity Character::mass() const {
  Multiplicity s = 0;
  for (const auto& [w, m] : entries_) s = checked_add(s, m);
  return s;
}

std::vector<std::pair<Weight, Multiplicity>> Character::sorted() const {
  std::vector<std::pair<Weight, Multiplicity>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Character::is_weyl_invariant() const {
  for (const auto& [w, m] : entries_) {
    for (int i = 0; i < ambient_->rank(); ++i) {
      if (mult(ambient_->simple_reflection(i, w)) != m) return false;
    }
  }
  return true;
}

Character& Character::operator+=(const Character& other) {
  if (ambient_->type() != other.ambient_->type()) throw std::invalid_argument("characters of different root systems");
  for (const auto& [w, m] : other.entries_) add(w, m);
  return *this;
}

Character Character::scaled(Multiplicity k) const {
  if (k < 0) throw std::invalid_argument("negative scale for a character");
  Character out(*ambient_);
  if (k == 0) return out;
  for (const auto& [w, m] : entries_) out.entries_.emplace(w, checked_mul(m, k));
  return out;
}

BigInt Decomposition::dimension(const RootSystem& rs) const {
  BigInt total = 0;
  for (const auto& [lambda, m] : components) total += rs.weyl_dim(lambda) * m;
  return total;
}

std::vector<std::pair<Weight, Multiplicity>> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const auto& positive = rs.positive_roots();

  // Dominant weights below lambda are connected to lambda by chains of
  // dominant weights whose successive differences are positive roots.
  std::unordered_map<Weight, Multiplicity, WeightHash> table{{lambda, 0}};
  std::vector<Weight> order{lambda};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& alpha : positive) {
      Weight v = order[head] - alpha;
      if (v.is_dominant() && table.emplace(v, 0).second) order.push_back(v);
    }
  }
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    const auto ha = rs.scaled_height(a), hb = rs.scaled_height(b);
    return ha != hb ? ha > hb : a > b;
  });

  const Weight& rho = rs.rho();
  const std::int64_t top = rs.scaled_inner(lambda + rho, lambda + rho);
  table[lambda] = 1;
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& mu = order[idx];
    // 2 * sum_{alpha > 0} sum_{k >= 1} (mu + k alpha, alpha) m(mu + k alpha)
    std::int64_t sum = 0;
    for (const auto& alpha : positive) {
      Weight v = mu + alpha;
      while (true) {
        auto it = table.find(rs.dominant_representative(v));
        if (it == table.end()) break;
        sum += rs.scaled_inner(v, alpha) * it->second;
        v += alpha;
      }
    }
    const std::int64_t denom = top - rs.scaled_inner(mu + rho, mu + rho);
    if (denom <= 0 || (2 * sum) % denom != 0) {
      throw std::logic_error("Freudenthal recursion is not integral at " + mu.str());
    }
    table[mu] = 2 * sum / denom;
  }

  std::vector<std::pair<Weight, Multiplicity>> out;
  out.reserve(order.size());
  for (const auto& w : order) out.emplace_back(w, table.at(w));
  return out;
}

Multiplicity freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  require_dominant(rs, lambda);
  const Weight dom = rs.dominant_representative(mu);
  for (const auto& [w, m] : dominant_multiplicities(rs, lambda)) {
    if (w == dom) return m;
  }
  return 0;
}

Character irreducible_character(const RootSystem& rs, const Weight& lambda) {
  Character out(rs);
  WeightMap entries;
  for (const auto& [dom, m] : dominant_multiplicities(rs, lambda)) {
    if (m == 0) continue;
    for (const auto& w : rs.weyl_orbit(dom)) entries.emplace(w, m);
  }
  return Character(rs, std::move(entries));
}

Character krho_box_character(const RootSystem& rs, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  // Expand prod_alpha (1 + e^alpha + ... + e^{k alpha}) and shift by -k rho.
  WeightMap poly{{Weight(rs.rank()), 1}};
  for (const auto& alpha : rs.positive_roots()) {
    WeightMap next;
    next.reserve(poly.size() * static_cast<std::size_t>(k + 1));
    for (const auto& [w, c] : poly) {
      Weight v = w;
      for (int j = 0; j <= k; ++j) {
        auto& slot = next[v];
        slot = checked_add(slot, c);
        v += alpha;
      }
    }
    poly = std::move(next);
  }
  const Weight shift = k * rs.rho();
  WeightMap shifted;
  shifted.reserve(poly.size());
  for (const auto& [w, c] : poly) shifted.emplace(w - shift, c);
  return Character(rs, std::move(shifted));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<Character> exterior_power_characters(const RootSystem& rs, int max_degree, std::uint64_t budget) {
  const int n = rs.dimension();
  if (max_degree < 0 || max_degree > n) throw std::out_of_range("exterior degree out of range");
  for (int i = 0; i <= max_degree; ++i) {
    if (binomial(n, i) > budget) {
      throw BudgetExceeded("exterior power of degree " + std::to_string(i) + " for " + rs.type().name() +
                           " exceeds the budget of " + std::to_string(budget) + " terms");
    }
  }
  std::vector<Weight> basis;
  for (const auto& a : rs.positive_roots()) basis.push_back(a);
  for (const auto& a : rs.positive_roots()) basis.push_back(-a);
  for (int j = 0; j < rs.rank(); ++j) basis.emplace_back(rs.rank());

  std::vector<WeightMap> layers(static_cast<std::size_t>(max_degree + 1));
  layers[0].emplace(Weight(rs.rank()), 1);
  int processed = 0;
  for (const auto& gamma : basis) {
    ++processed;
    for (int j = std::min(processed, max_degree); j >= 1; --j) {
      auto& dst = layers[static_cast<std::size_t>(j)];
      for (const auto& [w, c] : layers[static_cast<std::size_t>(j - 1)]) {
        auto& slot = dst[w + gamma];
        slot += c;
      }
    }
  }
  std::vector<Character> out;
  out.reserve(layers.size());
  for (auto& layer : layers) out.emplace_back(rs, std::move(layer));
  return out;
}

Character exterior_power_character(const RootSystem& rs, int i, std::uint64_t budget) {
  const int n = rs.dimension();
  if (i < 0 || i > n) throw std::out_of_range("exterior degree out of range");
  if (binomial(n, i) > budget) {
    throw BudgetExceeded("exterior power of degree " + std::to_string(i) + " for " + rs.type().name() +
                         " exceeds the budget of " + std::to_string(budget) + " terms");
  }
  // Lambda^i and Lambda^{n-i} are related by negating weights.
  if (2 * i > n) {
    Character dual = exterior_power_character(rs, n - i, budget);
    WeightMap negated;
    for (const auto& [w, m] : dual.entries()) negated.emplace(-w, m);
    return Character(rs, std::move(negated));
  }
  return std::move(exterior_power_characters(rs, i, std::numeric_limits<std::uint64_t>::max()).back());
}

Character tensor_character(const Character& a, const Character& b) {
  if (a.ambient().type() != b.ambient().type()) throw std::invalid_argument("tensor of characters of different root systems");
  WeightMap out;
  out.reserve(a.size() * b.size());
  for (const auto& [wa, ma] : a.entries()) {
    for (const auto& [wb, mb] : b.entries()) {
      auto& slot = out[wa + wb];
      slot = checked_add(slot, checked_mul(ma, mb));
    }
  }
  return Character(a.ambient(), std::move(out));
}

Decomposition decompose_character(const RootSystem& rs, const Character& chi, IrreducibleCache* cache) {
  if (chi.ambient().type() != rs.type()) throw std::invalid_argument("character belongs to a different root system");
  WeightMap residual = chi.entries();

  std::vector<Weight> candidates;
  for (const auto& [w, m] : residual)
    if (w.is_dominant()) candidates.push_back(w);
  // Peeling lambda only touches weights strictly below lambda, so a single
  // pass in decreasing height visits every highest weight after its
  // ancestors have been removed.
  std::sort(candidates.begin(), candidates.end(), [&](const Weight& a, const Weight& b) {
    const auto ha = rs.scaled_height(a), hb = rs.scaled_height(b);
    return ha != hb ? ha > hb : a > b;
  });

  Decomposition out;
  for (const auto& lambda : candidates) {
    auto it = residual.find(lambda);
    if (it == residual.end() || it->second == 0) continue;
    const Multiplicity m = it->second;
    if (m < 0) throw NotModuleCharacter("negative residual multiplicity at " + lambda.str());
    out.components.emplace(lambda, m);
    const auto irr = irreducible(rs, lambda, cache);
    for (const auto& [w, c] : irr->entries()) {
      auto slot = residual.find(w);
      if (slot == residual.end()) throw NotModuleCharacter("weight " + w.str() + " missing while peeling " + lambda.str());
      slot->second -= m * c;
      if (slot->second < 0) throw NotModuleCharacter("negative residual multiplicity at " + w.str());
    }
  }
  for (const auto& [w, m] : residual) {
    if (m != 0) throw NotModuleCharacter("residual left at " + w.str() + " after peeling");
  }
  return out;
}

Character reconstruct(const RootSystem& rs, const Decomposition& d, IrreducibleCache* cache) {
  Character out(rs);
  for (const auto& [lambda, m] : d.components) out += irreducible(rs, lambda, cache)->scaled(m);
  return out;
}

}  // namespace casimir
