#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "casimir/root_system.hpp"
#include "casimir/weight.hpp"

namespace casimir {

using Multiplicity = std::int64_t;
using WeightMap = std::unordered_map<Weight, Multiplicity, WeightHash>;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class IrreducibleCache;

/// Finite formal sum of weights with positive multiplicities. Holds a
/// non-owning pointer to its root system, which must outlive it.
class Character {
 public:
  explicit Character(const RootSystem& ambient) : ambient_(&ambient) {}
  Character(const RootSystem& ambient, WeightMap entries);

  const RootSystem& ambient() const { return *ambient_; }
  const WeightMap& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Multiplicity mult(const Weight& w) const;
  /// Adds delta to the multiplicity of w; entries reaching zero are erased.
  /// Throws std::logic_error if a multiplicity would become negative.
  void add(const Weight& w, Multiplicity delta);

  /// Sum of all multiplicities (the dimension of the module).
  Multiplicity mass() const;

  /// Entries sorted lexicographically by coordinates.
  std::vector<std::pair<Weight, Multiplicity>> sorted() const;

  /// Multiplicity is constant along every simple reflection.
  bool is_weyl_invariant() const;

  Character& operator+=(const Character& other);
  Character scaled(Multiplicity k) const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.ambient_->type() == b.ambient_->type() && a.entries_ == b.entries_;
  }

 private:
  const RootSystem* ambient_;
  WeightMap entries_;
};

/// Highest weights with multiplicities; ordered by coordinates.
struct Decomposition {
  std::map<Weight, Multiplicity> components;

  /// Sum of mult * weyl_dim over the components.
  BigInt dimension(const RootSystem& rs) const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Multiplicities of the dominant weights of V_lambda, ordered from lambda
/// downward (increasing height of lambda - mu, ties by coordinates).
std::vector<std::pair<Weight, Multiplicity>> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

/// Multiplicity of mu in V_lambda (Freudenthal). Throws std::invalid_argument
/// when lambda is not dominant.
Multiplicity freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);

Character irreducible_character(const RootSystem& rs, const Weight& lambda);

/// prod over positive roots alpha of (e^{-k alpha/2} + ... + e^{k alpha/2}),
/// expanded by sequential polynomial multiplication.
Character krho_box_character(const RootSystem& rs, int k);

/// Character of the i-th exterior power of the adjoint module, i.e. the i-th
/// elementary symmetric function of the n weights of g (roots plus l zeros).
/// Throws BudgetExceeded when binomial(n, i) > budget and std::out_of_range
/// for i outside [0, n].
Character exterior_power_character(const RootSystem& rs, int i, std::uint64_t budget = kDefaultBudget);

/// All exterior powers of degree 0..max_degree from a single pass.
std::vector<Character> exterior_power_characters(const RootSystem& rs, int max_degree,
                                                 std::uint64_t budget = kDefaultBudget);

/// Convolution. Throws std::invalid_argument if the root systems differ.
Character tensor_character(const Character& a, const Character& b);

/// Highest-weight peeling. Irreducible characters come from the cache when
/// one is supplied. Throws NotModuleCharacter if a residual multiplicity
/// goes negative or something is left over.
Decomposition decompose_character(const RootSystem& rs, const Character& chi, IrreducibleCache* cache = nullptr);

/// Sum of mult * irreducible_character(lambda).
Character reconstruct(const RootSystem& rs, const Decomposition& d, IrreducibleCache* cache = nullptr);

/// binomial(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

}  // namespace casimir
