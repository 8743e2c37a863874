#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "casimir/cartan_type.hpp"
#include "casimir/rational.hpp"
#include "casimir/weight.hpp"

namespace casimir {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Finite root system of a simple Lie algebra with the bilinear form on the
/// weight space induced by the Killing form.
///
/// Conventions: Bourbaki node numbering; cartan_matrix()[i][j] = <alpha_i^v, alpha_j>,
/// so the j-th simple root in fundamental coordinates is column j. Weights are
/// integer vectors in the fundamental-weight basis. Positive roots are sorted
/// by (height, simple-root coordinates) ascending; the last one is the
/// highest root.
///
/// The object is immutable once constructed.
class RootSystem {
 public:
  /// Throws std::invalid_argument for an illegal rank.
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  /// dim g = l + 2r
  int dimension() const { return rank_ + 2 * num_positive_roots(); }

  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  /// Simple-root coordinates of the idx-th positive root (nonnegative integers).
  const std::vector<int>& root_coords(int idx) const { return positive_coords_[static_cast<std::size_t>(idx)]; }
  int root_height(int idx) const { return positive_height_[static_cast<std::size_t>(idx)]; }
  std::optional<int> positive_root_index(const Weight& w) const;

  const Weight& highest_root() const { return positive_.back(); }
  const Weight& rho() const { return rho_; }

  /// (alpha_i, alpha_j) for simple roots under the Killing-induced form.
  const RationalMatrix& killing_gram() const { return killing_gram_; }

  /// Killing-induced inner product; throws std::invalid_argument when the
  /// ranks of the arguments do not match this system.
  Rational inner(const Weight& a, const Weight& b) const;

  /// Integer form with (a, b) = scaled_inner(a, b) / form_scale(). Used in
  /// hot loops where Rational arithmetic would dominate.
  std::int64_t scaled_inner(const Weight& a, const Weight& b) const;
  std::int64_t form_scale() const { return form_scale_; }
  /// Row of the integer Gram matrix in the fundamental basis, so that
  /// scaled_inner(a, b) = sum_j a_j * scaled_gram_row(b)_j after applying to b.
  std::vector<std::int64_t> scaled_dual(const Weight& b) const;

  /// Cas(lambda) = (lambda + rho, lambda + rho) - (rho, rho) = (lambda, lambda + 2 rho).
  Rational casimir(const Weight& lambda) const;
  std::int64_t scaled_casimir(const Weight& lambda) const;

  /// Weyl dimension formula. Throws std::invalid_argument for non-dominant input.
  BigInt weyl_dim(const Weight& lambda) const;

  /// s_i (0-based index). Throws std::out_of_range for a bad index.
  Weight simple_reflection(int i, const Weight& lambda) const;
  Weight dominant_representative(Weight lambda) const;
  std::vector<Weight> weyl_orbit(const Weight& lambda) const;

  std::vector<Rational> simple_root_coords(const Weight& lambda) const;
  Weight from_simple_root_coords(std::span<const int> coords) const;
  Rational height(const Weight& lambda) const;
  /// height(lambda) * cartan_determinant(); an exact integer.
  std::int64_t scaled_height(const Weight& lambda) const;
  int cartan_determinant() const { return det_; }

 private:
  void build_cartan_matrix();
  void generate_positive_roots();
  void build_form();

  CartanType type_;
  int rank_ = 0;
  IntMatrix cartan_;
  int det_ = 1;
  IntMatrix adj_;  // det * inverse Cartan matrix, integral
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::vector<std::vector<int>> positive_coords_;
  std::vector<int> positive_height_;
  std::unordered_map<Weight, int, WeightHash> positive_index_;
  Weight rho_;
  RationalMatrix killing_gram_;
  RationalMatrix fundamental_gram_;
  std::vector<std::vector<std::int64_t>> scaled_gram_;
  std::int64_t form_scale_ = 1;
  std::vector<std::int64_t> height_functional_;  // scaled_height(w) = <this, w>
};

}  // namespace casimir
