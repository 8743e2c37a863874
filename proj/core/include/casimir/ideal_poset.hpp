#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "casimir/root_system.hpp"

namespace casimir {

/// Subset of the positive roots, indexed by position in
/// RootSystem::positive_roots(). Ordered lexicographically as a bit string
/// read from root 0 upward: at the first root where two sets differ, the set
/// lacking it is smaller.
class RootSet {
 public:
  static constexpr int kCapacity = 128;

  bool test(int i) const { return (words_[word(i)] >> bit(i)) & 1U; }
  void set(int i) { words_[word(i)] |= std::uint64_t{1} << bit(i); }
  void reset(int i) { words_[word(i)] &= ~(std::uint64_t{1} << bit(i)); }
  int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  bool empty() const { return (words_[0] | words_[1]) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < kCapacity; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const RootSet&, const RootSet&) = default;
  friend std::strong_ordering operator<=>(const RootSet& a, const RootSet& b) {
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[w] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

 private:
  static std::size_t word(int i) { return static_cast<std::size_t>(i) >> 6; }
  static unsigned bit(int i) { return static_cast<unsigned>(i) & 63U; }
  std::array<std::uint64_t, 2> words_{};
};

/// Ad-nilpotent ideal of the Borel subalgebra, stored as the upper set of
/// positive roots whose root spaces it spans.
struct NilIdeal {
  RootSet members;

  int size() const { return members.count(); }
  bool contains(int root) const { return members.test(root); }
  friend auto operator<=>(const NilIdeal&, const NilIdeal&) = default;
};

/// The positive roots under alpha <= beta iff beta - alpha is a nonnegative
/// combination of simple roots. Covers are alpha < alpha + alpha_i.
class RootPoset {
 public:
  explicit RootPoset(const RootSystem& rs);

  int size() const { return static_cast<int>(coords_.size()); }
  /// (lower, upper) index pairs.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& lower_covers(int i) const { return down_[static_cast<std::size_t>(i)]; }
  bool leq(int a, int b) const;
  std::vector<int> maximal() const;
  std::vector<int> minimal() const;
  bool is_upper_set(const RootSet& s) const;

 private:
  std::vector<std::vector<int>> coords_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
};

/// All upper sets (of the given size, or every size), sorted ascending by
/// RootSet order, without duplicates. Throws std::out_of_range for a size
/// outside [0, r].
std::vector<NilIdeal> enumerate_ideals(const RootSystem& rs, std::optional<int> size = std::nullopt);

/// Sum of the member roots.
Weight ideal_weight_sum(const RootSystem& rs, const NilIdeal& ideal);

/// Label of a weight-vector basis element of g: x_j (root j), y_j (minus
/// root j) or h_j (Cartan). Indices are 0-based; str() prints them 1-based.
struct BasisLabel {
  enum class Kind : std::uint8_t { X, Y, H };
  Kind kind = Kind::X;
  int index = 0;

  static BasisLabel x(int j) { return {Kind::X, j}; }
  static BasisLabel y(int j) { return {Kind::Y, j}; }
  static BasisLabel h(int j) { return {Kind::H, j}; }

  std::string str() const;
  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

/// Weight of a basis element.
Weight label_weight(const RootSystem& rs, const BasisLabel& label);

/// The n basis labels in the order x_1..x_r, y_1..y_r, h_1..h_l.
std::vector<BasisLabel> basis_labels(const RootSystem& rs);

/// Whether the span of the labelled basis vectors is stable under ad(b).
/// Brackets are decided from root arithmetic alone: [x_a, x_b] ~ x_{a+b},
/// [x_a, y_b] ~ x_{a-b} or y_{b-a}, [x_a, y_a] is a coroot, and [x_a, h] is a
/// nonzero multiple of x_a. The Cartan labels h_j are treated as a generic
/// basis of h, so a coroot lies in their span only if all of them are present.
/// Throws std::invalid_argument on an out-of-range label.
bool is_b_normal(const RootSystem& rs, std::span<const BasisLabel> labels);

/// True iff ideal_weight_sum is injective over all ideals.
bool verify_weight_sum_injectivity(const RootSystem& rs);

/// Member roots of an ideal as simple-root coordinate vectors, sorted.
std::vector<std::vector<int>> ideal_root_coords(const RootSystem& rs, const NilIdeal& ideal);

}  // namespace casimir
