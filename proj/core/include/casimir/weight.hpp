#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace casimir {

inline constexpr int kMaxRank = 8;

/// Integral weight in the fundamental-weight basis. Storage is inline so
/// weights can be hashed and copied without allocation; the rank must match
/// the ambient root system.
class Weight {
 public:
  using Coord = std::int32_t;

  Weight() = default;
  explicit Weight(int rank) : rank_(static_cast<std::uint8_t>(rank)) { assert(rank >= 0 && rank <= kMaxRank); }
  Weight(std::initializer_list<int> coords) : rank_(static_cast<std::uint8_t>(coords.size())) {
    assert(coords.size() <= static_cast<std::size_t>(kMaxRank));
    std::copy(coords.begin(), coords.end(), c_.begin());
  }
  explicit Weight(std::span<const int> coords) : rank_(static_cast<std::uint8_t>(coords.size())) {
    assert(coords.size() <= static_cast<std::size_t>(kMaxRank));
    std::copy(coords.begin(), coords.end(), c_.begin());
  }

  int rank() const { return rank_; }
  Coord operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Coord& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  std::span<const Coord> coords() const { return {c_.data(), rank_}; }

  bool is_dominant() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](Coord x) { return x >= 0; });
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](Coord x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o) {
    assert(rank_ == o.rank_);
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    assert(rank_ == o.rank_);
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(int k) {
    for (int i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  Weight operator-() const {
    Weight w(*this);
    w *= -1;
    return w;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.rank_ == b.rank_ && std::equal(a.c_.begin(), a.c_.begin() + a.rank_, b.c_.begin());
  }
  /// Lexicographic on coordinates (rank first).
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.rank_, b.c_.begin(),
                                                  b.c_.begin() + b.rank_);
  }

  /// "[1,0,-2]"
  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s + "]";
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ rank_;
    for (int i = 0; i < rank_; ++i) {
      h ^= static_cast<std::uint32_t>(c_[i]);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<Coord, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace casimir
