#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "casimir/cache.hpp"
#include "casimir/character.hpp"
#include "casimir/errors.hpp"

using namespace casimir;

namespace {

using Partition = std::vector<int>;

// Number of semistandard tableaux of shape lambda whose last entry is
// `letters`, with content c, by peeling horizontal strips.
long kostka(const Partition& lambda, const std::vector<int>& content, std::size_t letters) {
  if (letters == 0) return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; }) ? 1 : 0;
  const int strip = content[letters - 1];
  long total = 0;
  Partition mu(lambda.size());
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == lambda.size()) {
      if (left == 0) total += kostka(mu, content, letters - 1);
      return;
    }
    const int floor = row + 1 < lambda.size() ? lambda[row + 1] : 0;
    for (int v = lambda[row]; v >= floor && lambda[row] - v <= left; --v) {
      mu[row] = v;
      self(self, row + 1, left - (lambda[row] - v));
    }
  };
  rec(rec, 0, strip);
  return total;
}

// Weight multiplicity in type A_l via Kostka numbers.
long type_a_multiplicity(const Weight& lambda, const Weight& mu) {
  const int l = lambda.rank();
  Partition shape(static_cast<std::size_t>(l + 1), 0);
  for (int i = l - 1; i >= 0; --i) shape[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i + 1)] + lambda[i];
  const int boxes = std::accumulate(shape.begin(), shape.end(), 0);
  int weighted = 0;
  for (int j = 0; j < l; ++j) weighted += (j + 1) * mu[j];
  if ((boxes - weighted) % (l + 1) != 0) return 0;
  std::vector<int> content(static_cast<std::size_t>(l + 1));
  content[static_cast<std::size_t>(l)] = (boxes - weighted) / (l + 1);
  for (int i = l - 1; i >= 0; --i) content[static_cast<std::size_t>(i)] = content[static_cast<std::size_t>(i + 1)] + mu[i];
  for (int c : content)
    if (c < 0) return 0;
  return kostka(shape, content, content.size());
}

// Exterior power by direct subset enumeration of the weights of g.
Character exterior_by_subsets(const RootSystem& rs, int degree) {
  std::vector<Weight> weights;
  for (const auto& a : rs.positive_roots()) {
    weights.push_back(a);
    weights.push_back(-a);
  }
  for (int j = 0; j < rs.rank(); ++j) weights.emplace_back(rs.rank());
  Character chi(rs);
  const auto n = weights.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != degree) continue;
    Weight sum(rs.rank());
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> b & 1U) sum += weights[b];
    chi.add(sum, 1);
  }
  return chi;
}

}  // namespace

TEST_CASE("A1 irreducibles") {
  const RootSystem rs(CartanType{Series::A, 1});
  for (int k = 0; k <= 6; ++k) {
    const auto chi = irreducible_character(rs, Weight{k});
    CHECK(chi.size() == static_cast<std::size_t>(k + 1));
    for (int j = -k; j <= k; j += 2) CHECK(chi.mult(Weight{j}) == 1);
  }
}

TEST_CASE("Freudenthal agrees with Kostka numbers in type A") {
  for (const char* name : {"A2", "A3", "A4"}) {
    const RootSystem rs(CartanType::parse(name));
    const int l = rs.rank();
    std::vector<Weight> highest;
    if (l == 2) highest = {Weight{1, 1}, Weight{2, 2}, Weight{3, 0}, Weight{2, 1}, Weight{4, 2}, Weight{0, 5}};
    if (l == 3) highest = {Weight{1, 1, 1}, Weight{2, 0, 1}, Weight{0, 2, 0}, Weight{1, 2, 1}, Weight{3, 0, 0}};
    if (l == 4) highest = {Weight{1, 1, 1, 1}, Weight{0, 2, 0, 1}};
    for (const auto& lambda : highest) {
      CAPTURE(lambda.str());
      const auto chi = irreducible_character(rs, lambda);
      CHECK(BigInt(chi.mass()) == rs.weyl_dim(lambda));
      for (const auto& [mu, m] : chi.entries()) CHECK(m == type_a_multiplicity(lambda, mu));
      // Weights just outside the support.
      for (const auto& a : rs.positive_roots()) {
        const Weight above = lambda + a;
        CHECK(freudenthal_multiplicity(rs, lambda, above) == 0);
        CHECK(type_a_multiplicity(lambda, above) == 0);
      }
    }
  }
}

TEST_CASE("adjoint characters") {
  for (const char* name : {"A1", "B2", "G2", "D4", "F4"}) {
    const RootSystem rs(CartanType::parse(name));
    const auto chi = irreducible_character(rs, rs.highest_root());
    CHECK(chi.mult(Weight(rs.rank())) == rs.rank());
    for (const auto& a : rs.positive_roots()) {
      CHECK(chi.mult(a) == 1);
      CHECK(chi.mult(-a) == 1);
    }
    CHECK(chi.mass() == rs.dimension());
  }
}

TEST_CASE("irreducible characters are Weyl invariant") {
  for (const char* name : {"B3", "C3", "G2"}) {
    const RootSystem rs(CartanType::parse(name));
    CHECK(irreducible_character(rs, rs.rho()).is_weyl_invariant());
  }
}

TEST_CASE("Freudenthal rejects non-dominant highest weights") {
  const RootSystem rs(CartanType{Series::A, 2});
  CHECK_THROWS_AS(freudenthal_multiplicity(rs, Weight{1, -1}, Weight{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(irreducible_character(rs, Weight{-1, 0}), std::invalid_argument);
}

TEST_CASE("box character equals V_{k rho}") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    const RootSystem rs(CartanType::parse(name));
    for (int k = 0; k <= 3; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto box = krho_box_character(rs, k);
      CHECK(box == irreducible_character(rs, k * rs.rho()));
      std::int64_t expected = 1;
      for (int j = 0; j < rs.num_positive_roots(); ++j) expected *= k + 1;
      CHECK(box.mass() == expected);
    }
  }
}

TEST_CASE("exterior powers match subset enumeration") {
  for (const char* name : {"A1", "A2", "B2"}) {
    const RootSystem rs(CartanType::parse(name));
    const auto all = exterior_power_characters(rs, rs.dimension());
    for (int i = 0; i <= rs.dimension(); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      const auto expected = exterior_by_subsets(rs, i);
      CHECK(exterior_power_character(rs, i) == expected);
      CHECK(all[static_cast<std::size_t>(i)] == expected);
      CHECK(static_cast<std::uint64_t>(expected.mass()) == binomial(rs.dimension(), i));
    }
  }
}

TEST_CASE("exterior power guards") {
  const RootSystem rs(CartanType{Series::E, 8});
  CHECK_THROWS_AS(exterior_power_character(rs, 10, 1000), BudgetExceeded);
  CHECK(exterior_power_character(rs, 1).mass() == 248);
  const RootSystem a2(CartanType{Series::A, 2});
  CHECK_THROWS_AS(exterior_power_character(a2, 9), std::out_of_range);
  CHECK_THROWS_AS(exterior_power_character(a2, -1), std::out_of_range);
}

TEST_CASE("tensor products and decomposition") {
  const RootSystem rs(CartanType{Series::A, 2});
  const auto v = irreducible_character(rs, Weight{1, 0});
  const auto vv = tensor_character(v, v);
  CHECK(vv.mass() == 9);
  const auto d = decompose_character(rs, vv);
  CHECK(d.components == std::map<Weight, Multiplicity>{{Weight{0, 1}, 1}, {Weight{2, 0}, 1}});
  CHECK(d.dimension(rs) == 9);
  CHECK(reconstruct(rs, d) == vv);

  // 8 x 8 = 27 + 10 + 10bar + 2*8 + 1
  const auto adj = irreducible_character(rs, Weight{1, 1});
  const auto aa = decompose_character(rs, tensor_character(adj, adj));
  CHECK(aa.components == std::map<Weight, Multiplicity>{
                             {Weight{0, 0}, 1}, {Weight{0, 3}, 1}, {Weight{1, 1}, 2}, {Weight{2, 2}, 1}, {Weight{3, 0}, 1}});

  const RootSystem b2(CartanType{Series::B, 2});
  CHECK_THROWS_AS(tensor_character(v, irreducible_character(b2, Weight{1, 0})), std::invalid_argument);
}

TEST_CASE("decomposition rejects non-module characters") {
  const RootSystem rs(CartanType{Series::A, 1});
  Character bad(rs);
  bad.add(Weight{2}, 1);
  bad.add(Weight{0}, 1);
  CHECK_THROWS_AS(decompose_character(rs, bad), NotModuleCharacter);
  Character lopsided(rs);
  lopsided.add(Weight{1}, 1);
  CHECK_THROWS_AS(decompose_character(rs, lopsided), NotModuleCharacter);
  Character c(rs);
  CHECK_THROWS_AS(c.add(Weight{0}, -1), std::logic_error);
}

TEST_CASE("random characters: mass is conserved by decomposition") {
  std::mt19937 gen(20261018);
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem rs(CartanType::parse(name));
    std::uniform_int_distribution<int> coord(0, 2);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int trial = 0; trial < 5; ++trial) {
      Character chi(rs);
      std::map<Weight, Multiplicity> expected;
      for (int t = 0; t < 3; ++t) {
        Weight w(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) w[j] = coord(gen);
        const int m = mult(gen);
        expected[w] += m;
        chi += irreducible_character(rs, w).scaled(m);
      }
      const auto d = decompose_character(rs, chi);
      CHECK(d.components == expected);
      CHECK(d.dimension(rs) == BigInt(chi.mass()));
    }
  }
}

TEST_CASE("every lower weight has smaller Casimir value") {
  std::mt19937 gen(7);
  for (const auto& t : simple_types_up_to_rank(3)) {
    const RootSystem rs(t);
    std::uniform_int_distribution<int> coord(0, 2);
    for (int trial = 0; trial < 8; ++trial) {
      Weight lambda(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) lambda[j] = coord(gen);
      const Rational top = rs.casimir(lambda);
      const auto chi = irreducible_character(rs, lambda);
      for (const auto& [mu, m] : chi.entries())
        if (mu != lambda) CHECK(rs.casimir(mu) < top);
    }
  }
}

TEST_CASE("irreducible cache memoizes") {
  const RootSystem rs(CartanType{Series::B, 3});
  IrreducibleCache cache(rs, std::nullopt);
  const auto a = cache.get(rs.rho());
  const auto b = cache.get(rs.rho());
  CHECK(a.get() == b.get());
  CHECK(cache.computed() == 1);
  CHECK(*a == irreducible_character(rs, rs.rho()));
}
